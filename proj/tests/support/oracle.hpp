#pragma once

// Brute-force reference implementations, written as plainly as possible and
// sharing no algorithmic code with the library: everything is nested loops
// over materialized rows. The library must agree with these exactly.

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "cfex/dataset.hpp"

namespace testsupport {

inline int oracle_distance(const std::vector<cfex::ValueId>& a, const std::vector<cfex::ValueId>& b) {
    int d = 0;
    for (std::size_t f = 0; f < a.size(); ++f) d += a[f] != b[f] ? 1 : 0;
    return d;
}

inline std::vector<std::vector<cfex::ValueId>> oracle_rows(const cfex::LabeledSample& s) {
    std::vector<std::vector<cfex::ValueId>> rows;
    for (cfex::RowIndex i = 0; i < s.row_count(); ++i) {
        const auto r = s.row(i);
        rows.emplace_back(r.begin(), r.end());
    }
    return rows;
}

/// Witness rows at the minimum Hamming distance among differently-labeled
/// rows, ascending; empty when none differ in label.
inline std::vector<cfex::RowIndex> oracle_minimal_witnesses(const cfex::LabeledSample& s,
                                                            cfex::RowIndex q) {
    const auto rows = oracle_rows(s);
    int best = static_cast<int>(rows[q].size()) + 1;
    std::vector<cfex::RowIndex> out;
    for (cfex::RowIndex i = 0; i < s.row_count(); ++i) {
        if (s.label(i) == s.label(q)) continue;
        const int d = oracle_distance(rows[q], rows[i]);
        if (d < best) {
            best = d;
            out.clear();
        }
        if (d == best) out.push_back(i);
    }
    return out;
}

inline int oracle_power(const cfex::LabeledSample& s, cfex::RowIndex b, cfex::RowIndex q) {
    const auto rows = oracle_rows(s);
    const int radius = oracle_distance(rows[q], rows[b]);
    int power = 0;
    for (cfex::RowIndex i = 0; i < s.row_count(); ++i) {
        if (s.label(i) != s.label(b) && oracle_distance(rows[i], rows[b]) <= radius) ++power;
    }
    return power;
}

/// Optimal counterfactual witness: maximum power among minimal witnesses,
/// ties to the lowest row index. Call only when witnesses exist.
inline cfex::RowIndex oracle_optimal(const cfex::LabeledSample& s, cfex::RowIndex q) {
    const auto witnesses = oracle_minimal_witnesses(s, q);
    cfex::RowIndex best = witnesses.front();
    int best_power = oracle_power(s, best, q);
    for (const cfex::RowIndex w : witnesses) {
        const int p = oracle_power(s, w, q);
        if (p > best_power) {
            best = w;
            best_power = p;
        }
    }
    return best;
}

struct OracleFraction {
    long long num = 0;
    long long den = 1;
};

inline OracleFraction oracle_typicality(const cfex::LabeledSample& s, cfex::RowIndex q,
                                        cfex::RowIndex b) {
    const auto rows = oracle_rows(s);
    const int radius = oracle_distance(rows[q], rows[b]);
    OracleFraction f{0, 0};
    for (cfex::RowIndex i = 0; i < s.row_count(); ++i) {
        if (s.label(i) != s.label(b)) continue;
        f.den += 1;
        if (oracle_distance(rows[i], rows[b]) <= radius) f.num += 1;
    }
    return f;
}

inline OracleFraction oracle_capacity(const cfex::LabeledSample& s, cfex::RowIndex q,
                                      cfex::RowIndex b) {
    const auto rows = oracle_rows(s);
    const int radius = oracle_distance(rows[q], rows[b]);
    OracleFraction f{0, 0};
    for (cfex::RowIndex i = 0; i < s.row_count(); ++i) {
        if (oracle_distance(rows[i], rows[b]) > radius) continue;
        f.den += 1;
        if (s.label(i) != s.label(b)) f.num += 1;
    }
    return f;
}

inline OracleFraction oracle_universality(const cfex::LabeledSample& s, cfex::RowIndex q,
                                          cfex::RowIndex b) {
    const auto rows = oracle_rows(s);
    const int radius = oracle_distance(rows[q], rows[b]);
    OracleFraction f{0, 0};
    for (cfex::RowIndex i = 0; i < s.row_count(); ++i) {
        if (oracle_distance(rows[i], rows[b]) > radius) continue;
        f.den += 1;
        if (s.label(i) == s.label(q)) f.num += 1;
    }
    return f;
}

/// Feature masks of all subset-minimal factual explanations of size 1..max_size,
/// by exhaustive subset enumeration.
inline std::set<std::uint64_t> oracle_minimal_factual_masks(const cfex::LabeledSample& s,
                                                            cfex::RowIndex q, int max_size) {
    const auto rows = oracle_rows(s);
    const int n = static_cast<int>(rows[q].size());
    std::vector<std::uint64_t> factual;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        int size = 0;
        for (int f = 0; f < n; ++f) size += (mask >> f) & 1U ? 1 : 0;
        if (size > max_size) continue;
        bool ok = true;
        for (cfex::RowIndex i = 0; i < s.row_count() && ok; ++i) {
            bool contains = true;
            for (int f = 0; f < n; ++f) {
                if (((mask >> f) & 1U) && rows[i][static_cast<std::size_t>(f)] != rows[q][static_cast<std::size_t>(f)]) {
                    contains = false;
                    break;
                }
            }
            if (contains && s.label(i) != s.label(q)) ok = false;
        }
        if (ok) factual.push_back(mask);
    }
    std::set<std::uint64_t> minimal;
    for (const std::uint64_t m : factual) {
        bool is_minimal = true;
        for (const std::uint64_t other : factual) {
            if (other != m && (other & m) == other) {
                is_minimal = false;
                break;
            }
        }
        if (is_minimal) minimal.insert(m);
    }
    return minimal;
}

}  // namespace testsupport
