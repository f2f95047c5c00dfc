#pragma once

#include <optional>
#include <vector>

#include "cfex/algebra.hpp"
#include "cfex/dataset.hpp"
#include "cfex/literal.hpp"

namespace cfex {

/// A subset psi of the query instance such that every sample row containing
/// psi shares the query's label.
struct FactualExplanation {
    LiteralSet psi;
    std::vector<RowIndex> supporting_rows;  // rows containing psi (all share the query label)
};

/// psi = b \ a for a witness b with a different label: the literal changes
/// turning the query into an observed, differently-labeled instance.
struct CounterfactualExplanation {
    LiteralSet psi;
    RowIndex witness = 0;
    int distance = 0;      // = |psi| = H(a, witness)
    ClassId target_label = 0;
};

/// True iff psi is a subset of the query row and every row containing psi
/// has the query's label (vacuously true when no row contains psi). With
/// require_subset = false, psi is tested as a global condition for the
/// query's class and need not be drawn from the query row.
bool is_factual(const LabeledSample& s, RowIndex query, const LiteralSet& psi,
                bool require_subset = true);

/// All subset-minimal factual explanations of size <= max_size, found
/// breadth-first by size, so no returned psi contains another.
std::vector<FactualExplanation> minimal_factuals(const LabeledSample& s, RowIndex query,
                                                 int max_size = 3);

/// The literals of b on the features where a and b disagree. Throws when
/// a == b (the explanation would be empty).
LiteralSet counterfactual_of(std::span<const ValueId> a, std::span<const ValueId> b);

/// One counterfactual explanation per counter-set row, ascending by
/// (distance, row index). Empty iff the counter-set is empty.
std::vector<CounterfactualExplanation> all_counterfactuals(const LabeledSample& s, RowIndex query);

/// The counterfactuals whose witnesses attain the minimum Hamming distance
/// (nearest unlike neighbors). Empty when the counter-set is empty.
std::vector<CounterfactualExplanation> minimal_counterfactuals(const LabeledSample& s,
                                                               RowIndex query);

/// A strictly smaller realized counterfactual c \ a contained in psi, if one
/// exists; minimal counterfactuals always reduce to none. Ties resolve to
/// the smallest (distance, row index).
std::optional<CounterfactualExplanation> is_reducible(const LabeledSample& s, RowIndex query,
                                                      const CounterfactualExplanation& psi);

/// Per-literal reading of irreducibility: for every literal l of psi there is
/// a row with the query's label containing psi minus l. Kept alongside
/// is_reducible because the two readings disagree on some samples; see the
/// tests for pinned behavior of both.
bool is_irreducible_literal_drop(const LabeledSample& s, RowIndex query, const LiteralSet& psi);

}  // namespace cfex
