#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace cfex {

/// Set of feature indices over a universe of at most 64 features, backed by a
/// single 64-bit mask. Feature indices are 0-based throughout the library and
/// rendered 1-based or by name only at the output boundary.
class FeatureSet {
public:
    static constexpr int kMaxFeatures = 64;

    FeatureSet() = default;

    FeatureSet(std::initializer_list<int> features) {
        for (int f : features) add(f);
    }

    /// The full universe {0, ..., n-1}.
    static FeatureSet full(int n) {
        if (n < 0 || n > kMaxFeatures) {
            throw std::out_of_range("FeatureSet::full: universe size out of range");
        }
        FeatureSet s;
        s.bits_ = (n == kMaxFeatures) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        return s;
    }

    static FeatureSet from_bits(std::uint64_t bits) {
        FeatureSet s;
        s.bits_ = bits;
        return s;
    }

    void add(int feature) {
        check_index(feature);
        bits_ |= std::uint64_t{1} << feature;
    }

    void remove(int feature) {
        check_index(feature);
        bits_ &= ~(std::uint64_t{1} << feature);
    }

    [[nodiscard]] bool contains(int feature) const {
        check_index(feature);
        return (bits_ >> feature) & 1U;
    }

    [[nodiscard]] int size() const { return std::popcount(bits_); }
    [[nodiscard]] bool empty() const { return bits_ == 0; }
    [[nodiscard]] std::uint64_t bits() const { return bits_; }

    [[nodiscard]] bool subset_of(FeatureSet other) const { return (bits_ & ~other.bits_) == 0; }
    [[nodiscard]] bool intersects(FeatureSet other) const { return (bits_ & other.bits_) != 0; }

    [[nodiscard]] FeatureSet operator|(FeatureSet o) const { return from_bits(bits_ | o.bits_); }
    [[nodiscard]] FeatureSet operator&(FeatureSet o) const { return from_bits(bits_ & o.bits_); }
    [[nodiscard]] FeatureSet operator-(FeatureSet o) const { return from_bits(bits_ & ~o.bits_); }

    bool operator==(const FeatureSet&) const = default;

    /// Elements in ascending order.
    [[nodiscard]] std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t m = bits_; m != 0; m &= m - 1) {
            out.push_back(std::countr_zero(m));
        }
        return out;
    }

    class iterator {
    public:
        explicit iterator(std::uint64_t bits) : bits_(bits) {}
        int operator*() const { return std::countr_zero(bits_); }
        iterator& operator++() {
            bits_ &= bits_ - 1;
            return *this;
        }
        bool operator!=(const iterator& o) const { return bits_ != o.bits_; }

    private:
        std::uint64_t bits_;
    };

    [[nodiscard]] iterator begin() const { return iterator(bits_); }
    [[nodiscard]] iterator end() const { return iterator(0); }

private:
    static void check_index(int feature) {
        if (feature < 0 || feature >= kMaxFeatures) {
            throw std::out_of_range("FeatureSet: feature index out of range");
        }
    }

    std::uint64_t bits_ = 0;
};

}  // namespace cfex
