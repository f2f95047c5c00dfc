#pragma once

#include <cstdint>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cfex {

/// Exact rational in lowest terms with positive denominator. Metric values
/// are kept exact internally and rendered as decimals only at the output
/// boundary, so equality checks never depend on float rounding.
class Ratio {
public:
    Ratio() = default;

    Ratio(std::int64_t num, std::int64_t den) {
        if (den == 0) throw std::invalid_argument("Ratio: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        num_ = g ? num / g : num;
        den_ = g ? den / g : den;
    }

    [[nodiscard]] std::int64_t num() const { return num_; }
    [[nodiscard]] std::int64_t den() const { return den_; }

    [[nodiscard]] double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Decimal rendering with four fractional digits, e.g. "0.3333".
    [[nodiscard]] std::string str4() const {
        char buf[48];
        std::snprintf(buf, sizeof buf, "%.4f", value());
        return buf;
    }

    bool operator==(const Ratio&) const = default;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace cfex
