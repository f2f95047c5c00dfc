#pragma once

#include <string>

#include "cfex/dataset.hpp"

namespace testsupport {

inline const std::string kDataDir = CFEX_DATA_DIR;

/// The eight-row recidivism fixture; rows 0..7 are referred to as a..h.
inline const cfex::LabeledSample& recidivism() {
    static const cfex::LabeledSample s = cfex::load_csv(kDataDir + "/recidivism.csv", {});
    return s;
}

inline constexpr cfex::RowIndex kA = 0, kB = 1, kC = 2, kD = 3, kE = 4, kF = 5, kG = 6, kH = 7;

inline const cfex::LabeledSample& cars() {
    static const cfex::LabeledSample s = cfex::load_csv(kDataDir + "/cars.csv", {});
    return s;
}

/// Literal for feature/value NAMES under the sample's schema; fails the test
/// fast if either name is unknown.
inline cfex::Literal lit(const cfex::LabeledSample& s, const std::string& feature,
                         const std::string& value) {
    const auto f = s.schema().feature_index(feature);
    if (!f) throw std::invalid_argument("no feature '" + feature + "'");
    const auto v = s.schema().value_id(*f, value);
    if (!v) throw std::invalid_argument("no value '" + value + "' for '" + feature + "'");
    return {*f, *v};
}

}  // namespace testsupport
