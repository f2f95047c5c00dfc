// Deterministic generator for data/cars.csv: a rule-labeled reconstruction of
// the classic car-evaluation domain (4x4x4x3x3x3 attribute grid, 1728 rows,
// four outcome classes). The original UCI "Car Evaluation" data derives its
// target from a hand-built hierarchical model; network fetches are off-limits
// for this repo, so we ship a grid labeled by our own documented hierarchical
// rules with a similar class skew instead of a downloaded copy. The file is
// committed; this tool exists to audit and regenerate it.
#include <array>
#include <fstream>
#include <iostream>
#include <string>

namespace {

const std::array<std::string, 4> kBuying = {"vhigh", "high", "med", "low"};
const std::array<std::string, 4> kMaint = {"vhigh", "high", "med", "low"};
const std::array<std::string, 4> kDoors = {"2", "3", "4", "5more"};
const std::array<std::string, 3> kPersons = {"2", "4", "more"};
const std::array<std::string, 3> kLugBoot = {"small", "med", "big"};
const std::array<std::string, 3> kSafety = {"low", "med", "high"};

// Indices double as scores: higher means cheaper (buying/maint) or roomier /
// safer (doors/persons/lug_boot/safety).
std::string label(int buying, int maint, int doors, int persons, int lug, int safety) {
    // Comfort 0..3: impossible without passenger room; grows with doors and
    // boot, a small boot hurts small cars.
    int comfort;
    if (persons == 0) {
        comfort = 0;
    } else {
        comfort = 1 + (doors >= 2 ? 1 : 0) + (lug == 2 ? 1 : 0) - (lug == 0 && doors < 2 ? 1 : 0);
    }
    // Technical quality 0..3: capped by safety.
    int tech;
    if (safety == 0) {
        tech = 0;
    } else if (safety == 1) {
        tech = comfort < 2 ? comfort : 2;
    } else {
        tech = comfort;
    }
    // Price attractiveness 0..3 from combined purchase and upkeep cost.
    const int cost = buying + maint;
    const int price = cost <= 1 ? 0 : cost <= 3 ? 1 : cost <= 5 ? 2 : 3;

    if (price == 0 || tech == 0) return "unacc";
    if (tech <= 2 && price <= 2) return "acc";
    if ((tech == 3 && price == 1) || (tech == 1 && price == 3)) return "good";
    return "vgood";
}

}  // namespace

int main(int argc, char** argv) {
    const std::string path = argc > 1 ? argv[1] : "cars.csv";
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot write '" << path << "'\n";
        return 1;
    }
    out << "buying,maint,doors,persons,lug_boot,safety,class\n";
    int counts[4] = {0, 0, 0, 0};
    for (int b = 0; b < 4; ++b)
        for (int m = 0; m < 4; ++m)
            for (int d = 0; d < 4; ++d)
                for (int p = 0; p < 3; ++p)
                    for (int l = 0; l < 3; ++l)
                        for (int s = 0; s < 3; ++s) {
                            const std::string cls = label(b, m, d, p, l, s);
                            out << kBuying[b] << ',' << kMaint[m] << ',' << kDoors[d] << ','
                                << kPersons[p] << ',' << kLugBoot[l] << ',' << kSafety[s] << ','
                                << cls << '\n';
                            counts[cls == "unacc" ? 0 : cls == "acc" ? 1 : cls == "good" ? 2 : 3]++;
                        }
    std::cout << "wrote " << path << ": 1728 rows, classes unacc=" << counts[0]
              << " acc=" << counts[1] << " good=" << counts[2] << " vgood=" << counts[3] << "\n";
    return 0;
}
