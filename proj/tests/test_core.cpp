#include <doctest.h>

#include <stdexcept>

#include "cfex/feature_set.hpp"
#include "cfex/literal.hpp"
#include "cfex/ratio.hpp"
#include "cfex/rng.hpp"

using namespace cfex;

TEST_SUITE("feature_set") {
    TEST_CASE("basic set algebra over the bitmask") {
        FeatureSet s{0, 3, 5};
        CHECK(s.size() == 3);
        CHECK(s.contains(3));
        CHECK_FALSE(s.contains(1));
        s.add(1);
        s.remove(3);
        CHECK(s.elements() == std::vector<int>{0, 1, 5});

        const FeatureSet t{1, 5, 7};
        CHECK((s & t).elements() == std::vector<int>{1, 5});
        CHECK((s | t).elements() == std::vector<int>{0, 1, 5, 7});
        CHECK((s - t).elements() == std::vector<int>{0});
        CHECK(FeatureSet{1, 5}.subset_of(t));
        CHECK_FALSE(t.subset_of(s));
        CHECK(s.intersects(t));
        CHECK_FALSE(FeatureSet{0}.intersects(t));
    }

    TEST_CASE("full universe and bounds") {
        CHECK(FeatureSet::full(0).empty());
        CHECK(FeatureSet::full(6).size() == 6);
        CHECK(FeatureSet::full(64).size() == 64);
        CHECK_THROWS_AS(FeatureSet::full(65), std::out_of_range);
        FeatureSet s;
        CHECK_THROWS_AS(s.add(64), std::out_of_range);
        CHECK_THROWS_AS(s.add(-1), std::out_of_range);
    }

    TEST_CASE("iteration ascends") {
        const FeatureSet s{9, 2, 63};
        std::vector<int> seen;
        for (int f : s) seen.push_back(f);
        CHECK(seen == std::vector<int>{2, 9, 63});
    }
}

TEST_SUITE("literal_set") {
    TEST_CASE("construction rejects two values for one feature") {
        CHECK_THROWS_AS(LiteralSet({{1, 0}, {1, 1}}), std::invalid_argument);
        CHECK_FALSE(LiteralSet::try_from({{2, 3}, {2, 0}}).has_value());
        // exact duplicates collapse instead of conflicting
        const auto dup = LiteralSet::try_from({{2, 3}, {2, 3}});
        REQUIRE(dup.has_value());
        CHECK(dup->size() == 1);
    }

    TEST_CASE("ordering, lookup and subset") {
        const LiteralSet s({{4, 1}, {0, 2}, {2, 0}});
        CHECK(s.size() == 3);
        CHECK(s.features().elements() == std::vector<int>{0, 2, 4});
        CHECK(s.contains({2, 0}));
        CHECK_FALSE(s.contains({2, 1}));
        CHECK(s.value_of(4) == ValueId{1});
        CHECK_FALSE(s.value_of(1).has_value());

        const LiteralSet sub({{0, 2}, {4, 1}});
        CHECK(sub.subset_of(s));
        CHECK_FALSE(s.subset_of(sub));
        CHECK(LiteralSet().subset_of(sub));
        // same features, different value: not a subset
        CHECK_FALSE(LiteralSet({{0, 3}}).subset_of(s));
    }

    TEST_CASE("instance containment and disjointness") {
        const std::vector<ValueId> row = {2, 1, 0, 1, 1};
        const LiteralSet in({{0, 2}, {2, 0}});
        const LiteralSet off({{0, 1}, {2, 2}});
        CHECK(in.contained_in(row));
        CHECK_FALSE(off.contained_in(row));
        CHECK(off.disjoint_from_instance(row));
        CHECK_FALSE(in.disjoint_from_instance(row));
        CHECK(LiteralSet::of_instance(row).size() == 5);
        CHECK(LiteralSet::of_instance(row).contained_in(row));
    }

    TEST_CASE("consistent_union detects value clashes") {
        const LiteralSet a({{0, 1}, {1, 2}});
        const LiteralSet b({{1, 2}, {3, 0}});
        const auto u = consistent_union(a, b);
        REQUIRE(u.has_value());
        CHECK(u->size() == 3);
        const LiteralSet clash({{1, 0}});
        CHECK_FALSE(consistent_union(a, clash).has_value());
    }
}

TEST_SUITE("ratio") {
    TEST_CASE("normalization and equality") {
        CHECK(Ratio(2, 4) == Ratio(1, 2));
        CHECK(Ratio(0, 5) == Ratio(0, 9));
        CHECK(Ratio(3, -6) == Ratio(-1, 2));
        CHECK(Ratio(4, 4) == Ratio(1, 1));
        CHECK(Ratio(5, 45).num() == 1);
        CHECK(Ratio(5, 45).den() == 9);
        CHECK_THROWS_AS(Ratio(1, 0), std::invalid_argument);
    }

    TEST_CASE("value and fixed four-digit rendering") {
        CHECK(Ratio(3, 5).value() == doctest::Approx(0.6));
        CHECK(Ratio(3, 5).str4() == "0.6000");
        CHECK(Ratio(1, 3).str4() == "0.3333");
        CHECK(Ratio(1, 1).str4() == "1.0000");
        CHECK(Ratio(0, 7).str4() == "0.0000");
        CHECK(Ratio(5, 10).str4() == "0.5000");
    }
}

TEST_SUITE("rng") {
    TEST_CASE("bounded draws are deterministic and in range") {
        std::mt19937_64 g1(123), g2(123);
        for (int i = 0; i < 1000; ++i) {
            const auto x = bounded(g1, 17);
            CHECK(x < 17);
            CHECK(x == bounded(g2, 17));
        }
        CHECK(bounded(g1, 1) == 0);
    }

    TEST_CASE("mix_seed separates nearby seeds") {
        CHECK(mix_seed(1) != mix_seed(2));
        CHECK(mix_seed(0) != 0);
        CHECK(mix_seed(7) == mix_seed(7));
    }
}
