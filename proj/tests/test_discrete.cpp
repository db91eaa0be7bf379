#include <doctest.h>

#include "cylproj/error.hpp"
#include "cylproj/measure.hpp"
#include "cylproj/projection.hpp"
#include "engine.hpp"
#include "gen.hpp"

using namespace cylproj;
using gentest::base_half_quarter;
using gentest::d1;

namespace {
constexpr DimVar Y = 0, Z = 1;
}

TEST_CASE("atom set algebra") {
    CHECK(complement(AtomSet::finite({})).is_full());
    CHECK(AtomSet::cofinite({}).is_full());
    CHECK(intersect(AtomSet::cofinite({0}), AtomSet::finite({0, 1})) == AtomSet::finite({1}));
    CHECK(unite(AtomSet::finite({0, 2}), AtomSet::cofinite({0, 1})) == AtomSet::cofinite({1}));
    CHECK(unite(AtomSet::finite({1}), complement(AtomSet::finite({1}))).is_full());
    CHECK(AtomSet::cofinite({3}).contains(1000));
    CHECK(!AtomSet::finite({3}).contains(1000));
}

TEST_CASE("discrete base invariants") {
    CHECK_THROWS_AS(DiscreteBase({make_rat(1, 2)}, make_rat(1, 4)), Error);  // mass 3/4
    CHECK_THROWS_AS(DiscreteBase({Rat(0), Rat(1)}, Rat(0)), Error);          // zero prob
    DiscreteBase b = base_half_quarter();
    CHECK(b.measure1(AtomSet::finite({0})) == make_rat(1, 2));
    CHECK(b.measure1(AtomSet::cofinite({0})) == make_rat(1, 2));
    CHECK(b.measure1(AtomSet::cofinite({})) == 1);
    CHECK_THROWS_AS(b.atom_prob(2), Error);
    try {
        b.measure1(AtomSet::finite({5}));
    } catch (const Error& e) {
        CHECK(e.code == Errc::unknown_atom);
    }
}

TEST_CASE("discrete set operations") {
    DiscreteSet a = d1();
    CHECK(set_equal(complement(complement(a)), a));
    CHECK(set_equal(unite(a, complement(a)), DiscreteSet::unit()));
    CHECK(set_equal(cylindrify(a, Y), DiscreteSet::unit()));
    CHECK(set_equal(cylindrify(DiscreteSet::unit(), Y), DiscreteSet::unit()));

    DiscreteSet corner = DiscreteSet::box({{Y, AtomSet::finite({0})}, {Z, AtomSet::finite({0})}});
    CHECK(is_empty(co_cylindrify(corner, Y)));
    CHECK(set_equal(co_cylindrify(DiscreteSet::unit(), Y), DiscreteSet::unit()));

    DiscreteSet renamed = substitute(a, Y, 5);
    CHECK(dim_set(renamed) == std::set<DimVar>{5, Z});
    CHECK(set_equal(substitute(a, Y, Y), a));
    CHECK_THROWS_AS(substitute(a, Y, Z), Error);
    CHECK(discrete_measure(renamed, base_half_quarter()).exact ==
          discrete_measure(a, base_half_quarter()).exact);
}

TEST_CASE("boolean laws for discrete sets") {
    gentest::Gen gen(505);
    for (int iter = 0; iter < 200; ++iter) {
        DiscreteSet a = gen.dset(2, 3, 4);
        DiscreteSet b = gen.dset(2, 3, 4);
        DiscreteSet c = gen.dset(2, 3, 4);
        CHECK(set_equal(unite(a, b), unite(b, a)));
        CHECK(set_equal(intersect(a, unite(b, c)), unite(intersect(a, b), intersect(a, c))));
        CHECK(set_equal(complement(unite(a, b)), intersect(complement(a), complement(b))));
        CHECK(set_equal(complement(complement(a)), a));
        CHECK(is_empty(intersect(a, complement(a))));
        // atom-level membership probes, including an unnamed tail atom
        for (std::uint32_t ya : {0u, 1u, 2u, 3u, 99u})
            for (std::uint32_t za : {0u, 3u, 99u}) {
                std::map<DimVar, std::uint32_t> pt{{Y, ya}, {Z, za}};
                CHECK(unite(a, b).contains(pt) == (a.contains(pt) || b.contains(pt)));
                CHECK(complement(a).contains(pt) == !a.contains(pt));
            }
    }
}

TEST_CASE("cylindrification properties for discrete sets") {
    gentest::Gen gen(990);
    for (int iter = 0; iter < 150; ++iter) {
        DiscreteSet a = gen.dset(2, 3, 4);
        DimVar y = static_cast<DimVar>(gen.uniform(0, 1));
        DiscreteSet ca = cylindrify(a, y);
        CHECK(subset(a, ca));
        CHECK(set_equal(cylindrify(ca, y), ca));
        CHECK(subset(substitute(a, y, 9), ca));
        CHECK(set_equal(cylindrify(substitute(a, y, 9), 9), ca));
    }
}

TEST_CASE("strong and ordinary projection coincide on positive bases") {
    gentest::Gen gen(333);
    for (int iter = 0; iter < 100; ++iter) {
        DiscreteBase base = gen.base(5, /*force_tail=*/true);
        DiscreteSet a = gen.dset(2, 3, static_cast<int>(base.named_count()));
        for (DimVar y : {Y, Z})
            CHECK(set_equal(strong_project(a, y, base), cylindrify(a, y)));
    }
}

TEST_CASE("discrete canonical form equality matches extensional equality") {
    gentest::Gen gen(616);
    for (int iter = 0; iter < 100; ++iter) {
        DiscreteSet a = gen.dset(2, 3, 4);
        DiscreteSet b = gen.dset(2, 3, 4);
        DiscreteSet u1 = unite(a, b);
        DiscreteSet u2 = complement(intersect(complement(a), complement(b)));
        CHECK(set_equal(u1, u2));
        CHECK(u1.canonical().cells == u2.canonical().cells);
        CHECK(u1.canonical().mentioned == u2.canonical().mentioned);
        auto ds = dim_set(u1);
        CHECK(std::set<DimVar>(u1.canonical().dims.begin(), u1.canonical().dims.end()) == ds);
        CHECK(set_equal(compacted(u1), u1));
    }
}

TEST_CASE("a null rest class separates ordinary from strong projection") {
    // with no tail mass the unnamed atoms carry measure zero, so a fiber
    // made only of them is nonempty but null: the ordinary cylinder keeps
    // it, the strong projection drops it
    DiscreteBase base({make_rat(1, 2), make_rat(1, 2)}, Rat(0));
    DiscreteSet a = DiscreteSet::box({{Y, AtomSet::cofinite({0, 1})}, {Z, AtomSet::finite({0})}});
    CHECK(discrete_measure(a, base).exact == 0);
    CHECK(discrete_measure(cylindrify(a, Y), base).exact == make_rat(1, 2));
    CHECK(is_empty(strong_project(a, Y, base)));
    CHECK(continuity_check(a, Y, base).verdict == Verdict::fails);
}
