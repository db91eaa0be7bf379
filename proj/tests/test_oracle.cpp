#include <doctest.h>

#include "cylproj/error.hpp"
#include "cylproj/oracle.hpp"
#include "gen.hpp"

using namespace cylproj;
using gentest::base_half_quarter;
using gentest::checkerboard;
using gentest::d1;
using gentest::e1;

namespace {
constexpr DimVar Y = 0;
}

TEST_CASE("materialized stages") {
    // one copy is just a rename
    FinDimSet one = materialize_n_fold(checkerboard(), Y, 1, FoldMode::unions);
    CHECK(lebesgue_measure(one).exact == lebesgue_measure(checkerboard()).exact);
    CHECK(!dim_set(one).count(Y));

    FinDimSet two = materialize_n_fold(checkerboard(), Y, 2, FoldMode::intersections);
    CHECK(dim_set(two).size() == 3);
    CHECK(lebesgue_measure(two).exact == make_rat(1, 4));

    FinDimSet three = materialize_n_fold(e1(), Y, 3, FoldMode::unions);
    CHECK(lebesgue_measure(three).exact == 0);

    CHECK_THROWS_AS(materialize_n_fold(e1(), Y, 6, FoldMode::unions), Error);
    try {
        materialize_n_fold(e1(), Y, 6, FoldMode::unions);
    } catch (const Error& e) {
        CHECK(e.code == Errc::bound_exceeded);
    }
    CHECK(lebesgue_measure(materialize_n_fold(e1(), Y, 6, FoldMode::unions, 8)).exact == 0);

    // stage intersections of many-term sets hit the engine's term cap
    std::vector<ProductTerm> wide;
    for (int i = 0; i < 7; ++i) {
        ProductTerm t;
        t.set_component(Y, OneDimSet::interval(make_rat(i, 8), make_rat(i + 1, 8)));
        wide.push_back(std::move(t));
    }
    FinDimSet fat = materialize_n_fold(FinDimSet(wide), Y, 4, FoldMode::intersections);
    CHECK(fat.terms().size() == 2401);
    CHECK_THROWS_AS(lebesgue_measure(fat), Error);  // TermLimitExceeded
}

TEST_CASE("grid measure examples") {
    CHECK(grid_measure(FinDimSet::unit()).exact == 1);
    CHECK(grid_measure(FinDimSet::empty_set()).exact == 0);
    CHECK(grid_measure(e1()).exact == 0);
    CHECK(grid_measure(checkerboard()).exact == make_rat(1, 2));
}

TEST_CASE("grid measure agrees with the additive measure") {
    gentest::Gen gen(1001);
    for (int iter = 0; iter < 200; ++iter) {
        FinDimSet a = gen.flagged_set(3, 4);
        CHECK(grid_measure(a).exact == lebesgue_measure(a).exact);
    }
}

TEST_CASE("truncation enumeration examples") {
    DiscreteBase base = base_half_quarter();
    CHECK(truncation_measure_discrete(d1(), base, Y, 2, FoldMode::intersections).exact ==
          make_rat(1, 4));
    CHECK(truncation_measure_discrete(DiscreteSet::empty_set(), base, Y, 3,
                                      FoldMode::intersections).exact == 0);
    for (unsigned long n = 1; n <= 4; ++n)
        CHECK(truncation_measure_discrete(DiscreteSet::unit(), base, Y, n,
                                          FoldMode::unions).exact == 1);
}

TEST_CASE("closed forms equal materialized measures") {
    gentest::Gen gen(8080);
    for (int iter = 0; iter < 40; ++iter) {
        FinDimSet a = gen.flagged_set(2, 3);
        FiberProfile p = fiber_profile(a, Y);
        for (unsigned long n = 1; n <= 3; ++n) {
            CHECK(n_fold_union_measure(p, n).exact ==
                  lebesgue_measure(materialize_n_fold(a, Y, n, FoldMode::unions)).exact);
            CHECK(n_fold_intersection_measure(p, n).exact ==
                  lebesgue_measure(materialize_n_fold(a, Y, n, FoldMode::intersections)).exact);
        }
    }
}

TEST_CASE("truncation enumeration equals the closed form") {
    gentest::Gen gen(9090);
    for (int iter = 0; iter < 40; ++iter) {
        DiscreteBase base = gen.base(4);
        DiscreteSet a = gen.dset(2, 3, static_cast<int>(base.named_count()));
        FiberProfile p = fiber_profile(a, Y, base);
        for (unsigned long n = 1; n <= 3; ++n) {
            CHECK(truncation_measure_discrete(a, base, Y, n, FoldMode::unions).exact ==
                  n_fold_union_measure(p, n).exact);
            CHECK(truncation_measure_discrete(a, base, Y, n, FoldMode::intersections).exact ==
                  n_fold_intersection_measure(p, n).exact);
        }
    }
}

TEST_CASE("oracle diff reports") {
    OracleDiffReport r = oracle_diff(checkerboard(), Y, 3);
    CHECK(r.all_match);
    CHECK(r.union_rows.size() == 3);
    CHECK(r.union_rows[1].closed_form == make_rat(3, 4));

    OracleDiffReport rd = oracle_diff(d1(), Y, base_half_quarter(), 2);
    CHECK(rd.all_match);
    REQUIRE(rd.intersection_rows[1].literal_power_sum);
    // the literal power-sum reading differs from the consistent stage value
    CHECK(rd.intersection_rows[1].closed_form == make_rat(1, 4));
    CHECK(*rd.intersection_rows[1].literal_power_sum == make_rat(1, 8));
}
