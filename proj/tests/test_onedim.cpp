#include <doctest.h>

#include "cylproj/error.hpp"
#include "gen.hpp"

using namespace cylproj;

TEST_CASE("one-dimensional constructors and canonical form") {
    CHECK(OneDimSet::full_set().is_full());
    CHECK(OneDimSet::empty_set().is_empty());
    CHECK(OneDimSet::full_set().length() == 1);
    CHECK(OneDimSet::point(make_rat(1, 3)).length() == 0);

    // adjacent half-open intervals fuse to the full set
    OneDimSet glued = unite(OneDimSet::interval(Rat(0), make_rat(1, 2)),
                            OneDimSet::interval(make_rat(1, 2), Rat(1)));
    CHECK(glued == OneDimSet::full_set());
    CHECK(glued.breakpoints().size() == 2);

    CHECK_THROWS_AS(OneDimSet::interval(make_rat(1, 2), make_rat(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(OneDimSet::point(Rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(OneDimSet({Rat(0), make_rat(1, 2)}, {true}, {true}), std::invalid_argument);
}

TEST_CASE("combine examples") {
    // complement of the unit interval is empty
    CHECK(complement(OneDimSet::full_set()).is_empty());

    // an isolated point is absorbed by a covering interval
    OneDimSet half = OneDimSet::interval(make_rat(1, 2), Rat(1));
    CHECK(unite(OneDimSet::point(make_rat(2, 3)), half) == half);

    CHECK(intersect(OneDimSet::interval(Rat(0), make_rat(1, 2)),
                    OneDimSet::interval(make_rat(1, 4), make_rat(3, 4))) ==
          OneDimSet::interval(make_rat(1, 4), make_rat(1, 2)));
}

TEST_CASE("length examples") {
    OneDimSet s = unite(OneDimSet::interval(Rat(0), make_rat(1, 2)),
                        OneDimSet::point(make_rat(2, 3)));
    CHECK(s.length() == make_rat(1, 2));
    CHECK(s.contains(make_rat(2, 3)));
    CHECK(s.contains(Rat(0)));
    CHECK(!s.contains(make_rat(1, 2)));
    CHECK(!s.contains(Rat(1)));
}

TEST_CASE("pointwise semantics of the Boolean operations") {
    gentest::Gen gen(1234);
    for (int iter = 0; iter < 300; ++iter) {
        OneDimSet a = gen.flagged_comp();
        OneDimSet b = gen.flagged_comp();
        OneDimSet u = unite(a, b);
        OneDimSet i = intersect(a, b);
        OneDimSet c = complement(a);
        // probe at every breakpoint and midpoint of the joint grid
        std::set<Rat> bp(a.breakpoints().begin(), a.breakpoints().end());
        bp.insert(b.breakpoints().begin(), b.breakpoints().end());
        std::vector<Rat> sorted(bp.begin(), bp.end());
        std::vector<Rat> probes;
        for (std::size_t k = 0; k + 1 < sorted.size(); ++k) {
            probes.push_back(sorted[k]);
            probes.push_back((sorted[k] + sorted[k + 1]) / 2);
        }
        for (const Rat& x : probes) {
            CHECK(u.contains(x) == (a.contains(x) || b.contains(x)));
            CHECK(i.contains(x) == (a.contains(x) && b.contains(x)));
            CHECK(c.contains(x) == !a.contains(x));
        }
        // modular law of lengths and the complement length
        CHECK(a.length() + b.length() == u.length() + i.length());
        CHECK(c.length() == Rat(1) - a.length());
        CHECK(complement(c) == a);
    }
}
