#include <catch2/catch.hpp>

#include <cmath>
#include <limits>

#include "ivcalc/interval.hpp"
#include "ivcalc/verify.hpp"

using namespace ivcalc;

TEST_CASE("interval construction and degenerate cases") {
    const Interval a(1.0, 2.0);
    CHECK(a.lo() == 1.0);
    CHECK(a.hi() == 2.0);

    const Interval s(3.0, 3.0);
    CHECK(s.is_singleton());
    CHECK(Interval::singleton(3.0) == s);
    CHECK(Interval::zero() == Interval(0.0, 0.0));

    CHECK_THROWS_WITH(Interval(2.0, 1.0), Catch::Contains("inverted endpoints"));
    CHECK_THROWS_WITH(Interval(std::nan(""), 1.0), Catch::Contains("non-finite"));
    CHECK_THROWS_WITH(Interval(0.0, std::numeric_limits<double>::infinity()),
                      Catch::Contains("non-finite"));
}

TEST_CASE("minkowski addition") {
    CHECK(add(Interval(1, 2), Interval(3, 5)) == Interval(4, 7));
    const Interval a(-3.25, 7.5);
    CHECK(add(a, Interval::zero()) == a);
    // the opposite is not an additive inverse
    CHECK(add(Interval(0, 1), Interval(-1, 0)) == Interval(-1, 1));

    const double big = std::numeric_limits<double>::max();
    CHECK_THROWS_WITH(add(Interval(0, big), Interval(0, big)), Catch::Contains("range overflow"));
}

TEST_CASE("scalar multiplication") {
    CHECK(scale(-1.0, Interval(1, 2)) == Interval(-2, -1));
    CHECK(scale(0.0, Interval(-5, 9)) == Interval::zero());
    CHECK(scale(2.0, Interval(-1, 3)) == Interval(-2, 6));
    CHECK(opposite(Interval(1, 2)) == Interval(-2, -1));
    CHECK_THROWS_WITH(scale(std::nan(""), Interval(0, 1)), Catch::Contains("non-finite scalar"));
}

TEST_CASE("gH-difference endpoint form and width flag") {
    const GhDifference d1 = gh_sub(Interval(5, 7), Interval(1, 2));
    CHECK(d1.value == Interval(4, 5));
    CHECK(d1.hukuhara);

    const GhDifference d2 = gh_sub(Interval(0, 1), Interval(0, 3));
    CHECK(d2.value == Interval(-2, 0));
    CHECK_FALSE(d2.hukuhara);

    const Interval a(-1.5, 2.25);
    CHECK(gh_sub(a, a).value == Interval::zero());
    CHECK(gh_sub(a, a).hukuhara);
}

TEST_CASE("hausdorff distance, width, norm") {
    CHECK(hausdorff(Interval(1, 3), Interval(2, 7)) == 4.0);
    const Interval a(-0.5, 0.75);
    CHECK(hausdorff(a, a) == 0.0);
    CHECK(hausdorff(Interval(0, 1), Interval::zero()) == Interval(0, 1).norm());

    CHECK(Interval(1, 4).width() == 3.0);
    CHECK(Interval(1, 4).norm() == 4.0);
    CHECK(Interval::singleton(-2.5).width() == 0.0);
    CHECK(Interval::singleton(-2.5).norm() == 2.5);
    CHECK(Interval(-3, 2).width() == 5.0);
    CHECK(Interval(-3, 2).norm() == 3.0);
}

TEST_CASE("minkowski difference versus gH-difference") {
    // A - B stretches, A gh- B shrinks
    const Interval a(4, 6), b(1, 2);
    CHECK((a - b) == Interval(2, 5));
    CHECK(gh_sub(a, b).value == Interval(3, 4));
}

namespace {

Interval random_dyadic(SplitMix64& rng) { return dyadic::draw(rng); }

} // namespace

TEST_CASE("gH-difference identities on random dyadic intervals") {
    SplitMix64 rng(20260808ULL);
    for (int i = 0; i < 2000; ++i) {
        const Interval a = random_dyadic(rng);
        const Interval b = random_dyadic(rng);
        const GhDifference g = gh_sub(a, b);

        // characterization of the two branches, exact
        if (a.width() >= b.width()) {
            CHECK(g.hukuhara);
            CHECK(add(b, g.value) == a);
        } else {
            CHECK_FALSE(g.hukuhara);
            CHECK(add(a, opposite(g.value)) == b);
        }
        CHECK(g.value.width() == std::abs(a.width() - b.width()));
        CHECK(hausdorff(a, b) == g.value.norm());
    }
}

TEST_CASE("hausdorff is a metric on random dyadic triples") {
    SplitMix64 rng(77ULL);
    for (int i = 0; i < 2000; ++i) {
        const Interval a = random_dyadic(rng);
        const Interval b = random_dyadic(rng);
        const Interval c = random_dyadic(rng);
        CHECK(hausdorff(a, b) == hausdorff(b, a));
        CHECK(hausdorff(a, c) <= hausdorff(a, b) + hausdorff(b, c));
        CHECK((hausdorff(a, b) == 0.0) == (a == b));
    }
}

TEST_CASE("laws suite passes on a quick randomized sweep") {
    const SuiteReport rep = run_laws_suite(500, 20260808ULL);
    for (const auto& law : rep.laws) {
        INFO(law.name << ": " << law.counterexample);
        CHECK(law.failed == 0);
        CHECK(law.passed == 500);
    }
    CHECK(rep.all_pass);
}
