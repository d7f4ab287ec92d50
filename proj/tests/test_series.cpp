#include <cstdint>
#include <vector>

#include "doctest.h"

#include "fcc/census.hpp"
#include "fcc/numeric.hpp"
#include "fcc/series.hpp"

using fcc::BigInt;
using fcc::MultiSeries;
using fcc::Rational;

TEST_CASE("series construction and coefficients") {
    const MultiSeries x = MultiSeries::variable(2, 4, 0);
    const MultiSeries y = MultiSeries::variable(2, 4, 1);
    CHECK(x.coeff({1, 0}) == 1);
    CHECK(x.coeff({0, 1}) == 0);
    CHECK(x.coeff({-1, 0}) == 0);
    CHECK_THROWS_AS(x.coeff({5, 0}), fcc::Error);
    CHECK_THROWS_AS(x.coeff({1}), fcc::DimensionMismatch);

    CHECK(MultiSeries::monomial(2, 4, {3, 3}, 7).is_zero());
    CHECK_THROWS_AS(MultiSeries(9, 4), fcc::InvalidDimension);
    CHECK_THROWS_AS(MultiSeries(2, 300), fcc::Error);

    const MultiSeries s = x + y;
    CHECK(s.term_count() == 2);
    CHECK((s - s).is_zero());
}

TEST_CASE("series arithmetic") {
    const MultiSeries one = MultiSeries::constant(1, 6, 1);
    const MultiSeries x = MultiSeries::variable(1, 6, 0);
    CHECK((one + x) * (one - x) == one - x * x);

    // Truncation drops the cross terms beyond the cutoff.
    const MultiSeries cube = MultiSeries::monomial(1, 5, {3}, 1);
    CHECK((cube * cube).is_zero());

    const MultiSeries p = MultiSeries::monomial(2, 8, {1, 2}, 3);
    const MultiSeries q = MultiSeries::monomial(2, 8, {2, 1}, -5);
    CHECK((p * q).coeff({3, 3}) == -15);

    CHECK(p.shifted({2, 1}, -5) == p * q);
    CHECK((-p).coeff({1, 2}) == -3);
}

TEST_CASE("series inverse") {
    MultiSeries s = MultiSeries::constant(2, 8, 1);
    s += MultiSeries::variable(2, 8, 0);
    s += MultiSeries::monomial(2, 8, {0, 1}, 2);
    CHECK(s * s.inverse() == MultiSeries::constant(2, 8, 1));

    MultiSeries neg = MultiSeries::constant(2, 8, -1);
    neg += MultiSeries::variable(2, 8, 1);
    CHECK(neg * neg.inverse() == MultiSeries::constant(2, 8, 1));

    CHECK_THROWS_AS(MultiSeries::variable(2, 8, 0).inverse(), fcc::Error);
    CHECK_THROWS_AS(MultiSeries::constant(2, 8, 3).inverse(), fcc::Error);
}

TEST_CASE("series renaming") {
    const MultiSeries xy = MultiSeries::monomial(3, 6, {1, 1, 0}, 1);
    CHECK(xy.renamed(1, {0, 0, 0}) == MultiSeries::monomial(1, 6, {2}, 1));
    CHECK(xy.renamed(2, {0, 1, 1}) == MultiSeries::monomial(2, 6, {1, 1}, 1));
    CHECK_THROWS_AS(xy.renamed(2, {0, 1}), fcc::DimensionMismatch);
    CHECK_THROWS_AS(xy.renamed(2, {0, 1, 5}), fcc::DimensionMismatch);
}

TEST_CASE("solutions of the tree system") {
    const int trunc = 8;
    const std::vector<MultiSeries> g = fcc::solve_g(2, trunc);
    REQUIRE(g.size() == 3);

    SUBCASE("defining equations") {
        const MultiSeries one = MultiSeries::constant(3, trunc, 1);
        MultiSeries prod = one;
        for (const MultiSeries& gj : g) prod = prod * (one + gj);
        for (int i = 0; i < 3; ++i) {
            std::vector<int> e(3, 0);
            e[i] = 1;
            CHECK(g[i] * (one + g[i]) == prod.shifted(e, 1));
        }
    }

    SUBCASE("low order coefficients") {
        CHECK(g[0].coeff({0, 0, 0}) == 0);
        CHECK(g[0].coeff({1, 0, 0}) == 1);
        CHECK(g[0].coeff({2, 0, 0}) == 0);
        CHECK(g[0].coeff({1, 1, 0}) == 1);
        CHECK(g[0].coeff({1, 1, 1}) == 3);
    }

    SUBCASE("transposition symmetry") {
        CHECK(g[1] == g[0].renamed(3, {1, 0, 2}));
        CHECK(g[2] == g[0].renamed(3, {2, 1, 0}));
    }

    SUBCASE("closed form for the root component") {
        for (int total = 0; total <= trunc; ++total) {
            fcc::for_each_composition(total, 3, [&](const std::vector<int>& gamma) {
                CHECK(Rational(g[0].coeff(gamma)) == fcc::g0_closed_form(gamma));
            });
        }
    }
}

TEST_CASE("census generating function") {
    const MultiSeries c = fcc::series_C(2, 6);
    CHECK(c.coeff({0, 1, 1}) == 1);
    CHECK(c.coeff({1, 1, 1}) == 1);
    CHECK(c.coeff({1, 2, 2}) == 3);
    CHECK(c.coeff({2, 2, 2}) == 8);
    CHECK(c.coeff({0, 2, 2}) == 0);
    CHECK(c.coeff({1, 0, 1}) == 0);
    CHECK(c.term_count() > 10);

    for (int total = 0; total <= 8; ++total) {
        fcc::for_each_composition(total, 3, [&](const std::vector<int>& gamma) {
            CHECK(c.coeff(gamma) == fcc::count_full(fcc::ColourVector{gamma}));
        });
    }
}

TEST_CASE("polynomial residuals vanish") {
    CHECK(fcc::check_alg_d2(8).is_zero());
    CHECK(fcc::check_Y(10).is_zero());
    CHECK(fcc::check_Z(10).is_zero());

    // The cancellation is not vacuous: the top power alone is already nonzero
    // at this truncation.
    const MultiSeries c = fcc::series_C(2, 8);
    const MultiSeries c2 = c * c;
    CHECK(!(c2 * c2 * c).is_zero());
    CHECK_THROWS_AS(fcc::check_alg_d2(1), fcc::Error);
}

TEST_CASE("closed form guards") {
    CHECK(fcc::g0_closed_form({1, 0, 0}) == 1);
    CHECK(fcc::g0_closed_form({1, 1, 0}) == 1);
    CHECK(fcc::g0_closed_form({1, 1, 1}) == 3);
    CHECK(fcc::g0_closed_form({0, 0, 0}) == 0);
    CHECK(fcc::g0_closed_form({2, 0, 0}) == 0);
    CHECK(fcc::g0_closed_form({0, 5, 0}) == 0);
    CHECK_THROWS_AS(fcc::g0_closed_form({1}), fcc::DimensionMismatch);
}

TEST_CASE("exact determinants") {
    using Row = std::vector<Rational>;
    CHECK(fcc::det_rational({}) == 1);
    CHECK(fcc::det_rational({Row{Rational(3, 7)}}) == Rational(3, 7));
    CHECK(fcc::det_rational({Row{1, 2}, Row{3, 4}}) == -2);
    CHECK(fcc::det_rational({Row{Rational(1, 2), 0}, Row{0, Rational(1, 3)}}) == Rational(1, 6));
    CHECK(fcc::det_rational({Row{1, 2}, Row{2, 4}}) == 0);
    // Zero pivot forces a row swap.
    CHECK(fcc::det_rational({Row{0, 1, 0}, Row{1, 0, 0}, Row{0, 0, 1}}) == -1);
    CHECK_THROWS_AS(fcc::det_rational({Row{1, 2}}), fcc::DimensionMismatch);
}

TEST_CASE("jacobian determinant identity") {
    SUBCASE("frozen points") {
        const fcc::JacobianPair base = fcc::jacobian_check(0, {Rational(1)});
        CHECK(base.det == 1);
        CHECK(base.closed == 1);

        const fcc::JacobianPair line = fcc::jacobian_check(1, {Rational(1), Rational(2)});
        CHECK(line.det == Rational(1, 9));
        CHECK(line.matches());

        const fcc::JacobianPair plane =
            fcc::jacobian_check(2, {Rational(1), Rational(1), Rational(1)});
        CHECK(plane.det == 0);
        CHECK(plane.matches());
    }

    SUBCASE("random points") {
        std::uint64_t state = 7;
        for (int d = 0; d <= 4; ++d) {
            for (int trial = 0; trial < 25; ++trial) {
                const std::vector<Rational> point = fcc::random_rational_point(state, d + 1);
                CHECK(fcc::jacobian_check(d, point).matches());
            }
        }
    }

    SUBCASE("poles") {
        CHECK_THROWS_AS(fcc::jacobian_check(1, {Rational(-1), Rational(0)}), fcc::PoleError);
        CHECK_THROWS_AS(fcc::jacobian_check(1, {Rational(0), Rational(-1, 2)}), fcc::PoleError);
        CHECK_THROWS_AS(fcc::jacobian_check(1, {Rational(0)}), fcc::DimensionMismatch);
    }

    SUBCASE("symbolic") {
        CHECK(fcc::jacobian_symbolic(0));
        CHECK(fcc::jacobian_symbolic(1));
        CHECK(fcc::jacobian_symbolic(2));
        CHECK_THROWS_AS(fcc::jacobian_symbolic(4), fcc::Error);
    }
}

TEST_CASE("symmetric function identities") {
    CHECK(fcc::esym_checks({Rational(1), Rational(1)}));
    CHECK(fcc::esym_checks({Rational(1, 2), Rational(-3), Rational(2)}));
    CHECK(fcc::esym_checks({}));
    CHECK_THROWS_AS(fcc::esym_checks({Rational(-1, 2)}), fcc::PoleError);

    std::uint64_t state = 11;
    for (int trial = 0; trial < 50; ++trial) {
        CHECK(fcc::esym_checks(fcc::random_rational_point(state, 5)));
    }
}

TEST_CASE("deterministic random stream") {
    std::uint64_t state = 0;
    CHECK(fcc::next_random(state) == 0xe220a8397b1dcdafull);
    CHECK(fcc::next_random(state) == 0x6e789e6aa1b965f4ull);

    std::uint64_t a = 42, b = 42;
    const std::vector<Rational> pa = fcc::random_rational_point(a, 6);
    const std::vector<Rational> pb = fcc::random_rational_point(b, 6);
    CHECK(pa == pb);
    for (const Rational& x : pa) {
        CHECK(x != -1);
        CHECK(x != Rational(-1, 2));
        CHECK(abs(numerator(x)) <= 6);
        CHECK(denominator(x) <= 6);
    }
}
