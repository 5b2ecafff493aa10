#include "ladder/model.hpp"
#include "ladder/strength.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <optional>
#include <random>
#include <vector>

using ladder::fit_power;
using ladder::leading_strength;
using ladder::minus_inf;
using ladder::model_spec;
using ladder::o_sum;
using ladder::rat;
using ladder::rational;
using ladder::series_mode;
using ladder::strength_numeric;
using ladder::strength_record;
using ladder::strength_series;
using ladder::table3;
using ladder::table3_row;
using ladder::transition_kind;
using ladder::zero_strength_error;

namespace {

const std::vector<double> kGeomWeak = {1e-3, 1e-4, 1e-5};

std::vector<double> geom_list(double top, double ratio_log10, int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back(top * std::pow(10.0, ratio_log10 * i));
    return v;
}

}  // namespace

TEST_CASE("uncoupled ladder: neighbour strength is exactly one, the rest vanish") {
    const model_spec s = model_spec::tri(11, 1.0, 0.0);
    strength_record r01 = strength_numeric(s, transition_kind::T1, 0, 1);
    CHECK(r01.amplitude_O == 1.0);
    CHECK(r01.strength == 1.0);
    CHECK(r01.ln_strength == 0.0);
    CHECK(r01.e_star == 1.0);

    strength_record r02 = strength_numeric(s, transition_kind::T1, 0, 2);
    CHECK(r02.amplitude_O == 0.0);
    CHECK(r02.strength == 0.0);
    CHECK(r02.ln_strength == minus_inf);

    // T2 carries the sqrt(n+1) link weight.
    strength_record r12 = strength_numeric(s, transition_kind::T2, 1, 2);
    CHECK(r12.amplitude_O == std::sqrt(2.0));
}

TEST_CASE("strength is invariant under sign flips of either eigenvector") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> val(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> a(11), b(11);
        for (double& x : a) x = val(rng);
        for (double& x : b) x = val(rng);
        for (transition_kind kind : {transition_kind::T1, transition_kind::T2}) {
            const double o = o_sum(a, b, kind);
            std::vector<double> nb = b;
            for (double& x : nb) x = -x;
            CHECK(o_sum(a, nb, kind) == -o);  // O flips sign, O^2 does not
            std::vector<double> na = a;
            for (double& x : na) x = -x;
            CHECK(o_sum(na, nb, kind) == o);
        }
    }
}

TEST_CASE("top-level transition from the ground state is numerically extinct") {
    strength_record rec =
        strength_numeric(model_spec::tri(11, 1.0, 0.1), transition_kind::T1, 0, 10);
    CHECK(std::abs(rec.amplitude_O) <= 1e-10);
}

TEST_CASE("pentadiagonal dip at the second level, stronger for T2") {
    const model_spec s = model_spec::penta(11, 1.0, 0.1);
    auto S = [&](transition_kind k, int to) {
        return strength_numeric(s, k, 0, to).strength;
    };
    const double t1_1 = S(transition_kind::T1, 1), t1_2 = S(transition_kind::T1, 2),
                 t1_3 = S(transition_kind::T1, 3);
    CHECK(t1_2 < t1_1);
    CHECK(t1_2 < t1_3);
    const double t2_1 = S(transition_kind::T2, 1), t2_2 = S(transition_kind::T2, 2),
                 t2_3 = S(transition_kind::T2, 3);
    CHECK(t2_2 < t2_1);
    CHECK(t2_2 < t2_3);
    // The T2 dip is less pronounced: its strength(0->2)/strength(0->1)
    // fraction sits closer to one.
    CHECK(t2_2 / t2_1 > t1_2 / t1_1);
}

TEST_CASE("windowed leading-term strengths of the tridiagonal ladder") {
    const model_spec s = model_spec::tri();
    struct row { int n; std::optional<int> m; rational A; };
    const std::vector<row> expected = {
        {1, 0, rational(1)},     {2, 3, rat(-2, 3)},    {3, 4, rat(1, 8)},
        {4, 5, rat(-1, 20)},     {5, 6, rat(11, 720)},  {6, 5, rat(-1, 120)},
        {7, 6, rat(1, 144)},     {8, 7, rat(-1, 336)},  {9, 8, rat(1, 1152)},
        {10, std::nullopt, rational(0)},
    };
    for (const row& e : expected) {
        leading_strength ls = strength_series(s, transition_kind::T1, e.n, series_mode::table4);
        CHECK(ls.power == e.m);
        CHECK(ls.coeff_exact == e.A);
    }
}

TEST_CASE("full-series leading strengths, T1") {
    struct row { int n; int m; rational A; };
    const std::vector<row> tri_rows = {
        {1, 0, rational(1)},   {2, 3, rat(1, 3)},     {3, 4, rat(1, 24)},
        {4, 5, rat(1, 180)},   {5, 6, rat(1, 1440)},  {6, 7, rat(1, 12600)},
    };
    for (const row& e : tri_rows) {
        leading_strength ls =
            strength_series(model_spec::tri(), transition_kind::T1, e.n, series_mode::full_rs);
        CHECK(ls.power == e.m);
        CHECK(ls.coeff_exact == e.A);
    }
    const std::vector<row> penta_rows = {
        {1, 0, rational(1)},  {2, 4, rat(-11, 12)},  {3, 2, rat(-1, 8)},
        {4, 3, rat(-1, 12)},  {5, 3, rat(-1, 48)},   {6, 4, rat(-1, 60)},
    };
    for (const row& e : penta_rows) {
        leading_strength ls = strength_series(model_spec::penta(), transition_kind::T1, e.n,
                                              series_mode::full_rs);
        CHECK(ls.power == e.m);
        CHECK(ls.coeff_exact == e.A);
    }
}

TEST_CASE("full-series leading strengths, T2") {
    struct row { int n; int m; double A; };
    const std::vector<row> tri_rows = {
        {1, 0, 1.0},
        {2, 1, -0.4142135624},
        {3, 2, -0.04818815859},
        {4, 3, -0.007748044069},
        {5, 4, -0.001186726107},
        {6, 5, -0.0001642465955},
    };
    for (const row& e : tri_rows) {
        leading_strength ls =
            strength_series(model_spec::tri(), transition_kind::T2, e.n, series_mode::full_rs);
        CHECK(ls.power == e.m);
        CHECK_THAT(ls.coeff, Catch::Matchers::WithinRel(e.A, 5e-9));
    }
    const std::vector<row> penta_rows = {
        {1, 0, 1.0},
        {2, 1, -0.4142135624},
        {3, 1, -0.3660254038},
        {4, 2, -0.07313218497},
        {5, 2, -0.0285042047},
        {6, 3, -0.01146711785},
    };
    for (const row& e : penta_rows) {
        leading_strength ls = strength_series(model_spec::penta(), transition_kind::T2, e.n,
                                              series_mode::full_rs);
        CHECK(ls.power == e.m);
        CHECK_THAT(ls.coeff, Catch::Matchers::WithinRel(e.A, 5e-9));
    }
}

TEST_CASE("pentadiagonal 0->2 strength cancels exactly through third order") {
    // Truncating the cap below the true leading power must report extinction.
    for (int cap : {1, 2, 3})
        CHECK_FALSE(strength_series(model_spec::penta(), transition_kind::T1, 2,
                                    series_mode::full_rs, cap)
                        .power.has_value());
    leading_strength ls =
        strength_series(model_spec::penta(), transition_kind::T1, 2, series_mode::full_rs, 4);
    CHECK(ls.power == 4);
    CHECK(ls.coeff_exact == rat(-11, 12));
    // The windowed mode agrees that nothing survives below order 3.
    leading_strength win =
        strength_series(model_spec::penta(), transition_kind::T1, 2, series_mode::table4);
    REQUIRE(win.power.has_value());
    CHECK(*win.power >= 3);
}

TEST_CASE("weak-coupling strength table rows") {
    const std::vector<table3_row> rows = table3();
    REQUIRE(rows.size() == 10);

    auto g = [](int k) {
        rational f(1);
        for (int i = 2; i <= k; ++i) f *= rational(i);
        return rational(1) / f;
    };
    // Each printed expression, evaluated in exact arithmetic.
    const std::vector<rational> from_expression = {
        rational(1),
        -g(2) - g(3),
        g(2) * g(2) - g(3) + g(4),
        -g(4) - g(5),
        g(4) - g(3) * g(3) + g(6),
        -g(5),
        g(4) - g(3) * g(3) - g(5) + g(6),
        -g(5) * g(2) + g(6) - g(7),
        g(4) * g(4) - g(5) * g(3) + g(6) * g(2) - g(7) + g(8),
        rational(0),
    };
    const std::vector<double> ln_expected = {0.0,          -56.0729724, -77.8416061,
                                             -98.0948683,  -118.8867963, -101.6783872,
                                             -120.4637111, -140.5789875, -161.4639556};
    for (int i = 0; i < 10; ++i) {
        CHECK(rows[i].n == i + 1);
        CHECK(rows[i].A_exact == from_expression[i]);
        if (i < 9) {
            CHECK_THAT(rows[i].ln_O2, Catch::Matchers::WithinAbs(ln_expected[i], 1e-4));
        } else {
            CHECK_FALSE(rows[i].power.has_value());
            CHECK(rows[i].ln_O2 == minus_inf);
        }
    }
    CHECK(rows[1].A_expression == "-g2-g3");
    CHECK(rows[8].A_expression == "g4^2-g5*g3+g6*g2-g7+g8");
}

TEST_CASE("power-law fit recovers the leading exponent") {
    const model_spec tri = model_spec::tri();
    CHECK_THAT(fit_power(tri, transition_kind::T1, 2, kGeomWeak),
               Catch::Matchers::WithinAbs(3.0, 0.05));
    CHECK_THAT(fit_power(tri, transition_kind::T1, 1, kGeomWeak),
               Catch::Matchers::WithinAbs(0.0, 0.05));
}

TEST_CASE("T2 exponents grow by one per level") {
    const model_spec tri = model_spec::tri();
    const std::vector<double> us = geom_list(1e-2, -0.25, 3);
    std::vector<double> slopes;
    for (int n = 2; n <= 8; ++n)
        slopes.push_back(fit_power(tri, transition_kind::T2, n, us));
    for (size_t i = 1; i < slopes.size(); ++i)
        CHECK_THAT(slopes[i] - slopes[i - 1], Catch::Matchers::WithinAbs(1.0, 0.1));
    CHECK_THAT(slopes.front(), Catch::Matchers::WithinAbs(1.0, 0.05));
}

TEST_CASE("an exactly decoupled transition raises the dedicated error") {
    // Offset-2 coupling splits the ladder into parity blocks; rotations never
    // mix them, so the 0 -> 2 T1 overlap is an exact binary zero.
    const model_spec s = model_spec::custom({2}, 11, 1.0, 0.1);
    CHECK_THROWS_AS(fit_power(s, transition_kind::T1, 2, kGeomWeak), zero_strength_error);
}

TEST_CASE("fit preconditions") {
    const model_spec tri = model_spec::tri();
    CHECK_THROWS_AS(fit_power(tri, transition_kind::T1, 2, {1e-3, 1e-4}),
                    std::invalid_argument);  // too few points
    CHECK_THROWS_AS(fit_power(tri, transition_kind::T1, 2, {1e-1, 1e-2, 1e-3}),
                    std::invalid_argument);  // outside the weak-coupling window
    CHECK_THROWS_AS(fit_power(tri, transition_kind::T1, 2, {1e-3, 2e-3, 3e-3}),
                    std::invalid_argument);  // not geometric
    CHECK_THROWS_AS(fit_power(tri, transition_kind::T1, 2, {1e-3, 1e-3, 1e-3}),
                    std::invalid_argument);  // not distinct
    CHECK_THROWS_AS(strength_series(model_spec::tri(), transition_kind::T1, 0,
                                    series_mode::table4),
                    std::invalid_argument);  // target must differ from ground
    CHECK_THROWS_AS(strength_numeric(model_spec::tri(), transition_kind::T1, 3, 3),
                    std::invalid_argument);
}

TEST_CASE("excitation energy tracks the level spacing at weak coupling") {
    strength_record rec =
        strength_numeric(model_spec::tri(11, 1.0, 0.01), transition_kind::T1, 0, 4);
    CHECK_THAT(rec.e_star, Catch::Matchers::WithinAbs(4.0, 0.01));
}
