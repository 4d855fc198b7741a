#include "doctest.h"

#include "irrec/quantum.hpp"

using namespace irrec;
using namespace irrec::quantum;

TEST_CASE("stirling numbers of the first kind") {
    CHECK(stirling_first(3, 2) == 3);
    for (long n = 0; n <= 8; ++n) CHECK(stirling_first(n, n) == 1);
    Integer rowsum = 0;
    for (long k = 0; k <= 4; ++k) rowsum += stirling_first(4, k);
    CHECK(rowsum == 24);
    // generating identity: sum_k s(n,k) x^k = x(x+1)...(x+n-1) at x=3, n=5
    Integer lhs = 0, pw = 1;
    for (long k = 0; k <= 5; ++k) {
        lhs += stirling_first(5, k) * pw;
        pw *= 3;
    }
    CHECK(lhs == Integer(3 * 4 * 5 * 6 * 7));
}

TEST_CASE("wave coefficients") {
    CHECK(wave_coeff(0) == HLaurent(Rational(1)));
    CHECK(wave_coeff(1) == HLaurent::monomial(-1, 1));
    HLaurent a2 = wave_coeff(2);
    CHECK(a2.coeff(-2) == ratio(1, 2));
    CHECK(a2.coeff(-1) == 1);
    CHECK(a2.coeff(0) == ratio(1, 2));
    // hbar-expansion equals the f_bullet row for e <= 8
    for (long e = 1; e <= 8; ++e) {
        HLaurent ae = wave_coeff(e);
        for (long v = 1; v <= 2 * e + 2; ++v) CHECK(ae.coeff(e - v) == f_bullet(v, e));
        // support窗 inside [-e, e-2]
        CHECK(ae.val() >= -e);
        CHECK(ae.top() <= e);
    }
}

TEST_CASE("f_bullet values and support") {
    CHECK(f_bullet(2, 1) == 1);
    CHECK(f_bullet(2, 2) == ratio(1, 2));
    CHECK(f_bullet(4, 2) == ratio(1, 2));
    for (long e = 1; e <= 6; ++e) {
        CHECK(f_bullet(1, e) == 0);
        CHECK(f_bullet(2 * e + 1, e) == 0);
    }
}

TEST_CASE("quantum curve ODE annihilates the wave function") {
    auto res = ode_residual(12);
    for (const auto& r : res) CHECK(r.is_zero());
    auto steps = single_step_residuals(12);
    for (const auto& r : steps) CHECK(r.is_zero());
    // negative control: perturb a_3
    XSeries z = wave_series(13);
    z.set_coeff(3, z.coeff(3) + HLaurent(Rational(1)));
    auto bad = ode_residuals_of(z, 12);
    CHECK_FALSE(bad[2].is_zero());  // residual at x^{-3}
}

TEST_CASE("connected/disconnected consistency") {
    auto table = connected_disconnected_check(6, 12);
    for (const auto& [key, r] : table) {
        CAPTURE(key.first);
        CAPTURE(key.second);
        CHECK(r == 0);
    }
    CHECK(table.count({2, 1}) == 1);
    CHECK(table.count({2, 3}) == 1);
}

TEST_CASE("semiclassical limit") {
    CHECK(semiclassical_residual(5).is_zero_through_order());
    CHECK(semiclassical_residual(20).is_zero_through_order());
    auto y = catalan_y_series(10);
    y[3] += 1;  // perturb C_2
    auto res = quadratic_residual(y, 10);
    CHECK_FALSE(res.is_zero_through_order());
    CHECK(res.coeff(0) == 0);
    CHECK(res.coeff(2) != 0);
}

TEST_CASE("normal ordering identity") {
    auto res = normal_ordering_residual(10);
    for (const auto& r : res) CHECK(r.is_zero());
    // the two operator orderings agree on an arbitrary monomial
    XSeries mono;
    mono.valid_to = 30;
    mono.set_coeff(3, HLaurent(Rational(1)));
    auto [a, b] = normal_ordering_apply(mono);
    for (long e = 0; e <= 10; ++e) CHECK(a.coeff(e) == b.coeff(e));
    // dropping the -h Y correction breaks the agreement
    const HLaurent h = HLaurent::monomial(1, 1);
    XSeries z = wave_series(11);
    auto Y = [&](const XSeries& f) -> XSeries {
        return xs_add(xs_scale(xs_ddx(f), h * Rational(-1)), xs_mul_xinv(f));
    };
    XSeries yz = Y(z);
    XSeries xyz = xs_mul_x(yz);
    XSeries wrong = xs_add(xs_sub(xs_mul_x(Y(yz)), xyz), z);  // no -hY term
    bool any_nonzero = false;
    for (long e = 0; e <= 10; ++e) any_nonzero |= !wrong.coeff(e).is_zero();
    CHECK(any_nonzero);
}
