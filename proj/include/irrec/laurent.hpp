#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "irrec/ratfunc.hpp"

namespace irrec {

/// Truncated Laurent expansion, either around a finite point (in t = z-center)
/// or around infinity (in t = 1/z). Coefficients run from `val` through
/// `order` inclusive; arithmetic never reports anything beyond the common
/// truncation order.
struct LaurentSeries {
    bool at_infinity = false;
    Rational center = 0;
    long val = 0;
    long order = -1;
    std::vector<Rational> c;  // c[i] = coefficient of t^{val+i}; size = order-val+1

    Rational coeff(long e) const {
        if (e > order) throw std::domain_error("coefficient beyond truncation order");
        if (e < val) return 0;
        return c[static_cast<size_t>(e - val)];
    }
    bool same_point(const LaurentSeries& o) const {
        return at_infinity == o.at_infinity && (at_infinity || center == o.center);
    }
    void normalize() {
        while (!c.empty() && c.front() == 0) {
            c.erase(c.begin());
            ++val;
        }
        if (c.empty()) val = order + 1;
    }
    bool is_zero_through_order() const {
        for (const auto& x : c)
            if (x != 0) return false;
        return true;
    }
    std::string str(const std::string& var = "z") const;
};

LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries series_scale(const LaurentSeries& a, const Rational& s);
LaurentSeries series_inverse(const LaurentSeries& a);

/// Exact expansion of f at a finite point or at infinity, through t^order.
LaurentSeries series_expand(const RatFunc& f, bool at_infinity, const Rational& center, long order);

/// Compose f with a power series s in Q[[u]] (s must have positive valuation
/// when f has a pole at 0 is not supported; den(s(0)) must not vanish).
/// Returns the expansion of f(s(u)) through u^order.
std::vector<Rational> compose_ratfunc_series(const RatFunc& f, const std::vector<Rational>& s,
                                             long order);

/// Functional inverse for curves with z*x(z) polynomial: solves x(z(u)) = 1/u
/// as a power series z(u) = c1*u + c2*u^2 + ... (u = 1/x). Requires
/// z*x(z) = q(z) with q(0) = 1.
std::vector<Rational> invert_x_series(const RatFunc& x, long order);

}  // namespace irrec
