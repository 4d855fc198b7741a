#pragma once

#include <map>
#include <vector>

#include "irrec/laurent.hpp"
#include "irrec/rational.hpp"

namespace irrec {

/// Laurent polynomial in hbar with exact rational coefficients.
class HLaurent {
public:
    HLaurent() = default;
    HLaurent(const Rational& c) {
        if (c != 0) {
            val_ = 0;
            c_.push_back(c);
        }
    }
    static HLaurent monomial(long e, const Rational& c) {
        HLaurent h;
        if (c != 0) {
            h.val_ = e;
            h.c_.push_back(c);
        }
        return h;
    }

    bool is_zero() const { return c_.empty(); }
    long val() const { return val_; }
    long top() const { return val_ + static_cast<long>(c_.size()) - 1; }
    Rational coeff(long e) const {
        if (is_zero() || e < val_ || e > top()) return 0;
        return c_[static_cast<size_t>(e - val_)];
    }

    HLaurent operator+(const HLaurent& o) const;
    HLaurent operator-(const HLaurent& o) const;
    HLaurent operator*(const HLaurent& o) const;
    HLaurent operator*(const Rational& s) const;
    HLaurent& operator+=(const HLaurent& o) { return *this = *this + o; }
    HLaurent& operator-=(const HLaurent& o) { return *this = *this - o; }
    bool operator==(const HLaurent& o) const { return val_ == o.val_ && c_ == o.c_; }
    bool operator!=(const HLaurent& o) const { return !(*this == o); }

    std::string str() const;

private:
    void normalize();
    long val_ = 0;
    std::vector<Rational> c_;
};

/// Truncated series in x^{-1} with HLaurent coefficients and explicit
/// bookkeeping of the largest trusted order (multiplication by x consumes one
/// order, differentiation gains one).
struct XSeries {
    long lo = 0;       // smallest stored exponent e of x^{-e} (negative = positive x power)
    long valid_to = -1;
    std::vector<HLaurent> c;  // c[i] = coefficient of x^{-(lo+i)}

    HLaurent coeff(long e) const {
        if (e < lo || e > lo + static_cast<long>(c.size()) - 1) return HLaurent();
        return c[static_cast<size_t>(e - lo)];
    }
    void set_coeff(long e, const HLaurent& h);
};

XSeries xs_add(const XSeries& a, const XSeries& b);
XSeries xs_sub(const XSeries& a, const XSeries& b);
XSeries xs_scale(const XSeries& a, const HLaurent& s);
XSeries xs_mul_x(const XSeries& a);      // multiply by x
XSeries xs_mul_xinv(const XSeries& a);   // multiply by 1/x
XSeries xs_ddx(const XSeries& a);        // d/dx

namespace quantum {

/// Unsigned Stirling numbers of the first kind.
Integer stirling_first(long n, long k);

/// Wave coefficient a_e(hbar) = (hbar^e/e!) [hbar^{-1}(hbar^{-1}+1)...(hbar^{-1}+e-1)]^2.
HLaurent wave_coeff(long e);

/// Weighted disconnected count f_bullet(v, e) = (1/e!) sum_{a+b=v} s(e,a) s(e,b).
Rational f_bullet(long v, long e);

/// The wave series 1 + sum a_e x^{-e} through order E.
XSeries wave_series(long E);

/// Residuals of [x hbar^2 d^2 + hbar(hbar - 2 + x) d + 1/x] applied to the
/// given series, per power x^{-1}..x^{-E} (trusted range only).
std::vector<HLaurent> ode_residuals_of(const XSeries& z, long E);
std::vector<HLaurent> ode_residual(long E);

/// Single-step relation residuals (e+1) a_{e+1} - hbar (hbar^{-1}+e)^2 a_e.
std::vector<HLaurent> single_step_residuals(long E);

/// Coefficient of hbar^{e-v} x^{-e} in log(wave series) minus the connected
/// count assembled from the dessin recursion; zero for all e <= E, 2 <= v <= 2e.
std::map<std::pair<long, long>, Rational> connected_disconnected_check(long E, long Vmax);

/// y-hat = sum_{mu >= 0} U_0(mu) x^{-mu-1}, coefficients through x^{-(K+1)}.
std::vector<Rational> catalan_y_series(long K);

/// x yhat^2 - x yhat + 1 as a series in 1/x, coefficients 0..K (expected 0).
LaurentSeries semiclassical_residual(long K);
LaurentSeries quadratic_residual(const std::vector<Rational>& yhat, long K);

/// Apply the two conjugated operator forms (Y X Y - X Y + 1) and
/// (X Y^2 - X Y + 1 - hbar Y), Y = -hbar d/dx + 1/x, to the given series;
/// returns both residual series.
std::pair<XSeries, XSeries> normal_ordering_apply(const XSeries& z);
std::vector<HLaurent> normal_ordering_residual(long E);

}  // namespace quantum

}  // namespace irrec
