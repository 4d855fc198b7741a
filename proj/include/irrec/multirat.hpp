#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "irrec/ratfunc.hpp"

namespace irrec {

/// Multivariate rational function as a recursive tower: a rational function
/// in its top variable whose coefficients are towers over the lower
/// variables. Variables are indexed 1,2,... with the fixed order z1 < z2 < ...
/// Canonical form: the top variable actually occurs (otherwise the value
/// collapses to a lower level), numerator/denominator are gcd-reduced over
/// the coefficient field, and the denominator is monic. Equality is then
/// structural.
class MultiRat {
public:
    MultiRat() : lvl_(0), scalar_(0) {}
    MultiRat(const Rational& c) : lvl_(0), scalar_(c) {}

    static MultiRat var(int v);
    /// Lift a univariate rational function into variable v.
    static MultiRat from_ratfunc(const RatFunc& f, int v);

    int level() const { return lvl_; }
    bool is_zero() const { return lvl_ == 0 && scalar_ == 0; }
    bool is_scalar() const { return lvl_ == 0; }
    const Rational& scalar() const { return scalar_; }

    bool operator==(const MultiRat& o) const;
    bool operator!=(const MultiRat& o) const { return !(*this == o); }

    MultiRat operator-() const;
    MultiRat operator+(const MultiRat& o) const;
    MultiRat operator-(const MultiRat& o) const;
    MultiRat operator*(const MultiRat& o) const;
    MultiRat operator/(const MultiRat& o) const;
    MultiRat& operator+=(const MultiRat& o) { return *this = *this + o; }
    MultiRat& operator-=(const MultiRat& o) { return *this = *this - o; }
    MultiRat& operator*=(const MultiRat& o) { return *this = *this * o; }

    MultiRat pow(long e) const;

    /// Partial derivative with respect to variable v.
    MultiRat derivative(int v) const;

    /// Replace variable v by the value g (which may involve other variables).
    MultiRat substituted(int v, const MultiRat& g) const;

    /// Residue in the top (active) variable at the finite point alpha;
    /// the result lives over the remaining variables.
    MultiRat residue_top(const Rational& alpha) const;

    /// Extract the univariate rational function when only variable v occurs.
    RatFunc to_ratfunc() const;

    std::string str() const;
    std::uint64_t hash() const;

private:
    // Polynomials in the top variable with MultiRat coefficients.
    using PolyM = std::vector<MultiRat>;

    MultiRat(int lvl, PolyM num, PolyM den);

    static void trim(PolyM& p);
    static PolyM p_add(const PolyM& a, const PolyM& b);
    static PolyM p_neg(const PolyM& a);
    static PolyM p_mul(const PolyM& a, const PolyM& b);
    static PolyM p_scale(const PolyM& a, const MultiRat& s);
    static void p_divrem(const PolyM& a, const PolyM& b, PolyM& q, PolyM& r);
    static PolyM p_gcd(PolyM a, PolyM b);
    static bool p_is_zero(const PolyM& a) { return a.empty(); }

    // View this value as a rational function in variable `level` (>= lvl_).
    void as_level(int level, PolyM& num, PolyM& den) const;

    void reduce();

    int lvl_;
    Rational scalar_;  // valid when lvl_ == 0
    PolyM num_, den_;  // valid when lvl_ >= 1
};

}  // namespace irrec
