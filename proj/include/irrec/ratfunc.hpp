#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "irrec/poly.hpp"

namespace irrec {

/// Univariate rational function over Rational, stored gcd-reduced with a
/// monic denominator. That makes equality structural.
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly::one()) {}
    RatFunc(const Rational& c) : num_(Poly(c)), den_(Poly::one()) {}
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }
    explicit RatFunc(const Poly& num) : num_(num), den_(Poly::one()) {}

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(Rational(1)); }
    static RatFunc var() { return RatFunc(Poly::x()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc operator-() const {
        RatFunc r(*this);
        r.num_ = -r.num_;
        return r;
    }
    // Addition and multiplication keep canonical form with cross-gcds, so the
    // expensive full reduction never sees large composite polynomials.
    RatFunc operator+(const RatFunc& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        Poly g = poly_gcd(den_, o.den_);
        if (g.degree() <= 0) {
            RatFunc r;
            r.num_ = num_ * o.den_ + o.num_ * den_;
            r.den_ = den_ * o.den_;
            r.post_normalize();
            return r;
        }
        Poly b1 = exact_div(den_, g), d1 = exact_div(o.den_, g);
        Poly num = num_ * d1 + o.num_ * b1;
        Poly h = poly_gcd(num, g);
        RatFunc r;
        if (h.degree() > 0) {
            r.num_ = exact_div(num, h);
            r.den_ = exact_div(g, h) * b1 * d1;
        } else {
            r.num_ = num;
            r.den_ = g * b1 * d1;
        }
        r.post_normalize();
        return r;
    }
    RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
    RatFunc operator*(const RatFunc& o) const {
        if (is_zero() || o.is_zero()) return RatFunc();
        Poly g1 = poly_gcd(num_, o.den_);
        Poly g2 = poly_gcd(o.num_, den_);
        RatFunc r;
        r.num_ = exact_div(num_, g1) * exact_div(o.num_, g2);
        r.den_ = exact_div(den_, g2) * exact_div(o.den_, g1);
        r.post_normalize();
        return r;
    }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) throw std::domain_error("division by zero rational function");
        return *this * o.reciprocal();
    }
    RatFunc reciprocal() const {
        if (is_zero()) throw std::domain_error("reciprocal of zero");
        RatFunc r;
        r.num_ = den_;
        r.den_ = num_;
        r.post_normalize();
        return r;
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    RatFunc operator*(const Rational& s) const { return RatFunc(num_ * s, den_); }

    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    RatFunc pow(long e) const {
        if (e < 0) return reciprocal().pow(-e);
        RatFunc acc = one(), base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    /// Composition f(g(z)); exact substitution.
    RatFunc compose(const RatFunc& g) const {
        // frequent involutions get cheap special cases
        if (g.den_ == Poly::x() && g.num_ == Poly::one()) return composed_with_inverse();
        if (g.den_.degree() == 0 && g.num_ == -Poly::x()) return composed_with_negation();
        return compose_generic(g);
    }

    RatFunc composed_with_inverse() const {  // f(1/z)
        auto rev = [](const Poly& p) {
            std::vector<Rational> c(p.coeffs().rbegin(), p.coeffs().rend());
            return Poly(c);
        };
        long dn = std::max<long>(num_.degree(), 0), dd = std::max<long>(den_.degree(), 0);
        Poly n = rev(num_), d = rev(den_);
        if (dd > dn) n = n * Poly::x().pow(dd - dn);
        if (dn > dd) d = d * Poly::x().pow(dn - dd);
        return RatFunc(n, d);
    }

    RatFunc composed_with_negation() const {  // f(-z)
        auto alt = [](const Poly& p) {
            std::vector<Rational> c = p.coeffs();
            for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
            return Poly(c);
        };
        RatFunc r;
        r.num_ = alt(num_);
        r.den_ = alt(den_);
        r.post_normalize();
        return r;
    }

    RatFunc compose_generic(const RatFunc& g) const {
        // p(a/b) = sum p_i a^i b^{d-i} / b^d, done in plain Poly arithmetic.
        auto eval = [&](const Poly& p) {
            long d = std::max<long>(p.degree(), 0);
            Poly acc;  // sum over i
            Poly apow = Poly::one();
            std::vector<Poly> bpow(static_cast<size_t>(d) + 1);
            bpow[0] = Poly::one();
            for (long i = 1; i <= d; ++i) bpow[static_cast<size_t>(i)] = bpow[static_cast<size_t>(i - 1)] * g.den_;
            for (long i = 0; i <= d; ++i) {
                Rational ci = p.coeff(i);
                if (ci != 0) acc += apow * bpow[static_cast<size_t>(d - i)] * ci;
                if (i < d) apow *= g.num_;
            }
            return acc;  // numerator over b^d
        };
        long dn = std::max<long>(num_.degree(), 0), dd = std::max<long>(den_.degree(), 0);
        Poly pn = eval(num_), pd = eval(den_);
        // align denominators b^dn vs b^dd
        if (dn < dd) pn *= g.den_.pow(dd - dn);
        if (dd < dn) pd *= g.den_.pow(dn - dd);
        if (pd.is_zero()) throw std::domain_error("substitution makes denominator vanish identically");
        return RatFunc(pn, pd);
    }

    Rational evaluate(const Rational& a) const {
        Rational d = den_.evaluate(a);
        if (d == 0) throw std::domain_error("evaluation at a pole");
        return num_.evaluate(a) / d;
    }

    /// Order of vanishing at z=a (negative for a pole). Zero function: huge.
    long valuation_at(const Rational& a) const {
        if (is_zero()) return LONG_MAX_VAL;
        return num_.root_multiplicity(a) - den_.root_multiplicity(a);
    }

    /// Order of vanishing at infinity, i.e. valuation in 1/z.
    long valuation_at_infinity() const {
        if (is_zero()) return LONG_MAX_VAL;
        return den_.degree() - num_.degree();
    }

    std::uint64_t hash() const { return num_.hash() * 0x9e3779b97f4a7c15ULL ^ den_.hash(); }

    std::string str(const std::string& var = "z") const;

    static constexpr long LONG_MAX_VAL = 1L << 60;

private:
    static Poly exact_div(const Poly& a, const Poly& b) {
        if (b.degree() <= 0) return a / b.leading();
        Poly q, r;
        Poly::divrem(a, b, q, r);
        return q;
    }

    // monic denominator + zero canonicalization (inputs already coprime)
    void post_normalize() {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly::one();
            return;
        }
        Rational lead = den_.leading();
        if (lead != 1) {
            num_ = num_ / lead;
            den_ = den_ / lead;
        }
    }

    void reduce() {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly::one();
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        post_normalize();
    }

    Poly num_, den_;
};

inline RatFunc operator*(const Rational& s, const RatFunc& f) { return f * s; }

// Laurent coefficients of f at z=a, exponents lo..hi inclusive (exact).
std::vector<Rational> laurent_coeffs_at(const RatFunc& f, const Rational& a, long lo, long hi);

// Exact residue of f dz at z=a.
Rational residue_at(const RatFunc& f, const Rational& a);

// The unique rational function with poles only at a such that f - result is
// analytic at a (zero when f is analytic there).
RatFunc principal_part_at(const RatFunc& f, const Rational& a);

// Antiderivative split into a rational part plus exact log terms c*log(z-r).
struct Antiderivative {
    RatFunc rational_part;
    std::vector<std::pair<Rational, Rational>> logs;  // (coefficient, root)
};
Antiderivative integrate(const RatFunc& f);

}  // namespace irrec
