#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "irrec/rational.hpp"

namespace irrec {

/// Dense univariate polynomial over Rational. coeffs()[i] is the coefficient
/// of x^i; the top coefficient is nonzero unless the polynomial is zero.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& c) {
        if (c != 0) c_.push_back(c);
    }
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Rational(1)); }
    static Poly x() { return monomial(1, 1); }
    static Poly monomial(long deg, const Rational& c) {
        Poly p;
        if (c == 0) return p;
        p.c_.assign(static_cast<size_t>(deg) + 1, Rational(0));
        p.c_.back() = c;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(long i) const {
        return (i >= 0 && i < static_cast<long>(c_.size())) ? c_[static_cast<size_t>(i)] : Rational(0);
    }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }
    Poly operator+(const Poly& o) const {
        Poly r;
        r.c_.resize(std::max(c_.size(), o.c_.size()), Rational(0));
        for (size_t i = 0; i < r.c_.size(); ++i) {
            if (i < c_.size()) r.c_[i] += c_[i];
            if (i < o.c_.size()) r.c_[i] += o.c_[i];
        }
        r.trim();
        return r;
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        Poly r;
        r.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (size_t j = 0; j < o.c_.size(); ++j)
                if (o.c_[j] != 0) r.c_[i + j] += c_[i] * o.c_[j];
        }
        r.trim();
        return r;
    }
    Poly operator*(const Rational& s) const {
        if (s == 0) return Poly();
        Poly r(*this);
        for (auto& c : r.c_) c *= s;
        return r;
    }
    Poly operator/(const Rational& s) const {
        if (s == 0) throw std::domain_error("poly divided by zero scalar");
        Poly r(*this);
        for (auto& c : r.c_) c /= s;
        return r;
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    // Quotient and remainder; o must be nonzero.
    static void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r) {
        if (b.is_zero()) throw std::domain_error("poly division by zero");
        q = Poly();
        r = a;
        if (a.degree() < b.degree()) return;
        q.c_.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
        Rational inv_lead = Rational(1) / b.leading();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            long k = r.degree() - b.degree();
            Rational f = r.leading() * inv_lead;
            q.c_[static_cast<size_t>(k)] = f;
            // r -= f * x^k * b
            for (long i = 0; i <= b.degree(); ++i)
                r.c_[static_cast<size_t>(i + k)] -= f * b.c_[static_cast<size_t>(i)];
            r.trim();
        }
    }

    Poly derivative() const {
        Poly r;
        if (c_.size() <= 1) return r;
        r.c_.resize(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Rational(static_cast<long>(i));
        r.trim();
        return r;
    }

    Poly antiderivative() const {
        Poly r;
        if (is_zero()) return r;
        r.c_.assign(c_.size() + 1, Rational(0));
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i + 1] = c_[i] / Rational(static_cast<long>(i + 1));
        r.trim();
        return r;
    }

    Rational evaluate(const Rational& a) const {
        Rational acc = 0;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * a + c_[i];
        return acc;
    }

    // Taylor shift: returns p(x + a).
    Poly shifted(const Rational& a) const {
        Poly r;
        r.c_.assign(std::max<size_t>(c_.size(), 1), Rational(0));
        if (is_zero()) return Poly();
        // Horner: p(x+a) built from the top coefficient down.
        Poly acc;
        for (size_t i = c_.size(); i-- > 0;) {
            // acc = acc*(x+a) + c_i
            Poly next;
            next.c_.assign(acc.c_.size() + 1, Rational(0));
            for (size_t j = 0; j < acc.c_.size(); ++j) {
                next.c_[j + 1] += acc.c_[j];
                next.c_[j] += acc.c_[j] * a;
            }
            if (next.c_.empty()) next.c_.push_back(Rational(0));
            next.c_[0] += c_[i];
            next.trim();
            acc = next;
        }
        return acc;
    }

    Poly pow(long e) const {
        if (e < 0) throw std::domain_error("poly pow negative");
        Poly acc = one(), base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    // Number of times (x - a) divides this.
    long root_multiplicity(const Rational& a) const {
        if (is_zero()) return 0;
        Poly p = *this;
        long m = 0;
        while (p.evaluate(a) == 0) {
            p = p.deflate(a);
            ++m;
        }
        return m;
    }

    // Divide by (x - a), assuming a is a root.
    Poly deflate(const Rational& a) const {
        Poly q;
        q.c_.assign(c_.size() - 1, Rational(0));
        Rational carry = 0;
        for (size_t i = c_.size(); i-- > 1;) {
            carry = c_[i] + carry * a;
            q.c_[i - 1] = carry;
        }
        q.trim();
        return q;
    }

    // All rational roots with multiplicity, via the rational root theorem on
    // the integer-cleared polynomial.
    std::vector<std::pair<Rational, long>> rational_roots() const;

    std::uint64_t hash() const {
        std::uint64_t h = 0x100000001b3ULL;
        for (const auto& c : c_) h = (h ^ hash_rational(c)) * 0x100000001b3ULL;
        return h ^ c_.size();
    }

    std::string str(const std::string& var = "z") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline Poly operator*(const Rational& s, const Poly& p) { return p * s; }

// gcd of two polynomials, returned primitive with positive leading
// coefficient (monic up to integer content). Uses the primitive Euclidean
// sequence on integer-cleared inputs to keep coefficients small.
Poly poly_gcd(const Poly& a, const Poly& b);

std::string poly_str(const Poly& p, const std::string& var);

}  // namespace irrec
