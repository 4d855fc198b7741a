#include "irrec/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace irrec {

LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b) {
    if (!a.same_point(b)) throw std::domain_error("series at different points");
    LaurentSeries r;
    r.at_infinity = a.at_infinity;
    r.center = a.center;
    r.order = std::min(a.order, b.order);
    r.val = std::min(a.val, b.val);
    if (r.val > r.order) r.val = r.order + 1;
    r.c.assign(static_cast<size_t>(std::max<long>(r.order - r.val + 1, 0)), Rational(0));
    for (long e = r.val; e <= r.order; ++e) {
        Rational x = 0;
        if (e >= a.val && e <= a.order) x += a.c[static_cast<size_t>(e - a.val)];
        if (e >= b.val && e <= b.order) x += b.c[static_cast<size_t>(e - b.val)];
        r.c[static_cast<size_t>(e - r.val)] = x;
    }
    r.normalize();
    return r;
}

LaurentSeries series_scale(const LaurentSeries& a, const Rational& s) {
    LaurentSeries r = a;
    for (auto& x : r.c) x *= s;
    r.normalize();
    return r;
}

LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b) {
    if (!a.same_point(b)) throw std::domain_error("series at different points");
    LaurentSeries r;
    r.at_infinity = a.at_infinity;
    r.center = a.center;
    // valuations are exact, so the product order is limited by both inputs
    r.order = std::min(a.order + b.val, b.order + a.val);
    r.val = a.val + b.val;
    if (a.c.empty() || b.c.empty()) {
        r.val = r.order + 1;
        return r;
    }
    r.c.assign(static_cast<size_t>(std::max<long>(r.order - r.val + 1, 0)), Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        long ea = a.val + static_cast<long>(i);
        for (size_t j = 0; j < b.c.size(); ++j) {
            long e = ea + b.val + static_cast<long>(j);
            if (e > r.order) break;
            if (b.c[j] != 0) r.c[static_cast<size_t>(e - r.val)] += a.c[i] * b.c[j];
        }
    }
    r.normalize();
    return r;
}

LaurentSeries series_inverse(const LaurentSeries& a) {
    LaurentSeries b = a;
    b.normalize();
    if (b.c.empty() || b.c[0] == 0) throw std::domain_error("inverse of zero series");
    LaurentSeries r;
    r.at_infinity = a.at_infinity;
    r.center = a.center;
    long n = b.order - b.val;  // unit-part length - 1
    r.val = -b.val;
    r.order = r.val + n;
    r.c.assign(static_cast<size_t>(n + 1), Rational(0));
    r.c[0] = Rational(1) / b.c[0];
    for (long k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (long j = 0; j < k; ++j) {
            long bi = k - j;
            if (bi < static_cast<long>(b.c.size())) acc += r.c[static_cast<size_t>(j)] * b.c[static_cast<size_t>(bi)];
        }
        r.c[static_cast<size_t>(k)] = -acc / b.c[0];
    }
    return r;
}

LaurentSeries series_expand(const RatFunc& f, bool at_infinity, const Rational& center, long order) {
    LaurentSeries r;
    r.at_infinity = at_infinity;
    r.center = at_infinity ? Rational(0) : center;
    r.order = order;
    if (f.is_zero()) {
        r.val = order + 1;
        return r;
    }
    if (!at_infinity) {
        long v = f.valuation_at(center);
        r.val = v;
        if (v > order) {
            r.val = order + 1;
            return r;
        }
        r.c = laurent_coeffs_at(f, center, v, order);
        r.normalize();
        return r;
    }
    // At infinity: substitute z = 1/w and expand at w = 0.
    RatFunc w = RatFunc::var();
    RatFunc g = f.compose(RatFunc(Poly::one(), Poly::x()));
    long v = g.valuation_at(0);
    r.val = v;
    if (v > order) {
        r.val = order + 1;
        return r;
    }
    r.c = laurent_coeffs_at(g, 0, v, order);
    r.normalize();
    return r;
}

std::vector<Rational> compose_ratfunc_series(const RatFunc& f, const std::vector<Rational>& s,
                                             long order) {
    size_t n = static_cast<size_t>(order) + 1;
    auto mul = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> r(n, Rational(0));
        for (size_t i = 0; i < n && i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j + i < n && j < b.size(); ++j)
                if (b[j] != 0) r[i + j] += a[i] * b[j];
        }
        return r;
    };
    auto eval_poly = [&](const Poly& p) {
        std::vector<Rational> acc(n, Rational(0));
        for (long i = p.degree(); i >= 0; --i) {
            acc = mul(acc, s);
            acc[0] += p.coeff(i);
        }
        return acc;
    };
    std::vector<Rational> num = eval_poly(f.num()), den = eval_poly(f.den());
    if (den[0] == 0) throw std::domain_error("composition hits a pole at the base point");
    std::vector<Rational> q(n, Rational(0));
    for (size_t k = 0; k < n; ++k) {
        Rational acc = num[k];
        for (size_t j = 0; j < k; ++j) acc -= q[j] * den[k - j];
        q[k] = acc / den[0];
    }
    return q;
}

std::vector<Rational> invert_x_series(const RatFunc& x, long order) {
    // q(z) := z * x(z) must be a polynomial with q(0) = 1; then z = q(z)/x
    // is a contraction in the 1/x-adic metric.
    RatFunc zq = RatFunc::var() * x;
    if (zq.den().degree() != 0) throw std::domain_error("invert_x_series: z*x(z) not polynomial");
    Poly q = zq.num() / zq.den().leading();
    if (q.coeff(0) != 1) throw std::domain_error("invert_x_series: needs q(0) = 1");
    size_t n = static_cast<size_t>(order) + 1;
    std::vector<Rational> z(n, Rational(0));
    for (long it = 0; it <= order; ++it) {
        // z <- q(z) / x, i.e. shift the series of q(z) by one power of u=1/x
        std::vector<Rational> acc(n, Rational(0));
        for (long i = q.degree(); i >= 0; --i) {
            // acc = acc * z + q_i
            std::vector<Rational> next(n, Rational(0));
            for (size_t a = 0; a < n; ++a) {
                if (acc[a] == 0) continue;
                for (size_t b = 0; a + b < n && b < n; ++b)
                    if (z[b] != 0) next[a + b] += acc[a] * z[b];
            }
            next[0] += q.coeff(i);
            acc = std::move(next);
        }
        std::vector<Rational> shifted(n, Rational(0));
        for (size_t i = 0; i + 1 < n; ++i) shifted[i + 1] = acc[i];
        if (shifted == z) break;
        z = std::move(shifted);
    }
    return z;
}

std::string LaurentSeries::str(const std::string& var) const {
    std::ostringstream os;
    std::string t = at_infinity ? (var + "^-1")
                                : (center == 0 ? var : "(" + var + "-" + center.get_str() + ")");
    bool first = true;
    for (long e = val; e <= order; ++e) {
        Rational x = coeff(e);
        if (x == 0) continue;
        if (!first) os << (sgn(x) < 0 ? " - " : " + ");
        else if (sgn(x) < 0)
            os << "-";
        Rational a = abs(x);
        if (e == 0 || a != 1) os << a.get_str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << t;
            long shown = at_infinity ? -e : e;
            if (at_infinity) shown = e;  // exponent of z^{-1}
            if (shown != 1) os << "^" << shown;
        }
        first = false;
    }
    if (first) os << "0";
    os << " + O(" << t << "^" << order + 1 << ")";
    return os.str();
}

}  // namespace irrec
