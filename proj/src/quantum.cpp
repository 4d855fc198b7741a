#include "irrec/quantum.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "irrec/dessins.hpp"

namespace irrec {

void HLaurent::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    while (!c_.empty() && c_.front() == 0) {
        c_.erase(c_.begin());
        ++val_;
    }
    if (c_.empty()) val_ = 0;
}

HLaurent HLaurent::operator+(const HLaurent& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    HLaurent r;
    r.val_ = std::min(val_, o.val_);
    long hi = std::max(top(), o.top());
    r.c_.assign(static_cast<size_t>(hi - r.val_ + 1), Rational(0));
    for (long e = r.val_; e <= hi; ++e)
        r.c_[static_cast<size_t>(e - r.val_)] = coeff(e) + o.coeff(e);
    r.normalize();
    return r;
}

HLaurent HLaurent::operator-(const HLaurent& o) const { return *this + o * Rational(-1); }

HLaurent HLaurent::operator*(const HLaurent& o) const {
    if (is_zero() || o.is_zero()) return HLaurent();
    HLaurent r;
    r.val_ = val_ + o.val_;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            if (o.c_[j] != 0) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.normalize();
    return r;
}

HLaurent HLaurent::operator*(const Rational& s) const {
    if (s == 0) return HLaurent();
    HLaurent r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

std::string HLaurent::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long e = top(); e >= val_; --e) {
        Rational x = coeff(e);
        if (x == 0) continue;
        if (!first) os << (sgn(x) < 0 ? " - " : " + ");
        else if (sgn(x) < 0)
            os << "-";
        Rational a = abs(x);
        if (e == 0 || a != 1) os << a.get_str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << "h";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

void XSeries::set_coeff(long e, const HLaurent& h) {
    if (c.empty()) {
        lo = e;
        c.push_back(h);
        return;
    }
    if (e < lo) {
        c.insert(c.begin(), static_cast<size_t>(lo - e), HLaurent());
        lo = e;
    }
    long hi = lo + static_cast<long>(c.size()) - 1;
    if (e > hi) c.resize(c.size() + static_cast<size_t>(e - hi), HLaurent());
    c[static_cast<size_t>(e - lo)] = h;
}

XSeries xs_add(const XSeries& a, const XSeries& b) {
    XSeries r;
    r.valid_to = std::min(a.valid_to, b.valid_to);
    long lo = std::min(a.lo, b.lo);
    long hi = std::max(a.lo + static_cast<long>(a.c.size()), b.lo + static_cast<long>(b.c.size())) - 1;
    hi = std::min(hi, r.valid_to);
    for (long e = lo; e <= hi; ++e) r.set_coeff(e, a.coeff(e) + b.coeff(e));
    if (r.c.empty()) r.lo = lo;
    return r;
}

XSeries xs_sub(const XSeries& a, const XSeries& b) { return xs_add(a, xs_scale(b, HLaurent(Rational(-1)))); }

XSeries xs_scale(const XSeries& a, const HLaurent& s) {
    XSeries r;
    r.lo = a.lo;
    r.valid_to = a.valid_to;
    for (const auto& h : a.c) r.c.push_back(h * s);
    return r;
}

XSeries xs_mul_x(const XSeries& a) {
    XSeries r;
    r.lo = a.lo - 1;
    r.valid_to = a.valid_to - 1;
    r.c = a.c;
    return r;
}

XSeries xs_mul_xinv(const XSeries& a) {
    XSeries r;
    r.lo = a.lo + 1;
    r.valid_to = a.valid_to + 1;
    r.c = a.c;
    return r;
}

XSeries xs_ddx(const XSeries& a) {
    // d/dx x^{-e} = -e x^{-e-1}
    XSeries r;
    r.lo = a.lo + 1;
    r.valid_to = a.valid_to + 1;
    for (size_t i = 0; i < a.c.size(); ++i) {
        long e = a.lo + static_cast<long>(i);
        r.c.push_back(a.c[i] * Rational(-e));
    }
    return r;
}

namespace quantum {

Integer stirling_first(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    static std::vector<std::vector<Integer>> table{{1}};
    while (static_cast<long>(table.size()) <= n) {
        long m = static_cast<long>(table.size());
        std::vector<Integer> row(static_cast<size_t>(m) + 1, Integer(0));
        for (long j = 1; j <= m; ++j) {
            Integer from_lower = table.back()[static_cast<size_t>(j - 1)];
            Integer same = (j <= m - 1) ? Integer(Integer(m - 1) * table.back()[static_cast<size_t>(j)]) : Integer(0);
            row[static_cast<size_t>(j)] = from_lower + same;
        }
        table.push_back(std::move(row));
    }
    return table[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

HLaurent wave_coeff(long e) {
    if (e < 0) throw std::domain_error("wave_coeff: e >= 0");
    if (e == 0) return HLaurent(Rational(1));
    HLaurent acc;
    Rational efact(factorial(e));
    for (long a = 1; a <= e; ++a)
        for (long b = 1; b <= e; ++b) {
            Rational c = Rational(stirling_first(e, a) * stirling_first(e, b)) / efact;
            acc += HLaurent::monomial(e - a - b, c);
        }
    return acc;
}

Rational f_bullet(long v, long e) {
    if (e < 1) throw std::domain_error("f_bullet: e >= 1");
    if (v < 2 || v > 2 * e) return 0;
    Integer s = 0;
    for (long a = 1; a < v; ++a) s += stirling_first(e, a) * stirling_first(e, v - a);
    return ratio(s, factorial(e));
}

XSeries wave_series(long E) {
    XSeries z;
    z.valid_to = E;
    for (long e = 0; e <= E; ++e) z.set_coeff(e, wave_coeff(e));
    return z;
}

std::vector<HLaurent> ode_residuals_of(const XSeries& z, long E) {
    const HLaurent h = HLaurent::monomial(1, 1);
    const HLaurent h2 = h * h;
    XSeries d1 = xs_ddx(z);
    XSeries d2 = xs_ddx(d1);
    XSeries term1 = xs_scale(xs_mul_x(d2), h2);
    XSeries term2 = xs_scale(d1, h * (h - HLaurent(Rational(2))));
    XSeries term3 = xs_scale(xs_mul_x(d1), h);
    XSeries term4 = xs_mul_xinv(z);
    XSeries res = xs_add(xs_add(term1, term2), xs_add(term3, term4));
    if (res.valid_to < E) throw std::domain_error("ode_residuals_of: series too short");
    std::vector<HLaurent> out;
    for (long e = 1; e <= E; ++e) out.push_back(res.coeff(e));
    return out;
}

std::vector<HLaurent> ode_residual(long E) { return ode_residuals_of(wave_series(E + 1), E); }

std::vector<HLaurent> single_step_residuals(long E) {
    const HLaurent h = HLaurent::monomial(1, 1);
    std::vector<HLaurent> out;
    HLaurent prev = wave_coeff(0);
    for (long e = 0; e <= E; ++e) {
        HLaurent next = wave_coeff(e + 1);
        HLaurent lhs = next * Rational(e + 1);
        HLaurent factor = HLaurent::monomial(-1, 1) + HLaurent(Rational(e));
        HLaurent rhs = h * factor * factor * prev;
        out.push_back(lhs - rhs);
        prev = next;
    }
    return out;
}

std::map<std::pair<long, long>, Rational> connected_disconnected_check(long E, long Vmax) {
    XSeries z = wave_series(E);
    XSeries n = z;
    n.set_coeff(0, HLaurent());  // N = Z - 1 has positive valuation in 1/x
    std::vector<HLaurent> logz(static_cast<size_t>(E) + 1);
    std::vector<HLaurent> npow(static_cast<size_t>(E) + 1);
    npow[0] = HLaurent(Rational(1));
    for (long k = 1; k <= E; ++k) {
        std::vector<HLaurent> nn(static_cast<size_t>(E) + 1);
        for (long i = 0; i <= E; ++i) {
            if (npow[static_cast<size_t>(i)].is_zero()) continue;
            for (long j = 1; i + j <= E; ++j)
                nn[static_cast<size_t>(i + j)] += npow[static_cast<size_t>(i)] * n.coeff(j);
        }
        npow = std::move(nn);
        Rational sign = (k % 2 == 1) ? Rational(1) : Rational(-1);
        for (long e = 0; e <= E; ++e)
            logz[static_cast<size_t>(e)] += npow[static_cast<size_t>(e)] * (sign / Rational(k));
    }
    std::map<std::pair<long, long>, Rational> out;
    for (long e = 1; e <= E; ++e) {
        for (long v = 2; v <= std::min(2 * e, Vmax); ++v) {
            Rational connected = 0;
            for (long nparts = 1; nparts <= e; ++nparts) {
                long twice_g = e + 2 - v - nparts;
                if (twice_g < 0 || twice_g % 2 != 0) continue;
                int g = static_cast<int>(twice_g / 2);
                std::vector<MuTuple> parts;
                std::function<void(long, long, MuTuple&)> gen = [&](long rem, long maxp, MuTuple& cur) {
                    if (static_cast<long>(cur.size()) == nparts) {
                        if (rem == 0) parts.push_back(cur);
                        return;
                    }
                    long slots = nparts - static_cast<long>(cur.size());
                    for (long p = std::min(maxp, rem - (slots - 1)); p >= 1; --p) {
                        cur.push_back(p);
                        gen(rem - p, p, cur);
                        cur.pop_back();
                    }
                };
                MuTuple cur;
                gen(e, e, cur);
                for (const auto& lambda : parts) {
                    std::map<long, long> mult;
                    for (long p : lambda) ++mult[p];
                    Rational orderings(factorial(nparts));
                    for (auto& [p, m] : mult) orderings /= Rational(factorial(m));
                    connected += orderings / Rational(factorial(nparts)) * dessins::b_big(g, lambda);
                }
            }
            Rational lhs = logz[static_cast<size_t>(e)].coeff(e - v);
            out[{v, e}] = Rational(lhs - connected);
        }
    }
    return out;
}

std::vector<Rational> catalan_y_series(long K) {
    std::vector<Rational> y(static_cast<size_t>(K) + 2, Rational(0));
    for (long m = 0; m <= K; ++m) y[static_cast<size_t>(m + 1)] = ratio(binomial(2 * m, m), Integer(m + 1));
    return y;
}

LaurentSeries quadratic_residual(const std::vector<Rational>& yhat, long K) {
    std::vector<Rational> sq(static_cast<size_t>(K) + 2, Rational(0));
    for (size_t i = 0; i < yhat.size(); ++i) {
        if (yhat[i] == 0) continue;
        for (size_t j = 0; i + j < sq.size() && j < yhat.size(); ++j)
            if (yhat[j] != 0) sq[i + j] += yhat[i] * yhat[j];
    }
    LaurentSeries r;
    r.at_infinity = true;
    r.val = 0;
    r.order = K;
    r.c.assign(static_cast<size_t>(K) + 1, Rational(0));
    for (long e = 0; e <= K; ++e) {
        Rational val = sq[static_cast<size_t>(e + 1)] - yhat[static_cast<size_t>(e + 1)];
        if (e == 0) val += 1;
        r.c[static_cast<size_t>(e)] = val;
    }
    r.normalize();
    return r;
}

LaurentSeries semiclassical_residual(long K) { return quadratic_residual(catalan_y_series(K), K); }

std::pair<XSeries, XSeries> normal_ordering_apply(const XSeries& z) {
    const HLaurent h = HLaurent::monomial(1, 1);
    auto Y = [&](const XSeries& f) -> XSeries {
        return xs_add(xs_scale(xs_ddx(f), h * Rational(-1)), xs_mul_xinv(f));
    };
    XSeries yz = Y(z);
    XSeries xyz = xs_mul_x(yz);
    XSeries formA = xs_add(xs_sub(Y(xyz), xyz), z);
    XSeries formB = xs_sub(xs_add(xs_sub(xs_mul_x(Y(yz)), xyz), z), xs_scale(yz, h));
    return {formA, formB};
}

std::vector<HLaurent> normal_ordering_residual(long E) {
    auto [a, b] = normal_ordering_apply(wave_series(E + 1));
    if (a.valid_to < E || b.valid_to < E) throw std::domain_error("normal_ordering_residual: series too short");
    std::vector<HLaurent> out;
    for (long e = 0; e <= E; ++e) {
        if (a.coeff(e) != b.coeff(e)) throw std::runtime_error("normal ordering forms disagree");
        out.push_back(a.coeff(e));
    }
    return out;
}

}  // namespace quantum

}  // namespace irrec
