#include "irrec/ratfunc.hpp"

#include <sstream>

namespace irrec {

std::vector<Rational> laurent_coeffs_at(const RatFunc& f, const Rational& a, long lo, long hi) {
    if (hi < lo) return {};
    std::vector<Rational> out(static_cast<size_t>(hi - lo + 1), Rational(0));
    if (f.is_zero()) return out;
    // Shift to t = z - a and strip powers of t.
    Poly n = f.num().shifted(a), d = f.den().shifted(a);
    long vn = 0, vd = 0;
    while (n.coeff(vn) == 0) ++vn;
    while (d.coeff(vd) == 0) ++vd;
    long val = vn - vd;
    if (val > hi) return out;
    // series division: (n/t^vn) / (d/t^vd), both with nonzero constant term.
    long need = hi - val;  // coefficients 0..need of the unit-part quotient
    std::vector<Rational> q(static_cast<size_t>(need) + 1, Rational(0));
    Rational d0 = d.coeff(vd);
    for (long k = 0; k <= need; ++k) {
        Rational acc = n.coeff(vn + k);
        for (long j = 0; j < k; ++j) acc -= q[static_cast<size_t>(j)] * d.coeff(vd + k - j);
        q[static_cast<size_t>(k)] = acc / d0;
    }
    for (long e = std::max(lo, val); e <= hi; ++e)
        out[static_cast<size_t>(e - lo)] = q[static_cast<size_t>(e - val)];
    return out;
}

Rational residue_at(const RatFunc& f, const Rational& a) {
    if (f.is_zero() || f.valuation_at(a) >= 0) return 0;
    return laurent_coeffs_at(f, a, -1, -1)[0];
}

RatFunc principal_part_at(const RatFunc& f, const Rational& a) {
    long v = f.is_zero() ? 0 : f.valuation_at(a);
    if (v >= 0) return RatFunc::zero();
    auto cs = laurent_coeffs_at(f, a, v, -1);
    RatFunc acc;
    RatFunc zma = RatFunc::var() - RatFunc(Rational(a));
    for (long e = v; e <= -1; ++e) {
        Rational c = cs[static_cast<size_t>(e - v)];
        if (c != 0) acc += RatFunc(c) * zma.pow(e);
    }
    return acc;
}

Antiderivative integrate(const RatFunc& f) {
    Antiderivative out;
    if (f.is_zero()) return out;
    Poly q, r;
    Poly::divrem(f.num(), f.den(), q, r);
    out.rational_part = RatFunc(q.antiderivative());
    RatFunc proper(r, f.den());
    if (proper.is_zero()) return out;
    auto roots = proper.den().rational_roots();
    long total = 0;
    for (auto& rm : roots) total += rm.second;
    if (total != proper.den().degree())
        throw std::domain_error("integrate: denominator has non-rational roots");
    RatFunc zvar = RatFunc::var();
    for (auto& [root, mult] : roots) {
        auto cs = laurent_coeffs_at(proper, root, -mult, -1);
        for (long k = 1; k <= mult; ++k) {
            Rational c = cs[static_cast<size_t>(mult - k)];  // coefficient of (z-root)^{-k}
            if (c == 0) continue;
            if (k == 1) {
                out.logs.emplace_back(c, root);
            } else {
                out.rational_part +=
                    RatFunc(-c / Rational(k - 1)) * (zvar - RatFunc(Rational(root))).pow(1 - k);
            }
        }
    }
    return out;
}

std::string RatFunc::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool nn = num_.degree() > 0;
    if (den_ == Poly::one()) return poly_str(num_, var);
    os << (nn ? "(" : "") << poly_str(num_, var) << (nn ? ")" : "");
    os << "/(" << poly_str(den_, var) << ")";
    return os.str();
}

}  // namespace irrec
