#include "irrec/local.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace irrec {
namespace local {

namespace {

MuTuple sorted_desc(MuTuple mu) {
    std::sort(mu.begin(), mu.end(), std::greater<long>());
    return mu;
}

CountTable& u_table() {
    static CountTable t;
    return t;
}

Rational u_impl(int g, const MuTuple& mu);

Rational u_rec(int g, long mu1, const MuTuple& rest) {
    const size_t n1 = rest.size();
    Rational acc = 0;
    for (size_t j = 0; j < n1; ++j) {
        MuTuple sub;
        sub.reserve(n1);
        sub.push_back(mu1 + rest[j] - 1);
        for (size_t k = 0; k < n1; ++k)
            if (k != j) sub.push_back(rest[k]);
        acc += Rational(rest[j]) * u_impl(g, sub);
    }
    Rational half_sum = 0;
    for (long i = 0; i + 1 <= mu1; ++i) {
        const long j = mu1 - 1 - i;
        if (g >= 1) {
            if (g - 1 == 0 && n1 == 0) {
                // The omega^0_2 diagonal seed: only the (i,j) = (0,0) term of
                // u_0(i,j) carries it, calibrated once against u_1(1) = 1/8.
                if (i == 0 && j == 0) half_sum += ratio(1, 4);
            } else {
                MuTuple sub{i, j};
                sub.insert(sub.end(), rest.begin(), rest.end());
                half_sum += u_impl(g - 1, sub);
            }
        }
        for (int g1 = 0; g1 <= g; ++g1) {
            const int g2 = g - g1;
            const size_t subsets = size_t(1) << n1;
            for (size_t mask = 0; mask < subsets; ++mask) {
                MuTuple a{i}, b{j};
                for (size_t k = 0; k < n1; ++k)
                    (mask >> k & 1 ? a : b).push_back(rest[k]);
                Rational ua = u_impl(g1, a);
                if (ua == 0) continue;
                half_sum += ua * u_impl(g2, b);
            }
        }
    }
    return Rational(acc + half_sum / 2);
}

Rational u_impl(int g, const MuTuple& mu) {
    if (g <= 0) return 0;  // u_0 vanishes identically
    for (long v : mu)
        if (v <= 0 || v % 2 == 0) return 0;  // only odd positive parts
    MuTuple key = sorted_desc(mu);
    Rational cached;
    if (u_table().lookup(g, key, cached)) return cached;
    Rational val = u_rec(g, key[0], MuTuple(key.begin() + 1, key.end()));
    u_table().store(g, key, val);
    return val;
}

}  // namespace

Rational u_airy_rec(int g, const MuTuple& mu) {
    if (mu.empty()) throw std::domain_error("u_airy_rec: empty tuple");
    return u_impl(g, mu);
}

Rational u_airy(int g, const MuTuple& mu, AiryNorm norm) {
    Rational v = u_airy_rec(g, mu);
    if (norm == AiryNorm::Square)
        v *= pow2(2 - 2 * g - static_cast<long>(mu.size()));
    return v;
}

Rational one_point_closed(int g) {
    if (g == 0) return -2;
    if (g < 0) throw std::domain_error("one_point_closed: g >= 0");
    Rational num(factorial(2 * g));
    Rational den(factorial(g));
    return Rational(pow2(1 - 8 * g) * num * num * num / (den * den * den * den) / Rational(2 * g - 1));
}

Rational one_point_ode_rec(int g) {
    Rational a = -2;
    for (int k = 1; k <= g; ++k)
        a = Rational(ratio(1, 32) * Rational(2 * k - 3) * Rational((2 * k - 1) * (2 * k - 1)) / Rational(k) * a);
    return a;
}

Rational airy_one_point(int g) {
    if (g < 1) throw std::domain_error("airy_one_point: g >= 1");
    Rational num(factorial(6 * g - 3));
    Rational den = Rational(rat_pow(Rational(3), g)) * Rational(factorial(g)) * Rational(factorial(3 * g - 2));
    return Rational(pow2(3 - 8 * g) * num / den);
}

namespace {

// all ordered tuples of n odd positive parts summing to `total`
void odd_tuples(long total, int n, MuTuple& cur, const std::function<void(const MuTuple&)>& f) {
    if (n == 0) {
        if (total == 0) f(cur);
        return;
    }
    for (long p = 1; p <= total - (n - 1); p += 2) {
        cur.push_back(p);
        odd_tuples(total - p, n - 1, cur, f);
        cur.pop_back();
    }
}

}  // namespace

VolumePoly volumes(int g, int n) {
    if (g < 1) throw std::domain_error("volumes: g >= 1");
    VolumePoly v;
    v.g = g;
    v.n = n;
    v.poly = MPoly(n);
    MuTuple cur;
    odd_tuples(2 * g - 2 + n, n, cur, [&](const MuTuple& mu) {
        Rational u = u_airy_rec(g, mu);
        if (u == 0) return;
        Rational w = u;
        std::vector<long> exps(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            exps[static_cast<size_t>(i)] = mu[static_cast<size_t>(i)] - 1;
            w /= Rational(factorial(mu[static_cast<size_t>(i)]));
        }
        v.poly.add(exps, w);
    });
    return v;
}

namespace {

// polynomial in an auxiliary variable x with MPoly coefficients over n L-slots
using XPoly = std::vector<MPoly>;

XPoly xp_mul(const XPoly& a, const XPoly& b, int nvars) {
    XPoly r(a.size() + b.size() - 1, MPoly(nvars));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            for (const auto& [ea, va] : a[i].coeffs())
                for (const auto& [eb, vb] : b[j].coeffs()) {
                    std::vector<long> e(ea.size());
                    for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
                    r[i + j].add(e, va * vb);
                }
        }
    }
    return r;
}

// Build the XPoly of W(slot assignments) where each W-variable maps to either
// the aux variable x, the combination (L1 - x), or a plain L slot.
// kind: 0 = x, 1 = L1 - x (slot index gives the L1 slot), 2 = plain slot.
struct SlotMap {
    int kind;
    int slot;  // for kinds 1 and 2
};

XPoly volume_to_xpoly(const VolumePoly& W, const std::vector<SlotMap>& map, int nvars) {
    XPoly total(1, MPoly(nvars));
    for (const auto& [exps, c] : W.poly.coeffs()) {
        XPoly mono(1, MPoly(nvars));
        mono[0].add(std::vector<long>(static_cast<size_t>(nvars), 0), c);
        for (size_t v = 0; v < exps.size(); ++v) {
            long k = exps[v];
            if (k == 0) continue;
            const SlotMap& sm = map[v];
            XPoly factor;
            if (sm.kind == 0) {
                factor.assign(static_cast<size_t>(k) + 1, MPoly(nvars));
                factor[static_cast<size_t>(k)].add(std::vector<long>(static_cast<size_t>(nvars), 0),
                                                   Rational(1));
            } else if (sm.kind == 1) {
                // (L1 - x)^k
                factor.assign(static_cast<size_t>(k) + 1, MPoly(nvars));
                for (long t = 0; t <= k; ++t) {
                    std::vector<long> e(static_cast<size_t>(nvars), 0);
                    e[static_cast<size_t>(sm.slot)] = k - t;
                    Rational coef = Rational(binomial(k, t)) * ((t % 2 == 0) ? 1 : -1);
                    factor[static_cast<size_t>(t)].add(e, coef);
                }
            } else {
                factor.assign(1, MPoly(nvars));
                std::vector<long> e(static_cast<size_t>(nvars), 0);
                e[static_cast<size_t>(sm.slot)] = k;
                factor[0].add(e, Rational(1));
            }
            mono = xp_mul(mono, factor, nvars);
        }
        if (mono.size() > total.size()) total.resize(mono.size(), MPoly(nvars));
        for (size_t i = 0; i < mono.size(); ++i) total[i] = total[i] + mono[i];
    }
    return total;
}

}  // namespace

MPoly volume_recursion_residual(int g, int n) {
    if (g < 1) throw std::domain_error("volume_recursion_residual: g >= 1");
    const VolumePoly V = volumes(g, n);
    // LHS: 2 L1 V
    MPoly lhs(n);
    for (const auto& [e, c] : V.poly.coeffs()) {
        std::vector<long> e2 = e;
        e2[0] += 1;
        lhs.add(e2, Rational(2) * c);
    }
    MPoly rhs(n);
    // boundary transport terms
    if (n >= 2) {
        const VolumePoly W = volumes(g, n - 1);
        for (int j = 1; j < n; ++j) {
            // slot map for W: var 0 -> (L_j + L_1) or (L_j - L_1); var k -> remaining slots
            std::vector<int> others;
            for (int k = 1; k < n; ++k)
                if (k != j) others.push_back(k);
            for (int sign : {+1, -1}) {
                // (L_j + sign L_1) * W(L_j + sign L_1, others), overall sign +/-
                for (const auto& [e, c] : W.poly.coeffs()) {
                    // expand (L_j + sign L_1)^{e0 + 1}
                    long k = e[0] + 1;
                    for (long t = 0; t <= k; ++t) {
                        std::vector<long> out(static_cast<size_t>(n), 0);
                        out[static_cast<size_t>(j)] = k - t;
                        out[0] = t;
                        for (size_t v = 1; v < e.size(); ++v)
                            out[static_cast<size_t>(others[v - 1])] += e[v];
                        Rational coef = c * Rational(binomial(k, t));
                        if (sign < 0 && t % 2 == 1) coef = -coef;
                        if (sign < 0) coef = -coef;  // minus the (L_j - L_1) term
                        rhs.add(out, coef);
                    }
                }
            }
        }
    }
    // integral term
    XPoly bracket(1, MPoly(n));
    bool any = false;
    if (g >= 2) {
        const VolumePoly W = volumes(g - 1, n + 1);
        std::vector<SlotMap> map;
        map.push_back({0, 0});      // x
        map.push_back({1, 0});      // L1 - x
        for (int k = 1; k < n; ++k) map.push_back({2, k});
        XPoly part = volume_to_xpoly(W, map, n);
        if (part.size() > bracket.size()) bracket.resize(part.size(), MPoly(n));
        for (size_t i = 0; i < part.size(); ++i) bracket[i] = bracket[i] + part[i];
        any = true;
    }
    // genus splits with passenger subsets
    const int npass = n - 1;
    const size_t subsets = size_t(1) << npass;
    for (int g1 = 1; g1 + 1 <= g; ++g1) {
        const int g2 = g - g1;
        for (size_t mask = 0; mask < subsets; ++mask) {
            std::vector<int> I, J;
            for (int k = 0; k < npass; ++k)
                (mask >> k & 1 ? I : J).push_back(k + 1);
            const VolumePoly A = volumes(g1, static_cast<int>(I.size()) + 1);
            const VolumePoly B = volumes(g2, static_cast<int>(J.size()) + 1);
            std::vector<SlotMap> mapA{{0, 0}};
            for (int s : I) mapA.push_back({2, s});
            std::vector<SlotMap> mapB{{1, 0}};
            for (int s : J) mapB.push_back({2, s});
            XPoly pa = volume_to_xpoly(A, mapA, n);
            XPoly pb = volume_to_xpoly(B, mapB, n);
            XPoly prod = xp_mul(pa, pb, n);
            if (prod.size() > bracket.size()) bracket.resize(prod.size(), MPoly(n));
            for (size_t i = 0; i < prod.size(); ++i) bracket[i] = bracket[i] + prod[i];
            any = true;
        }
    }
    if (any) {
        // multiply by x (L1 - x) = L1 x - x^2 and integrate dx from 0 to L1
        XPoly integrand(bracket.size() + 2, MPoly(n));
        for (size_t i = 0; i < bracket.size(); ++i) {
            if (bracket[i].is_zero()) continue;
            for (const auto& [e, c] : bracket[i].coeffs()) {
                std::vector<long> eL = e;
                eL[0] += 1;
                integrand[i + 1].add(eL, c);    // L1 * x^{i+1}
                integrand[i + 2].add(e, -c);    // - x^{i+2}
            }
        }
        // integrate: x^k -> L1^{k+1}/(k+1)
        for (size_t k = 0; k < integrand.size(); ++k) {
            if (integrand[k].is_zero()) continue;
            for (const auto& [e, c] : integrand[k].coeffs()) {
                std::vector<long> out = e;
                out[0] += static_cast<long>(k) + 1;
                rhs.add(out, c / Rational(static_cast<long>(k) + 1));
            }
        }
    }
    return lhs - rhs;
}

MPoly volume_dilaton_residual(int g, int n) {
    const VolumePoly big = volumes(g, n + 1);
    MPoly projected(n);
    for (const auto& [e, c] : big.poly.coeffs()) {
        if (e.back() != 0) continue;  // set the last length to zero
        std::vector<long> out(e.begin(), e.end() - 1);
        projected.add(out, c);
    }
    const VolumePoly base = volumes(g, n);
    return projected - base.poly * Rational(2 * g - 2 + n);
}

Rational volume_top_coeff_check(int g, int n) {
    const VolumePoly v = volumes(g, n);
    std::vector<long> top(static_cast<size_t>(n), 0);
    top[0] = 2 * g - 2;
    Rational coeff = v.poly.coeff(top);
    Rational gm1(factorial(g - 1));
    Rational predicted = Rational(pow2(2 - 6 * g) * Rational(binomial(2 * g, g)) *
                                  Rational(factorial(2 * g - 3 + n)) / (gm1 * gm1));
    return Rational(coeff - predicted);
}

}  // namespace local
}  // namespace irrec
