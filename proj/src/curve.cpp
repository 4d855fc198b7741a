#include "irrec/curve.hpp"

#include <algorithm>
#include <stdexcept>

#include "irrec/laurent.hpp"

namespace irrec {

std::string to_string(BranchClass c) {
    switch (c) {
        case BranchClass::Regular: return "regular";
        case BranchClass::IrregularFlat: return "irregular-flat";
        case BranchClass::IrregularHighPole: return "irregular-high-pole";
        case BranchClass::IrregularSimplePole: return "irregular-simple-pole";
    }
    return "?";
}

std::vector<BranchPoint> classify_branch_points(const RatFunc& x, const RatFunc& y,
                                                const RatFunc& sigma) {
    RatFunc xp = x.derivative();
    std::vector<BranchPoint> out;
    Poly num = xp.num();
    auto roots = num.rational_roots();
    long covered = 0;
    for (auto& [alpha, mult] : roots) {
        covered += mult;
        if (xp.valuation_at(alpha) <= 0) continue;  // cancelled by the denominator: not a zero of dx
        if (mult != 1) throw std::domain_error("dx has a non-simple zero at " + alpha.get_str());
        if (sigma.evaluate(alpha) != alpha)
            throw std::domain_error("involution does not fix the branch point " + alpha.get_str());
        long vy = y.valuation_at(alpha);
        BranchClass cls;
        if (vy >= 0) {
            RatFunc yp = y.derivative();
            // dy analytic there since y is; regular iff dy(alpha) != 0
            cls = (yp.valuation_at(alpha) >= 1 || yp.is_zero()) ? BranchClass::IrregularFlat
                                                                : BranchClass::Regular;
            if (yp.valuation_at(alpha) == 0 && yp.evaluate(alpha) == 0) cls = BranchClass::IrregularFlat;
        } else if (vy == -1) {
            cls = BranchClass::IrregularSimplePole;
        } else {
            cls = BranchClass::IrregularHighPole;
        }
        out.push_back({alpha, cls});
    }
    if (covered != num.degree())
        throw std::domain_error("dx has non-rational zeros; curve out of scope");
    std::sort(out.begin(), out.end(),
              [](const BranchPoint& a, const BranchPoint& b) { return a.alpha < b.alpha; });
    return out;
}

SpectralCurve::SpectralCurve(std::string id, RatFunc x, RatFunc y, RatFunc sigma)
    : id_(std::move(id)), x_(std::move(x)), y_(std::move(y)), sigma_(std::move(sigma)) {
    if (!(x_.compose(sigma_) == x_)) throw std::domain_error("x is not invariant under sigma");
    if (!(sigma_.compose(sigma_) == RatFunc::var())) throw std::domain_error("sigma is not an involution");
    xprime_ = x_.derivative();
    sigma_prime_ = sigma_.derivative();
    y_sigma_ = y_.compose(sigma_);
    delta_y_ = y_ - y_sigma_;
    if (delta_y_.is_zero()) throw std::domain_error("degenerate curve: y(sigma) = y identically");
    kernel_pref_ = RatFunc::one() / (RatFunc(Rational(2)) * delta_y_ * xprime_);
    phi_ = integrate(RatFunc(Rational(-1)) * y_ * xprime_);
    branch_ = classify_branch_points(x_, y_, sigma_);
    if (branch_.empty()) throw std::domain_error("curve has no branch points");
}

bool SpectralCurve::has_flat_zero() const {
    for (const auto& b : branch_)
        if (b.cls == BranchClass::IrregularFlat) return true;
    return false;
}

SepSum SpectralCurve::omega01() const {
    SepSum s(1);
    s.add_term(-1, {y_ * xprime_});
    s.compact();
    return s;
}

MultiRat SpectralCurve::omega02() const {
    MultiRat z1 = MultiRat::var(1), z2 = MultiRat::var(2);
    MultiRat d = z1 - z2;
    return MultiRat(Rational(1)) / (d * d);
}

MultiRat SpectralCurve::kernel_multirat() const {
    MultiRat z1 = MultiRat::var(1);
    MultiRat z = MultiRat::var(2);
    MultiRat pref = MultiRat::from_ratfunc(kernel_pref_, 2);
    MultiRat sz = MultiRat::from_ratfunc(sigma_, 2);
    MultiRat one{Rational(1)};
    return pref * (one / (z - z1) - one / (sz - z1));
}

const Multidifferential& SpectralCurve::eo_invariant(int g, int n) const {
    if (g < 0 || n < 1 || 2 * g - 2 + n <= 0)
        throw std::domain_error("eo_invariant: need 2g-2+n > 0");
    {
        std::lock_guard<std::mutex> lk(memo_mutex_);
        auto it = memo_.find({g, n});
        if (it != memo_.end()) return *it->second;
    }
    auto value = std::make_shared<Multidifferential>(compute(g, n));
    std::lock_guard<std::mutex> lk(memo_mutex_);
    auto [it, inserted] = memo_.emplace(std::make_pair(g, n), value);
    return *it->second;
}

void SpectralCurve::assemble_bracket(int g, int n, std::vector<BracketTerm>& out) const {
    const int npass = n - 1;  // result slots 1..n-1 are passengers
    // omega^{g-1}_{n+1}(z, sigma z, passengers)
    if (g >= 1) {
        if (g - 1 == 0 && n + 1 == 2) {
            BracketTerm t;
            t.coef = 1;
            RatFunc d = RatFunc::var() - sigma_;
            t.u = RatFunc::one() / (d * d);
            out.push_back(std::move(t));
        } else {
            const Multidifferential& lower = eo_invariant(g - 1, n + 1);
            for (const auto& lt : lower.body.terms()) {
                BracketTerm t;
                t.coef = lt.coef;
                t.u = lt.f[0] * lt.f[1].compose(sigma_);
                for (int k = 2; k <= n; ++k) t.passengers.emplace_back(k - 1, lt.f[static_cast<size_t>(k)]);
                if (!t.u.is_zero()) out.push_back(std::move(t));
            }
        }
    }
    // products over genus splits and passenger subsets; the circle excludes
    // omega^0_1 factors only.
    const size_t subsets = size_t(1) << npass;
    for (int g1 = 0; g1 <= g; ++g1) {
        const int g2 = g - g1;
        for (size_t mask = 0; mask < subsets; ++mask) {
            std::vector<int> I, J;
            for (int k = 0; k < npass; ++k)
                (mask >> k & 1 ? I : J).push_back(k + 1);
            const int nA = static_cast<int>(I.size()) + 1, nB = static_cast<int>(J.size()) + 1;
            if (g1 == 0 && nA == 1) continue;
            if (g2 == 0 && nB == 1) continue;
            // factor A terms (argument z)
            struct Partial {
                Rational coef;
                RatFunc u;
                std::vector<std::pair<int, int>> couplers;
                std::vector<std::pair<int, RatFunc>> passengers;
            };
            std::vector<Partial> partsA;
            if (g1 == 0 && nA == 2) {
                partsA.push_back({Rational(1), RatFunc::one(), {{I[0], 0}}, {}});
            } else {
                const Multidifferential& a = eo_invariant(g1, nA);
                for (const auto& at : a.body.terms()) {
                    Partial p{at.coef, at.f[0], {}, {}};
                    for (size_t k = 1; k < at.f.size(); ++k)
                        p.passengers.emplace_back(I[k - 1], at.f[k]);
                    if (!p.u.is_zero()) partsA.push_back(std::move(p));
                }
            }
            if (partsA.empty()) continue;
            // factor B terms (argument sigma z)
            std::vector<Partial> partsB;
            if (g2 == 0 && nB == 2) {
                partsB.push_back({Rational(1), RatFunc::one(), {{J[0], 1}}, {}});
            } else {
                const Multidifferential& b = eo_invariant(g2, nB);
                for (const auto& bt : b.body.terms()) {
                    Partial p{bt.coef, bt.f[0].compose(sigma_), {}, {}};
                    for (size_t k = 1; k < bt.f.size(); ++k)
                        p.passengers.emplace_back(J[k - 1], bt.f[k]);
                    if (!p.u.is_zero()) partsB.push_back(std::move(p));
                }
            }
            for (const auto& pa : partsA) {
                for (const auto& pb : partsB) {
                    BracketTerm t;
                    t.coef = pa.coef * pb.coef;
                    t.u = pa.u * pb.u;
                    if (t.u.is_zero()) continue;
                    t.couplers = pa.couplers;
                    t.couplers.insert(t.couplers.end(), pb.couplers.begin(), pb.couplers.end());
                    t.passengers = pa.passengers;
                    t.passengers.insert(t.passengers.end(), pb.passengers.begin(), pb.passengers.end());
                    out.push_back(std::move(t));
                }
            }
        }
    }
}

namespace {

// Sparse polynomial in the kernel/coupler bookkeeping variables.
// Exponent key: [0] = power of w (kernel slot-0 variable), [1+i] = power of
// the i-th coupler variable.
struct AuxPoly {
    std::map<std::vector<int>, Rational> m;
    bool empty() const { return m.empty(); }
    void add(const std::vector<int>& key, const Rational& v) {
        if (v == 0) return;
        auto it = m.find(key);
        if (it == m.end())
            m.emplace(key, v);
        else {
            it->second += v;
            if (it->second == 0) m.erase(it);
        }
    }
    AuxPoly mul(const AuxPoly& o) const {
        AuxPoly r;
        for (const auto& [ka, va] : m)
            for (const auto& [kb, vb] : o.m) {
                std::vector<int> k(ka.size());
                for (size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
                r.add(k, va * vb);
            }
        return r;
    }
    void scaled_accumulate(const AuxPoly& o, const Rational& s) {
        for (const auto& [k, v] : o.m) add(k, v * s);
    }
};

// Truncated series with AuxPoly coefficients, exponents 0..len-1.
using AuxSeries = std::vector<AuxPoly>;

AuxSeries aux_mul(const AuxSeries& a, const AuxSeries& b, long len) {
    AuxSeries r(static_cast<size_t>(len));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].empty()) continue;
        for (size_t j = 0; j < b.size() && i + j < static_cast<size_t>(len); ++j) {
            if (b[j].empty()) continue;
            AuxPoly prod = a[i].mul(b[j]);
            for (const auto& [k, v] : prod.m) r[i + j].add(k, v);
        }
    }
    return r;
}

}  // namespace

void SpectralCurve::residue_accumulate(const BracketTerm& term, const Rational& alpha, SepSum& acc,
                                       int n) const {
    RatFunc U = kernel_pref_ * sigma_prime_ * term.u;
    if (U.is_zero()) return;
    long vU = U.valuation_at(alpha);
    // kernel difference has valuation >= 1 at alpha, couplers >= 0
    if (vU >= 0) return;
    const long need = -vU;  // series coefficients 0 .. need-1 of the analytic factors
    const size_t naux = 1 + term.couplers.size();
    auto key1 = [&](size_t var, int pow) {
        std::vector<int> k(naux, 0);
        k[var] = pow;
        return k;
    };
    // sigma(alpha + t) - alpha as a Q-series s(t), s(0) = 0
    std::vector<Rational> s_ser(static_cast<size_t>(need) + 1, Rational(0));
    {
        auto cs = laurent_coeffs_at(sigma_, alpha, 0, need);
        for (long k = 1; k <= need; ++k) s_ser[static_cast<size_t>(k)] = cs[static_cast<size_t>(k)];
    }
    // powers of s(t) up to t^{need-1}
    std::vector<std::vector<Rational>> s_pow;
    {
        std::vector<Rational> cur(static_cast<size_t>(need), Rational(0));
        cur[0] = 1;
        s_pow.push_back(cur);
        for (long m = 1; m < need; ++m) {
            std::vector<Rational> nxt(static_cast<size_t>(need), Rational(0));
            const auto& prev = s_pow.back();
            for (long i = 0; i < need; ++i) {
                if (prev[static_cast<size_t>(i)] == 0) continue;
                for (long j = 1; i + j < need && j <= need; ++j)
                    nxt[static_cast<size_t>(i + j)] +=
                        prev[static_cast<size_t>(i)] * s_ser[static_cast<size_t>(j)];
            }
            s_pow.push_back(std::move(nxt));
        }
    }
    // kernel difference series: 1/(z - z1) - 1/(sigma(z) - z1), variable w
    AuxSeries kern(static_cast<size_t>(need));
    for (long mth = 0; mth < need; ++mth) {
        // 1/(z-z1): (-1)^m w^{m+1} t^m
        kern[static_cast<size_t>(mth)].add(key1(0, static_cast<int>(mth + 1)),
                                           (mth % 2 == 0) ? Rational(1) : Rational(-1));
    }
    {
        // 1/(sigma(z)-z1) = sum_m (-1)^m w^{m+1} s(t)^m
        for (long m = 0; m < need; ++m) {
            Rational sign = (m % 2 == 0) ? Rational(1) : Rational(-1);
            for (long e = 0; e < need; ++e) {
                Rational c = s_pow[static_cast<size_t>(m)][static_cast<size_t>(e)];
                if (c != 0) kern[static_cast<size_t>(e)].add(key1(0, static_cast<int>(m + 1)), -sign * c);
            }
        }
    }
    AuxSeries prod = kern;
    // couplers
    for (size_t ci = 0; ci < term.couplers.size(); ++ci) {
        AuxSeries cs(static_cast<size_t>(need));
        if (term.couplers[ci].second == 0) {
            // 1/(z - z_j)^2 = sum (m+1)(-1)^m v^{m+2} t^m
            for (long m = 0; m < need; ++m)
                cs[static_cast<size_t>(m)].add(key1(ci + 1, static_cast<int>(m + 2)),
                                               Rational(m + 1) * ((m % 2 == 0) ? 1 : -1));
        } else {
            // E = 1/(sigma(z)-z_j) = sum (-1)^m v^{m+1} s^m; then square it
            AuxSeries E(static_cast<size_t>(need));
            for (long m = 0; m < need; ++m) {
                Rational sign = (m % 2 == 0) ? Rational(1) : Rational(-1);
                for (long e = 0; e < need; ++e) {
                    Rational c = s_pow[static_cast<size_t>(m)][static_cast<size_t>(e)];
                    if (c != 0) E[static_cast<size_t>(e)].add(key1(ci + 1, static_cast<int>(m + 1)), sign * c);
                }
            }
            cs = aux_mul(E, E, need);
        }
        prod = aux_mul(prod, cs, need);
    }
    // multiply by the Laurent series of U and pick the t^{-1} coefficient:
    // sum over (e_analytic + e_U = -1)
    auto ucoeffs = laurent_coeffs_at(U, alpha, vU, -1);
    AuxPoly residue;
    for (long e = 0; e < need; ++e) {
        long eu = -1 - e;  // exponent from U
        if (eu < vU || eu > -1) continue;
        Rational c = ucoeffs[static_cast<size_t>(eu - vU)];
        if (c == 0) continue;
        residue.scaled_accumulate(prod[static_cast<size_t>(e)], c);
    }
    if (residue.empty()) return;
    // convert monomials to separable terms
    RatFunc zvar = RatFunc::var();
    RatFunc z_minus_alpha = zvar - RatFunc(Rational(alpha));
    for (const auto& [k, v] : residue.m) {
        Rational coef = term.coef * v;
        std::vector<RatFunc> factors(static_cast<size_t>(n), RatFunc::one());
        // kernel variable w = 1/(alpha - z1) = -(z1-alpha)^{-1}
        if (k[0] != 0) {
            factors[0] = z_minus_alpha.pow(-k[0]);
            if (k[0] % 2 != 0) coef = -coef;
        }
        for (size_t ci = 0; ci < term.couplers.size(); ++ci) {
            int pw = k[ci + 1];
            if (pw == 0) continue;
            int slot = term.couplers[ci].first;
            factors[static_cast<size_t>(slot)] = z_minus_alpha.pow(-pw);
            if (pw % 2 != 0) coef = -coef;
        }
        for (const auto& [slot, f] : term.passengers)
            factors[static_cast<size_t>(slot)] = factors[static_cast<size_t>(slot)] * f;
        acc.add_term(coef, std::move(factors));
    }
}

Multidifferential SpectralCurve::compute(int g, int n) const {
    std::vector<BracketTerm> bracket;
    assemble_bracket(g, n, bracket);
    SepSum acc(n);
    for (const auto& bp : branch_) {
        for (const auto& t : bracket) residue_accumulate(t, bp.alpha, acc, n);
    }
    acc.compact();
    Multidifferential md;
    md.g = g;
    md.n = n;
    md.body = std::move(acc);
    md.symmetry_guaranteed = !has_flat_zero();
    if (md.symmetry_guaranteed && n >= 2 && n <= 4) {
        if (!md.body.equals(md.body.transposed(0, 1)))
            throw std::runtime_error("eo_invariant: computed invariant is not symmetric");
    }
    return md;
}

Rational SpectralCurve::residue_with_phi(const RatFunc& f, const Rational& alpha) const {
    if (f.is_zero()) return 0;
    long vf = f.valuation_at(alpha);
    if (vf >= 0) {
        // phi's rational part may still have a pole here only if -y x' did;
        // in scope its poles never sit at branch points, so the residue is 0.
        long vphi = phi_.rational_part.is_zero() ? 0 : phi_.rational_part.valuation_at(alpha);
        if (vphi >= 0) return 0;
    }
    // residue of (rational part) * f
    Rational res = residue_at(phi_.rational_part * f, alpha);
    // plus log-term contributions with the branch constant dropped
    for (const auto& [c, root] : phi_.logs) {
        if (root == alpha) throw std::domain_error("phi has a log singularity at a branch point");
        if (vf >= 0) continue;
        // series of log(z - root) about alpha, constant dropped:
        // sum_{m>=1} (-1)^{m+1} t^m / (m (alpha-root)^m)
        auto fc = laurent_coeffs_at(f, alpha, vf, -2);
        Rational base = Rational(1) / (alpha - root);
        Rational pw = 1;
        for (long m = 1; m <= -1 - vf; ++m) {
            pw *= base;
            Rational logm = ((m % 2 == 1) ? Rational(1) : Rational(-1)) / Rational(m) * pw;
            res += c * logm * fc[static_cast<size_t>(-m - 1 - vf)];
        }
    }
    return res;
}

SepSum SpectralCurve::dilaton_residual(int g, int n) const {
    if (2 * g - 2 + n <= 0) throw std::domain_error("dilaton_residual: need 2g-2+n > 0");
    const Multidifferential& hi = eo_invariant(g, n + 1);
    SepSum acc(n);
    for (const auto& bp : branch_) {
        for (const auto& t : hi.body.terms()) {
            Rational r = residue_with_phi(t.f[0], bp.alpha);
            if (r == 0) continue;
            std::vector<RatFunc> rest(t.f.begin() + 1, t.f.end());
            acc.add_term(t.coef * r, std::move(rest));
        }
    }
    acc += eo_invariant(g, n).body * Rational(-(2 - 2 * g - n));
    acc.compact();
    return acc;
}

SepSum SpectralCurve::string_residual(int g, int n, int m) const {
    if (m != 0 && m != 1) throw std::domain_error("string_residual: m in {0,1}");
    if (2 * g - 2 + n <= 0) throw std::domain_error("string_residual: need 2g-2+n > 0");
    const Multidifferential& hi = eo_invariant(g, n + 1);
    RatFunc xmy = (m == 1) ? x_ * y_ : y_;
    SepSum acc(n);
    for (const auto& bp : branch_) {
        for (const auto& t : hi.body.terms()) {
            Rational r = residue_at(xmy * t.f[0], bp.alpha);
            if (r == 0) continue;
            std::vector<RatFunc> rest(t.f.begin() + 1, t.f.end());
            acc.add_term(t.coef * r, std::move(rest));
        }
    }
    RatFunc xm_over_xp = ((m == 1) ? x_ : RatFunc::one()) / xprime_;
    const SepSum& base = eo_invariant(g, n).body;
    for (int j = 0; j < n; ++j) acc += base.multiplied_slot(j, xm_over_xp).derivative_slot(j);
    acc.compact();
    return acc;
}

Rational SpectralCurve::symplectic_invariant(int g) const {
    if (g < 2) throw std::domain_error("symplectic_invariant: g >= 2");
    const Multidifferential& w = eo_invariant(g, 1);
    Rational acc = 0;
    for (const auto& bp : branch_)
        for (const auto& t : w.body.terms()) acc += t.coef * residue_with_phi(t.f[0], bp.alpha);
    return acc;
}

SepSum SpectralCurve::slot_residue(const SepSum& body, int slot, const Rational& alpha) const {
    SepSum acc(body.nvars() - 1);
    for (const auto& t : body.terms()) {
        Rational r = residue_at(t.f[static_cast<size_t>(slot)], alpha);
        if (r == 0) continue;
        std::vector<RatFunc> rest;
        for (size_t i = 0; i < t.f.size(); ++i)
            if (static_cast<int>(i) != slot) rest.push_back(t.f[i]);
        acc.add_term(t.coef * r, std::move(rest));
    }
    acc.compact();
    return acc;
}

namespace {
SpectralCurve make_dessin() {
    RatFunc z = RatFunc::var(), one = RatFunc::one();
    return SpectralCurve("dessin", z + one / z + RatFunc(Rational(2)), z / (one + z), one / z);
}
SpectralCurve make_airy() {
    RatFunc z = RatFunc::var(), one = RatFunc::one();
    return SpectralCurve("airy", z * z, one / z, -z);
}
SpectralCurve make_airy_half() {
    RatFunc z = RatFunc::var(), one = RatFunc::one();
    return SpectralCurve("airy-half", z * z * ratio(1, 2), one / z, -z);
}
SpectralCurve make_gauss() {
    RatFunc z = RatFunc::var(), one = RatFunc::one();
    return SpectralCurve("gauss-regular", z + one / z, z, one / z);
}
SpectralCurve make_flat() {
    RatFunc z = RatFunc::var();
    return SpectralCurve("flat-counterexample", z * z, z * z * z, -z);
}
}  // namespace

const SpectralCurve& curve_dessin() {
    static SpectralCurve c = make_dessin();
    return c;
}
const SpectralCurve& curve_airy() {
    static SpectralCurve c = make_airy();
    return c;
}
const SpectralCurve& curve_airy_half() {
    static SpectralCurve c = make_airy_half();
    return c;
}
const SpectralCurve& curve_gauss_regular() {
    static SpectralCurve c = make_gauss();
    return c;
}
const SpectralCurve& curve_flat_counterexample() {
    static SpectralCurve c = make_flat();
    return c;
}

const SpectralCurve* find_curve(const std::string& name) {
    if (name == "dessin") return &curve_dessin();
    if (name == "airy") return &curve_airy();
    if (name == "airy-half") return &curve_airy_half();
    if (name == "gauss-regular") return &curve_gauss_regular();
    if (name == "flat-counterexample") return &curve_flat_counterexample();
    return nullptr;
}

}  // namespace irrec
