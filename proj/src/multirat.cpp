#include "irrec/multirat.hpp"

#include <sstream>

namespace irrec {

MultiRat MultiRat::var(int v) {
    if (v < 1) throw std::domain_error("variable index must be >= 1");
    PolyM num{MultiRat(Rational(0)), MultiRat(Rational(1))};
    PolyM den{MultiRat(Rational(1))};
    return MultiRat(v, std::move(num), std::move(den));
}

MultiRat MultiRat::from_ratfunc(const RatFunc& f, int v) {
    auto lift = [&](const Poly& p) {
        PolyM out;
        for (long i = 0; i <= p.degree(); ++i) out.emplace_back(p.coeff(i));
        trim(out);
        return out;
    };
    return MultiRat(v, lift(f.num()), lift(f.den()));
}

MultiRat::MultiRat(int lvl, PolyM num, PolyM den) : lvl_(lvl), scalar_(0), num_(std::move(num)), den_(std::move(den)) {
    reduce();
}

void MultiRat::trim(PolyM& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

MultiRat::PolyM MultiRat::p_add(const PolyM& a, const PolyM& b) {
    PolyM r(std::max(a.size(), b.size()), MultiRat(Rational(0)));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    trim(r);
    return r;
}

MultiRat::PolyM MultiRat::p_neg(const PolyM& a) {
    PolyM r = a;
    for (auto& c : r) c = -c;
    return r;
}

MultiRat::PolyM MultiRat::p_mul(const PolyM& a, const PolyM& b) {
    if (a.empty() || b.empty()) return {};
    PolyM r(a.size() + b.size() - 1, MultiRat(Rational(0)));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

MultiRat::PolyM MultiRat::p_scale(const PolyM& a, const MultiRat& s) {
    PolyM r = a;
    for (auto& c : r) c *= s;
    trim(r);
    return r;
}

void MultiRat::p_divrem(const PolyM& a, const PolyM& b, PolyM& q, PolyM& r) {
    if (b.empty()) throw std::domain_error("tower poly division by zero");
    q.clear();
    r = a;
    if (a.size() < b.size()) return;
    q.assign(a.size() - b.size() + 1, MultiRat(Rational(0)));
    while (r.size() >= b.size() && !r.empty()) {
        size_t k = r.size() - b.size();
        MultiRat f = r.back() / b.back();
        q[k] = f;
        for (size_t i = 0; i < b.size(); ++i) r[i + k] -= f * b[i];
        trim(r);
    }
}

MultiRat::PolyM MultiRat::p_gcd(PolyM a, PolyM b) {
    trim(a);
    trim(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        PolyM q, r;
        p_divrem(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        MultiRat lead = a.back();
        for (auto& c : a) c = c / lead;
    }
    return a;
}

void MultiRat::as_level(int level, PolyM& num, PolyM& den) const {
    if (level < lvl_) throw std::domain_error("as_level below actual level");
    if (level == lvl_ && lvl_ >= 1) {
        num = num_;
        den = den_;
        return;
    }
    num = is_zero() ? PolyM{} : PolyM{*this};
    den = PolyM{MultiRat(Rational(1))};
}

void MultiRat::reduce() {
    trim(num_);
    trim(den_);
    if (den_.empty()) throw std::domain_error("tower with zero denominator");
    if (num_.empty()) {
        lvl_ = 0;
        scalar_ = 0;
        num_.clear();
        den_.clear();
        return;
    }
    PolyM g = p_gcd(num_, den_);
    if (g.size() > 1) {
        PolyM q, r;
        p_divrem(num_, g, q, r);
        num_ = q;
        p_divrem(den_, g, q, r);
        den_ = q;
    }
    MultiRat lead = den_.back();
    if (!(lead.lvl_ == 0 && lead.scalar_ == 1)) {
        for (auto& c : num_) c = c / lead;
        for (auto& c : den_) c = c / lead;
    }
    if (num_.size() == 1 && den_.size() == 1) {
        // top variable does not occur: collapse
        MultiRat inner = num_[0];
        lvl_ = inner.lvl_;
        scalar_ = inner.scalar_;
        num_ = inner.num_;
        den_ = inner.den_;
    }
}

bool MultiRat::operator==(const MultiRat& o) const {
    if (lvl_ != o.lvl_) return false;
    if (lvl_ == 0) return scalar_ == o.scalar_;
    return num_ == o.num_ && den_ == o.den_;
}

MultiRat MultiRat::operator-() const {
    if (lvl_ == 0) return MultiRat(-scalar_);
    return MultiRat(lvl_, p_neg(num_), den_);
}

MultiRat MultiRat::operator+(const MultiRat& o) const {
    if (lvl_ == 0 && o.lvl_ == 0) return MultiRat(scalar_ + o.scalar_);
    int L = std::max(lvl_, o.lvl_);
    PolyM an, ad, bn, bd;
    as_level(L, an, ad);
    o.as_level(L, bn, bd);
    return MultiRat(L, p_add(p_mul(an, bd), p_mul(bn, ad)), p_mul(ad, bd));
}

MultiRat MultiRat::operator-(const MultiRat& o) const { return *this + (-o); }

MultiRat MultiRat::operator*(const MultiRat& o) const {
    if (lvl_ == 0 && o.lvl_ == 0) return MultiRat(scalar_ * o.scalar_);
    if (is_zero() || o.is_zero()) return MultiRat(Rational(0));
    int L = std::max(lvl_, o.lvl_);
    PolyM an, ad, bn, bd;
    as_level(L, an, ad);
    o.as_level(L, bn, bd);
    return MultiRat(L, p_mul(an, bn), p_mul(ad, bd));
}

MultiRat MultiRat::operator/(const MultiRat& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    if (lvl_ == 0 && o.lvl_ == 0) return MultiRat(scalar_ / o.scalar_);
    int L = std::max(lvl_, o.lvl_);
    PolyM an, ad, bn, bd;
    as_level(L, an, ad);
    o.as_level(L, bn, bd);
    return MultiRat(L, p_mul(an, bd), p_mul(ad, bn));
}

MultiRat MultiRat::pow(long e) const {
    if (e < 0) return (MultiRat(Rational(1)) / *this).pow(-e);
    MultiRat acc{Rational(1)}, base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

MultiRat MultiRat::derivative(int v) const {
    if (lvl_ == 0) return MultiRat(Rational(0));
    auto dpoly = [&](const PolyM& p) {
        if (v == lvl_) {
            PolyM r;
            for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * MultiRat(Rational(static_cast<long>(i))));
            trim(r);
            return r;
        }
        PolyM r;
        for (const auto& c : p) r.push_back(c.derivative(v));
        trim(r);
        return r;
    };
    if (v > lvl_) return MultiRat(Rational(0));
    PolyM dn = dpoly(num_), dd = dpoly(den_);
    return MultiRat(lvl_, p_add(p_mul(dn, den_), p_neg(p_mul(num_, dd))), p_mul(den_, den_));
}

MultiRat MultiRat::substituted(int v, const MultiRat& g) const {
    if (lvl_ == 0) return *this;
    auto subst_poly = [&](const PolyM& p) {
        if (v == lvl_) {
            MultiRat acc{Rational(0)};
            for (size_t i = p.size(); i-- > 0;) acc = acc * g + p[i];
            return acc;
        }
        // v occurs inside coefficients; rebuild the polynomial in var lvl_.
        MultiRat acc{Rational(0)};
        MultiRat zv = MultiRat::var(lvl_);
        MultiRat zpow{Rational(1)};
        for (size_t i = 0; i < p.size(); ++i) {
            acc += p[i].substituted(v, g) * zpow;
            if (i + 1 < p.size()) zpow *= zv;
        }
        return acc;
    };
    MultiRat n = subst_poly(num_), d = subst_poly(den_);
    if (d.is_zero()) throw std::domain_error("substitution creates an identically zero denominator");
    return n / d;
}

MultiRat MultiRat::residue_top(const Rational& alpha) const {
    if (lvl_ == 0) return MultiRat(Rational(0));
    const MultiRat a{alpha};
    // Evaluate a PolyM at alpha.
    auto eval = [&](const PolyM& p) {
        MultiRat acc{Rational(0)};
        for (size_t i = p.size(); i-- > 0;) acc = acc * a + p[i];
        return acc;
    };
    // Deflate by (t - alpha).
    auto deflate = [&](const PolyM& p) {
        PolyM q(p.size() - 1, MultiRat(Rational(0)));
        MultiRat carry{Rational(0)};
        for (size_t i = p.size(); i-- > 1;) {
            carry = p[i] + carry * a;
            q[i - 1] = carry;
        }
        trim(q);
        return q;
    };
    PolyM n = num_, d = den_;
    long vn = 0, vd = 0;
    while (!n.empty() && eval(n).is_zero()) {
        n = deflate(n);
        ++vn;
    }
    while (!d.empty() && eval(d).is_zero()) {
        d = deflate(d);
        ++vd;
    }
    long val = vn - vd;
    if (val >= 0) return MultiRat(Rational(0));
    // Series division of n by d around t = alpha up to order -1 - val.
    long need = -1 - val;
    // Taylor coefficients of a PolyM at alpha via repeated deflation.
    auto taylor = [&](PolyM p, long k) {
        std::vector<MultiRat> out;
        for (long i = 0; i <= k; ++i) {
            if (p.empty()) {
                out.emplace_back(Rational(0));
                continue;
            }
            out.push_back(eval(p));
            if (!p.empty() && p.size() > 1)
                p = deflate(p_add(p, p_scale(PolyM{out.back()}, MultiRat(Rational(-1)))));
            else
                p.clear();
        }
        return out;
    };
    auto tn = taylor(n, need), td = taylor(d, need);
    std::vector<MultiRat> q(static_cast<size_t>(need) + 1, MultiRat(Rational(0)));
    for (long k = 0; k <= need; ++k) {
        MultiRat acc = tn[static_cast<size_t>(k)];
        for (long j = 0; j < k; ++j) acc -= q[static_cast<size_t>(j)] * td[static_cast<size_t>(k - j)];
        q[static_cast<size_t>(k)] = acc / td[0];
    }
    return q[static_cast<size_t>(need)];
}

RatFunc MultiRat::to_ratfunc() const {
    if (lvl_ == 0) return RatFunc(scalar_);
    auto lower = [&](const PolyM& p) {
        std::vector<Rational> cs;
        for (const auto& c : p) {
            if (!c.is_scalar()) throw std::domain_error("to_ratfunc on a genuinely multivariate value");
            cs.push_back(c.scalar());
        }
        return Poly(cs);
    };
    return RatFunc(lower(num_), lower(den_));
}

std::string MultiRat::str() const {
    if (lvl_ == 0) return scalar_.get_str();
    auto poly_s = [&](const PolyM& p) {
        std::ostringstream os;
        bool first = true;
        for (size_t i = p.size(); i-- > 0;) {
            if (p[i].is_zero()) continue;
            if (!first) os << " + ";
            os << "(" << p[i].str() << ")";
            if (i > 0) {
                os << "*z" << lvl_;
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        if (first) os << "0";
        return os.str();
    };
    std::ostringstream os;
    os << "(" << poly_s(num_) << ")";
    if (!(den_.size() == 1 && den_[0].is_scalar() && den_[0].scalar() == 1))
        os << "/(" << poly_s(den_) << ")";
    return os.str();
}

std::uint64_t MultiRat::hash() const {
    if (lvl_ == 0) return hash_rational(scalar_);
    std::uint64_t h = 0xcbf29ce484222325ULL ^ static_cast<std::uint64_t>(lvl_);
    for (const auto& c : num_) h = (h ^ c.hash()) * 0x100000001b3ULL;
    h = (h ^ 0xdeadbeefULL) * 0x100000001b3ULL;
    for (const auto& c : den_) h = (h ^ c.hash()) * 0x100000001b3ULL;
    return h;
}

}  // namespace irrec
