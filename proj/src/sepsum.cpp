#include "irrec/sepsum.hpp"

#include "irrec/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace irrec {

SepSum SepSum::single(const Rational& coef, std::vector<RatFunc> factors) {
    SepSum s(static_cast<int>(factors.size()));
    s.add_term(coef, std::move(factors));
    return s;
}

void SepSum::add_term(const Rational& coef, std::vector<RatFunc> factors) {
    if (static_cast<int>(factors.size()) != nvars_) throw std::domain_error("slot count mismatch");
    if (coef == 0) return;
    for (const auto& f : factors)
        if (f.is_zero()) return;
    terms_.push_back(SepTerm{coef, std::move(factors)});
}

SepSum SepSum::operator+(const SepSum& o) const {
    SepSum r = *this;
    r += o;
    return r;
}

SepSum& SepSum::operator+=(const SepSum& o) {
    if (nvars_ != o.nvars_) throw std::domain_error("slot count mismatch");
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    return *this;
}

SepSum SepSum::operator-(const SepSum& o) const { return *this + (o * Rational(-1)); }

SepSum SepSum::operator*(const Rational& s) const {
    SepSum r = *this;
    if (s == 0) {
        r.terms_.clear();
        return r;
    }
    for (auto& t : r.terms_) t.coef *= s;
    return r;
}

namespace {
std::uint64_t factors_hash(const SepTerm& t, int skip = -1) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (size_t i = 0; i < t.f.size(); ++i) {
        if (static_cast<int>(i) == skip) continue;
        h = (h ^ t.f[i].hash()) * 0x100000001b3ULL;
    }
    return h;
}
bool factors_equal(const SepTerm& a, const SepTerm& b, int skip = -1) {
    for (size_t i = 0; i < a.f.size(); ++i) {
        if (static_cast<int>(i) == skip) continue;
        if (!(a.f[i] == b.f[i])) return false;
    }
    return true;
}
}  // namespace

void SepSum::merge_identical() {
    if (terms_.size() < 2) return;
    std::vector<std::uint64_t> hs(terms_.size());
    for (size_t i = 0; i < terms_.size(); ++i) hs[i] = factors_hash(terms_[i]);
    std::vector<size_t> idx(terms_.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return hs[a] < hs[b]; });
    std::vector<bool> handled(terms_.size(), false);
    std::vector<SepTerm> out;
    for (size_t k = 0; k < idx.size(); ++k) {
        if (handled[idx[k]]) continue;
        SepTerm cur = terms_[idx[k]];
        for (size_t j = k + 1; j < idx.size() && hs[idx[j]] == hs[idx[k]]; ++j) {
            if (!handled[idx[j]] && factors_equal(cur, terms_[idx[j]])) {
                cur.coef += terms_[idx[j]].coef;
                handled[idx[j]] = true;
            }
        }
        if (cur.coef != 0) out.push_back(std::move(cur));
    }
    terms_ = std::move(out);
}

bool SepSum::merge_slot_groups(int slot) {
    if (terms_.size() < 2) return false;
    std::map<std::uint64_t, std::vector<size_t>> buckets;
    for (size_t i = 0; i < terms_.size(); ++i) buckets[factors_hash(terms_[i], slot)].push_back(i);
    std::vector<bool> dead(terms_.size(), false);
    std::vector<SepTerm> fresh;
    bool changed = false;
    for (auto& [h, ids] : buckets) {
        if (ids.size() < 2) continue;
        std::vector<bool> used(ids.size(), false);
        for (size_t a = 0; a < ids.size(); ++a) {
            if (used[a]) continue;
            std::vector<size_t> group{ids[a]};
            for (size_t b = a + 1; b < ids.size(); ++b) {
                if (!used[b] && factors_equal(terms_[ids[a]], terms_[ids[b]], slot)) {
                    group.push_back(ids[b]);
                    used[b] = true;
                }
            }
            if (group.size() < 2) continue;
            RatFunc combo;
            for (size_t g : group) combo += terms_[g].f[static_cast<size_t>(slot)] * terms_[g].coef;
            for (size_t g : group) dead[g] = true;
            changed = true;
            if (!combo.is_zero()) {
                SepTerm t = terms_[group[0]];
                t.coef = 1;
                t.f[static_cast<size_t>(slot)] = combo;
                fresh.push_back(std::move(t));
            }
        }
    }
    if (!changed) return false;
    std::vector<SepTerm> out;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!dead[i]) out.push_back(std::move(terms_[i]));
    for (auto& t : fresh) out.push_back(std::move(t));
    terms_ = std::move(out);
    return true;
}

void SepSum::compact() {
    merge_identical();
    bool changed = true;
    int guard = 0;
    while (changed && guard++ < 8) {
        changed = false;
        for (int s = 0; s < nvars_; ++s) changed |= merge_slot_groups(s);
        if (changed) merge_identical();
    }
}

SepSum SepSum::transposed(int i, int j) const {
    SepSum r = *this;
    for (auto& t : r.terms_) std::swap(t.f[static_cast<size_t>(i)], t.f[static_cast<size_t>(j)]);
    return r;
}

SepSum SepSum::derivative_slot(int i) const {
    SepSum r(nvars_);
    for (const auto& t : terms_) {
        RatFunc d = t.f[static_cast<size_t>(i)].derivative();
        if (d.is_zero()) continue;
        SepTerm nt = t;
        nt.f[static_cast<size_t>(i)] = d;
        r.terms_.push_back(std::move(nt));
    }
    return r;
}

SepSum SepSum::multiplied_slot(int i, const RatFunc& g) const {
    SepSum r(nvars_);
    if (g.is_zero()) return r;
    for (const auto& t : terms_) {
        SepTerm nt = t;
        nt.f[static_cast<size_t>(i)] = nt.f[static_cast<size_t>(i)] * g;
        if (!nt.f[static_cast<size_t>(i)].is_zero()) r.terms_.push_back(std::move(nt));
    }
    return r;
}

SepSum SepSum::composed_slot(int i, const RatFunc& g) const {
    SepSum r(nvars_);
    for (const auto& t : terms_) {
        SepTerm nt = t;
        nt.f[static_cast<size_t>(i)] = nt.f[static_cast<size_t>(i)].compose(g);
        if (!nt.f[static_cast<size_t>(i)].is_zero()) r.terms_.push_back(std::move(nt));
    }
    return r;
}

Rational SepSum::evaluate(const std::vector<Rational>& pt) const {
    Rational acc = 0;
    for (const auto& t : terms_) {
        Rational v = t.coef;
        for (int i = 0; i < nvars_; ++i) v *= t.f[static_cast<size_t>(i)].evaluate(pt[static_cast<size_t>(i)]);
        acc += v;
    }
    return acc;
}

bool SepSum::is_zero() const {
    if (terms_.empty()) return true;
    SepSum w = *this;
    w.compact();
    if (w.terms_.empty()) return true;
    const size_t T = w.terms_.size();
    const int n = nvars_;
    // Per-slot exact coordinates: Laurent coefficients at every pole plus the
    // polynomial part. The map is linear and injective, so the function
    // tensor vanishes iff the coordinate tensor does, and the entries stay
    // the size of the original coefficients.
    std::vector<std::vector<std::vector<Rational>>> v(static_cast<size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::map<Rational, long> poles;  // root -> max multiplicity
        long poly_deg = 0;
        bool rational_poles = true;
        for (const auto& t : w.terms_) {
            const RatFunc& f = t.f[static_cast<size_t>(s)];
            long covered = 0;
            for (const auto& [root, mult] : f.den().rational_roots()) {
                covered += mult;
                auto it = poles.find(root);
                if (it == poles.end())
                    poles.emplace(root, mult);
                else
                    it->second = std::max(it->second, mult);
            }
            if (covered != f.den().degree()) rational_poles = false;
            poly_deg = std::max(poly_deg, f.num().degree() - f.den().degree());
        }
        if (!rational_poles) {
            // fall back to sample values on a grid sized by degree bounds
            Poly l = Poly::one();
            for (const auto& t : w.terms_) {
                const Poly& d = t.f[static_cast<size_t>(s)].den();
                Poly g = poly_gcd(l, d);
                Poly q, r;
                Poly::divrem(d, g, q, r);
                l *= q;
            }
            long b = 0;
            for (const auto& t : w.terms_) {
                const RatFunc& f = t.f[static_cast<size_t>(s)];
                b = std::max(b, f.num().degree() + l.degree() - f.den().degree());
            }
            std::vector<Rational> pts;
            for (long x = 2; static_cast<long>(pts.size()) < b + 1; ++x) {
                Rational q(x);
                if (l.evaluate(q) != 0) pts.push_back(q);
            }
            v[static_cast<size_t>(s)].assign(T, std::vector<Rational>(pts.size()));
            for (size_t t = 0; t < T; ++t)
                for (size_t p = 0; p < pts.size(); ++p)
                    v[static_cast<size_t>(s)][t][p] = w.terms_[t].f[static_cast<size_t>(s)].evaluate(pts[p]);
            continue;
        }
        long dim = poly_deg + 1;
        for (const auto& [root, mult] : poles) dim += mult;
        v[static_cast<size_t>(s)].assign(T, std::vector<Rational>(static_cast<size_t>(std::max(dim, 1L))));
        for (size_t t = 0; t < T; ++t) {
            const RatFunc& f = w.terms_[t].f[static_cast<size_t>(s)];
            auto& row = v[static_cast<size_t>(s)][t];
            size_t idx = 0;
            for (const auto& [root, mult] : poles) {
                auto cs = laurent_coeffs_at(f, root, -mult, -1);
                for (long k = 0; k < mult; ++k) row[idx++] = cs[static_cast<size_t>(k)];
            }
            if (poly_deg >= 0) {
                Poly q, r;
                Poly::divrem(f.num(), f.den(), q, r);
                for (long k = 0; k <= poly_deg; ++k) row[idx++] = q.coeff(k);
            }
        }
    }
    // Profile rows over the term index; row-reduce slot by slot.
    std::vector<std::vector<Rational>> rows;
    {
        std::vector<Rational> c(T);
        for (size_t t = 0; t < T; ++t) c[t] = w.terms_[t].coef;
        rows.push_back(std::move(c));
    }
    auto reduce_insert = [&](std::vector<std::vector<Rational>>& basis, std::vector<long>& pivots,
                             std::vector<Rational> row) {
        for (size_t r = 0; r < basis.size(); ++r) {
            long p = pivots[r];
            if (row[static_cast<size_t>(p)] != 0) {
                Rational f = row[static_cast<size_t>(p)];
                for (size_t k = 0; k < row.size(); ++k) row[k] -= f * basis[r][k];
            }
        }
        long piv = -1;
        for (size_t k = 0; k < row.size(); ++k)
            if (row[k] != 0) {
                piv = static_cast<long>(k);
                break;
            }
        if (piv < 0) return;
        Rational inv = Rational(1) / row[static_cast<size_t>(piv)];
        for (auto& x : row) x *= inv;
        basis.push_back(std::move(row));
        pivots.push_back(piv);
    };
    for (int s = 0; s < n; ++s) {
        std::vector<std::vector<Rational>> basis;
        std::vector<long> pivots;
        for (const auto& r : rows) {
            size_t npts = v[static_cast<size_t>(s)][0].size();
            for (size_t p = 0; p < npts; ++p) {
                std::vector<Rational> nr(T);
                for (size_t t = 0; t < T; ++t) nr[t] = r[t] * v[static_cast<size_t>(s)][t][p];
                reduce_insert(basis, pivots, std::move(nr));
            }
        }
        rows = std::move(basis);
        if (rows.empty()) return true;
    }
    for (const auto& r : rows) {
        Rational sum = 0;
        for (const auto& x : r) sum += x;
        if (sum != 0) return false;
    }
    return true;
}

bool SepSum::equals(const SepSum& o) const { return (*this - o).is_zero(); }

std::vector<Rational> SepSum::taylor_tensor(const std::vector<Rational>& centers,
                                            const std::vector<long>& orders) const {
    size_t total = 1;
    std::vector<size_t> dim(static_cast<size_t>(nvars_));
    for (int i = 0; i < nvars_; ++i) {
        dim[static_cast<size_t>(i)] = static_cast<size_t>(orders[static_cast<size_t>(i)]) + 1;
        total *= dim[static_cast<size_t>(i)];
    }
    std::vector<Rational> out(total, Rational(0));
    for (const auto& t : terms_) {
        std::vector<std::vector<Rational>> cs(static_cast<size_t>(nvars_));
        for (int i = 0; i < nvars_; ++i) {
            const RatFunc& f = t.f[static_cast<size_t>(i)];
            if (f.valuation_at(centers[static_cast<size_t>(i)]) < 0)
                throw std::domain_error("taylor_tensor: pole at expansion point");
            cs[static_cast<size_t>(i)] =
                laurent_coeffs_at(f, centers[static_cast<size_t>(i)], 0, orders[static_cast<size_t>(i)]);
        }
        // outer product accumulate
        std::vector<size_t> ix(static_cast<size_t>(nvars_), 0);
        for (size_t flat = 0; flat < total; ++flat) {
            Rational val = t.coef;
            size_t rem = flat;
            for (int i = nvars_ - 1; i >= 0; --i) {
                size_t e = rem % dim[static_cast<size_t>(i)];
                rem /= dim[static_cast<size_t>(i)];
                val *= cs[static_cast<size_t>(i)][e];
                if (val == 0) break;
            }
            if (val != 0) out[flat] += val;
        }
    }
    return out;
}

std::vector<Rational> SepSum::series_tensor(const std::vector<std::vector<Rational>>& slot_series,
                                            const std::vector<long>& orders) const {
    size_t total = 1;
    std::vector<size_t> dim(static_cast<size_t>(nvars_));
    for (int i = 0; i < nvars_; ++i) {
        dim[static_cast<size_t>(i)] = static_cast<size_t>(orders[static_cast<size_t>(i)]) + 1;
        total *= dim[static_cast<size_t>(i)];
    }
    std::vector<Rational> out(total, Rational(0));
    for (const auto& t : terms_) {
        std::vector<std::vector<Rational>> cs(static_cast<size_t>(nvars_));
        for (int i = 0; i < nvars_; ++i)
            cs[static_cast<size_t>(i)] = compose_ratfunc_series(
                t.f[static_cast<size_t>(i)], slot_series[static_cast<size_t>(i)], orders[static_cast<size_t>(i)]);
        for (size_t flat = 0; flat < total; ++flat) {
            Rational val = t.coef;
            size_t rem = flat;
            for (int i = nvars_ - 1; i >= 0; --i) {
                size_t e = rem % dim[static_cast<size_t>(i)];
                rem /= dim[static_cast<size_t>(i)];
                val *= cs[static_cast<size_t>(i)][e];
                if (val == 0) break;
            }
            if (val != 0) out[flat] += val;
        }
    }
    return out;
}

MultiRat SepSum::to_multirat() const {
    MultiRat acc{Rational(0)};
    for (const auto& t : terms_) {
        MultiRat prod{t.coef};
        for (int i = 0; i < nvars_; ++i)
            prod *= MultiRat::from_ratfunc(t.f[static_cast<size_t>(i)], i + 1);
        acc += prod;
    }
    return acc;
}

std::string SepSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (size_t k = 0; k < terms_.size(); ++k) {
        if (k) os << " + ";
        os << "(" << terms_[k].coef.get_str() << ")";
        for (int i = 0; i < nvars_; ++i) {
            std::string vi = "z" + std::to_string(i + 1);
            os << "*[" << terms_[k].f[static_cast<size_t>(i)].str(vi) << "]";
        }
    }
    return os.str();
}

}  // namespace irrec
