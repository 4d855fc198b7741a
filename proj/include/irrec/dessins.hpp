#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "irrec/poly.hpp"
#include "irrec/rational.hpp"

namespace irrec {

using MuTuple = std::vector<long>;

/// Sparse multivariate polynomial with Rational coefficients, keyed by
/// exponent tuples. Used for the fitted structure polynomials and volumes.
class MPoly {
public:
    MPoly() = default;
    explicit MPoly(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    const std::map<std::vector<long>, Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    void add(const std::vector<long>& exps, const Rational& v) {
        if (v == 0) return;
        auto it = c_.find(exps);
        if (it == c_.end())
            c_.emplace(exps, v);
        else {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }
    Rational coeff(const std::vector<long>& exps) const {
        auto it = c_.find(exps);
        return it == c_.end() ? Rational(0) : it->second;
    }
    Rational evaluate(const std::vector<Rational>& pt) const {
        Rational acc = 0;
        for (const auto& [e, v] : c_) {
            Rational m = v;
            for (size_t i = 0; i < e.size(); ++i) m *= rat_pow(pt[i], e[i]);
            acc += m;
        }
        return acc;
    }
    MPoly operator+(const MPoly& o) const {
        MPoly r = *this;
        for (const auto& [e, v] : o.c_) r.add(e, v);
        return r;
    }
    MPoly operator-(const MPoly& o) const {
        MPoly r = *this;
        for (const auto& [e, v] : o.c_) r.add(e, -v);
        return r;
    }
    MPoly operator*(const Rational& s) const {
        MPoly r(nvars_);
        if (s == 0) return r;
        for (const auto& [e, v] : c_) r.add(e, v * s);
        return r;
    }
    bool operator==(const MPoly& o) const { return c_ == o.c_; }
    long total_degree() const {
        long d = 0;
        for (const auto& [e, v] : c_) {
            long s = 0;
            for (long x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }
    std::string str(const std::string& stem = "m") const;

private:
    int nvars_ = 0;
    std::map<std::vector<long>, Rational> c_;
};

/// Memoized exact count table keyed by (g, sorted tuple).
class CountTable {
public:
    bool lookup(int g, const MuTuple& sorted_mu, Rational& out) const {
        std::lock_guard<std::mutex> lk(m_);
        auto it = map_.find({g, sorted_mu});
        if (it == map_.end()) return false;
        out = it->second;
        return true;
    }
    void store(int g, const MuTuple& sorted_mu, const Rational& v) {
        std::lock_guard<std::mutex> lk(m_);
        map_.emplace(std::make_pair(g, sorted_mu), v);
    }
    std::vector<std::pair<std::pair<int, MuTuple>, Rational>> snapshot() const {
        std::lock_guard<std::mutex> lk(m_);
        return {map_.begin(), map_.end()};
    }

private:
    mutable std::mutex m_;
    std::map<std::pair<int, MuTuple>, Rational> map_;
};

namespace dessins {

/// U_g(mu) by the cut-and-join recursion. Zero-part convention: every U_g
/// with a zero part vanishes except the base U_0(0) = 1.
Rational u_count(int g, const MuTuple& mu);

/// B_{g,n}(mu) = U_g(mu) / prod(mu_i); all parts must be positive.
Rational b_big(int g, const MuTuple& mu);

/// One-face counts by the three-term recursion (independent of u_count).
Rational three_term_u(int g, long n);

/// One-face fatgraph counts by the Harer-Zagier three-term recursion.
Rational epsilon_hz(int g, long n);

/// G_n(z), generating polynomial for one-face dessins by genus.
Poly jackson_poly(long n);

/// F_n(z), generating polynomial for one-face fatgraphs by genus.
Poly hz_poly(long n);

/// Closed form for genus 0 (n>=3 product formula; n=1,2 special forms).
Rational genus0_closed(const MuTuple& mu);

/// c_g(mu) = binom(2mu,mu) 2^{-g} prod_{k=1..g} 1/(2mu-2k+1); defined for all mu >= 0.
Rational c_factor(int g, long mu);

/// The symmetric polynomial p_{g,n} with B = p * prod c_g(mu_i), fitted by
/// exact tensor-grid interpolation and verified on held-out points.
MPoly structure_polynomial(int g, int n);

/// B_{g,n+m}(mu, 0^m) via the zero-insertion relation.
Rational evaluate_zero_insertions(int g, int n, int m, const MuTuple& mu);

/// (divisor residual, dilaton residual); divisor only meaningful at g=0.
std::pair<Rational, Rational> divisor_dilaton_residuals(int g, int n, const MuTuple& mu);

/// (B_{g,1}(0) via the structure polynomial, zeta(1-2g)). Report-only probe.
std::pair<Rational, Rational> euler_char_probe(int g);

/// Direct access to the raw recursion with an explicit first element
/// (used to check symmetry of the recursion itself).
Rational u_count_first(int g, long mu1, const MuTuple& rest);

}  // namespace dessins

/// Exact tensor-grid Lagrange interpolation: nodes per variable, callback for
/// values. Result reproduces f on the full grid.
MPoly interpolate_on_grid(const std::vector<std::vector<Rational>>& nodes,
                          const std::function<Rational(const std::vector<Rational>&)>& f);

}  // namespace irrec
