#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "irrec/multirat.hpp"
#include "irrec/ratfunc.hpp"

namespace irrec {

/// One product term c * f_1(z_1) * ... * f_n(z_n).
struct SepTerm {
    Rational coef;
    std::vector<RatFunc> f;  // one factor per slot
};

/// A multivariate rational function stored as a sum of separable products of
/// univariate rational functions. This is the closed form the invariants of
/// rational spectral curves actually take (poles confined to finitely many
/// per-variable points), and it keeps residue extraction and the high-n
/// identity checks tractable where a dense multivariate representation would
/// not be.
class SepSum {
public:
    SepSum() : nvars_(0) {}
    explicit SepSum(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    bool empty() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::vector<SepTerm>& terms() const { return terms_; }

    static SepSum zero(int nvars) { return SepSum(nvars); }
    static SepSum single(const Rational& coef, std::vector<RatFunc> factors);

    void add_term(const Rational& coef, std::vector<RatFunc> factors);
    SepSum operator+(const SepSum& o) const;
    SepSum operator-(const SepSum& o) const;
    SepSum operator*(const Rational& s) const;
    SepSum& operator+=(const SepSum& o);

    /// Merge like terms and collapse groups differing in a single slot.
    void compact();

    SepSum transposed(int i, int j) const;            // swap slots (0-based)
    SepSum derivative_slot(int i) const;              // d/dz_i
    SepSum multiplied_slot(int i, const RatFunc& g) const;
    SepSum composed_slot(int i, const RatFunc& g) const;  // z_i -> g(z_i)

    Rational evaluate(const std::vector<Rational>& pt) const;

    /// Exact zero test (low-rank tensor certification on sample grids sized
    /// by degree bounds). Always exact; no probabilistic acceptance.
    bool is_zero() const;
    bool equals(const SepSum& o) const;

    /// Taylor coefficients around per-slot centers: tensor indexed by
    /// multi-exponent (row-major, orders[i]+1 entries per slot). Throws when
    /// some factor has a pole at its center.
    std::vector<Rational> taylor_tensor(const std::vector<Rational>& centers,
                                        const std::vector<long>& orders) const;

    /// Per-slot composition with power series s_i(u) (positive valuation),
    /// returning the tensor of coefficients in prod u_i^{e_i}, e_i <= orders[i].
    std::vector<Rational> series_tensor(const std::vector<std::vector<Rational>>& slot_series,
                                        const std::vector<long>& orders) const;

    MultiRat to_multirat() const;  // variables 1..nvars
    std::string str() const;

private:
    void merge_identical();
    bool merge_slot_groups(int slot);

    int nvars_;
    std::vector<SepTerm> terms_;
};

}  // namespace irrec
