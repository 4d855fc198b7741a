#pragma once

#include <map>
#include <vector>

#include "irrec/dessins.hpp"
#include "irrec/rational.hpp"

namespace irrec {

/// Quasi-polynomial modulo 2: one polynomial in the squared variables per
/// parity class of the arguments.
struct QuasiPolynomial {
    int nvars = 0;
    long degree_bound = 0;                       // degree in the squared variables
    std::map<std::vector<int>, MPoly> classes;   // parity vector (0=even,1=odd) -> poly in mu_i^2

    Rational evaluate(const MuTuple& mu) const {
        std::vector<int> par;
        std::vector<Rational> sq;
        for (long m : mu) {
            par.push_back(static_cast<int>(((m % 2) + 2) % 2));
            sq.push_back(Rational(m) * Rational(m));
        }
        auto it = classes.find(par);
        if (it == classes.end()) throw std::domain_error("parity class not fitted");
        return it->second.evaluate(sq);
    }
};

/// The coefficient of (-1)^{|mu|}: difference between the even-|mu| and
/// odd-|mu| class polynomials.
struct PMinusPart {
    int g = 0, n = 0;
    MPoly poly;  // in the squared variables
};

namespace pruned {

/// b_{g,n}(mu) by the symmetric functional recursion (base cases b_{0,1}=0,
/// b_{0,2}=delta/mu, b_{0,3}=2, b_{1,1} parity values).
Rational b_pruned(int g, const MuTuple& mu);

/// Same values by the asymmetric recursion (top level independent; lower
/// values from the shared table).
Rational b_pruned_asym(int g, const MuTuple& mu);

/// Number of ways to glue planar trees with k edges onto a boundary of
/// length b: C^b_k = (b/(b+k)) binom(b-1+2k, k).
Rational tree_gluing_count(long b, long k);

/// B_{g,n}(mu) reconstructed from pruned counts by tree gluing.
Rational tree_glue_transform(int g, const MuTuple& mu);

/// Fit the parity-class polynomials of b_{g,n} (degree 3g-3+n in mu_i^2),
/// verified on held-out points.
QuasiPolynomial quasipoly_fit(int g, int n);

/// Leading-coefficient check: [mu^{2a}] b_{g,n} minus
/// 2^{1-g} / prod(a_i!) * psi (the supplied intersection number).
Rational psi_leading_check(int g, int n, const std::vector<long>& a, const Rational& psi_value);

/// Non-bipartite count NB_g(mu) = 2 N_{g,n}(2 mu) - b_{g,n}(mu); N from the
/// fatgraph oracle.
Rational nb_count(int g, const MuTuple& mu);

/// Class-difference extraction (even-|mu| classes minus odd-|mu| classes).
PMinusPart p_minus_extract(const QuasiPolynomial& q);

/// Quasi-polynomial for NB_1 in n variables (n = 1 full fit, n = 2
/// constant-difference fit at oracle scale), held-out verified.
QuasiPolynomial nb1_quasipoly(int n);

}  // namespace pruned

}  // namespace irrec
