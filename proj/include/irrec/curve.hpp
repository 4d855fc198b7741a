#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "irrec/multirat.hpp"
#include "irrec/ratfunc.hpp"
#include "irrec/sepsum.hpp"

namespace irrec {

enum class BranchClass { Regular, IrregularFlat, IrregularHighPole, IrregularSimplePole };

std::string to_string(BranchClass c);

struct BranchPoint {
    Rational alpha;
    BranchClass cls;
};

/// One invariant omega^g_n: the body is omega / prod dz_i.
struct Multidifferential {
    int g = 0;
    int n = 0;
    SepSum body;
    bool symmetry_guaranteed = true;  // false when an IrregularFlat zero is present
};

/// Rational spectral curve (x, y) on CP^1 with the fixed bidifferential
/// dz1 dz2/(z1-z2)^2 and a global involution sigma with x(sigma) = x.
class SpectralCurve {
public:
    SpectralCurve(std::string id, RatFunc x, RatFunc y, RatFunc sigma);

    const std::string& id() const { return id_; }
    const RatFunc& x() const { return x_; }
    const RatFunc& y() const { return y_; }
    const RatFunc& sigma() const { return sigma_; }
    const RatFunc& x_prime() const { return xprime_; }
    const RatFunc& sigma_prime() const { return sigma_prime_; }
    const std::vector<BranchPoint>& branch_points() const { return branch_; }
    bool has_flat_zero() const;

    /// omega^0_1 body = -y x' (single slot).
    SepSum omega01() const;
    /// omega^0_2 body as a tower (1/(z1-z2)^2); kept special in the engine.
    MultiRat omega02() const;

    /// Recursion kernel body k(z1, z) with K = k dz1/dz, as a two-variable
    /// tower (z1 = variable 1, z = variable 2).
    MultiRat kernel_multirat() const;

    /// The invariant omega^g_n for 2g-2+n > 0 (memoized; symmetry of the
    /// result is verified for small n unless a flat zero forbids it).
    const Multidifferential& eo_invariant(int g, int n) const;

    /// sum_a Res_{z=a} Phi(z) omega^g_{n+1}(z, z_1..z_n) - (2-2g-n) omega^g_n;
    /// Phi is the antiderivative of omega^0_1 (log terms expanded locally,
    /// constants dropped -- immaterial since omega has vanishing residues).
    SepSum dilaton_residual(int g, int n) const;

    /// sum_a Res_{z=a} x^m y omega^g_{n+1}(z, z_S)
    ///   + sum_j d/dz_j [ x(z_j)^m omega^g_n / dx(z_j) ];
    /// zero for regular curves, a nonzero witness for xy^2 = 1.
    SepSum string_residual(int g, int n, int m) const;

    /// F_g = sum_a Res Phi omega^g_1 for g >= 2.
    Rational symplectic_invariant(int g) const;

    /// Residue of the body of omega^g_n in slot `slot` at a branch point.
    SepSum slot_residue(const SepSum& body, int slot, const Rational& alpha) const;

private:
    struct BracketTerm {
        Rational coef;
        RatFunc u;                                    // univariate in the residue variable
        std::vector<std::pair<int, int>> couplers;    // (result slot, 0=plain / 1=sigma)
        std::vector<std::pair<int, RatFunc>> passengers;  // (result slot, factor)
    };

    Multidifferential compute(int g, int n) const;
    void assemble_bracket(int g, int n, std::vector<BracketTerm>& out) const;
    void residue_accumulate(const BracketTerm& term, const Rational& alpha, SepSum& acc, int n) const;
    Rational residue_with_phi(const RatFunc& f, const Rational& alpha) const;

    std::string id_;
    RatFunc x_, y_, sigma_;
    RatFunc xprime_, sigma_prime_, y_sigma_, delta_y_;
    RatFunc kernel_pref_;  // 1/(2 (y - y.sigma) x')
    Antiderivative phi_;   // antiderivative of -y x'
    std::vector<BranchPoint> branch_;

    mutable std::mutex memo_mutex_;
    mutable std::map<std::pair<int, int>, std::shared_ptr<const Multidifferential>> memo_;
};

/// Classify the zeros of dx (throws when a zero of dx is not simple or not
/// rational, or when sigma does not fix it).
std::vector<BranchPoint> classify_branch_points(const RatFunc& x, const RatFunc& y,
                                                const RatFunc& sigma);

/// Built-in curves.
const SpectralCurve& curve_dessin();               // x = z + 1/z + 2, y = z/(1+z)
const SpectralCurve& curve_airy();                 // x = z^2,  y = 1/z
const SpectralCurve& curve_airy_half();            // x = z^2/2, y = 1/z
const SpectralCurve& curve_gauss_regular();        // x = z + 1/z, y = z
const SpectralCurve& curve_flat_counterexample();  // x = z^2, y = z^3
const SpectralCurve* find_curve(const std::string& name);

}  // namespace irrec
