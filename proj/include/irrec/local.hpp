#pragma once

#include <vector>

#include "irrec/dessins.hpp"
#include "irrec/rational.hpp"

namespace irrec {

/// Curve normalization for the local xy^2 = 1 model.
enum class AiryNorm { HalfSquare, Square };  // x = z^2/2 vs x = z^2

/// Volume polynomial V_g(L_1..L_n): even polynomial of degree 2g-2.
struct VolumePoly {
    int g = 0, n = 0;
    MPoly poly;  // in L_1..L_n (even exponents only)
};

namespace local {

/// u_g(mu) for the x = z^2/2 normalization via the coefficient recursion;
/// nonzero only when every part is odd and |mu| = 2g-2+n.
Rational u_airy_rec(int g, const MuTuple& mu);

/// Same in the x = z^2 normalization (scaling bridge 2^{2-2g-n}).
Rational u_airy(int g, const MuTuple& mu, AiryNorm norm);

/// Coefficient a_g of z^{-2g} dz in omega^g_1 for x = z^2, y = 1/z:
/// 2^{1-8g} (2g)!^3 / (g!^4 (2g-1)). Defined for g >= 1; a_0 = -2.
Rational one_point_closed(int g);

/// a_g via the two-term ODE recursion -2g a_g = -(1/16)(2g-3)(2g-1)^2 a_{g-1}.
Rational one_point_ode_rec(int g);

/// Airy-curve (x = y^2) one-point coefficient of z^{2-6g} dz, for reporting.
Rational airy_one_point(int g);

/// V_g in n variables from the u table (inverse Laplace term by term).
VolumePoly volumes(int g, int n);

/// LHS - RHS of the volume recursion (expected zero).
MPoly volume_recursion_residual(int g, int n);

/// V_g(L,0) - (2g-2+n) V_g(L) (expected zero).
MPoly volume_dilaton_residual(int g, int n);

/// Coefficient of L_1^{2g-2} minus 2^{2-6g} binom(2g,g) (2g-3+n)!/(g-1)!^2.
Rational volume_top_coeff_check(int g, int n);

}  // namespace local

}  // namespace irrec
