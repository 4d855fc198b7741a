#pragma once

#include <map>
#include <vector>

#include "irrec/dessins.hpp"
#include "irrec/rational.hpp"

namespace irrec {
namespace oracle {

/// Ground truth by exhaustive enumeration of permutation models. All counts
/// are 1/|Aut|-weighted with labelled boundary components, normalized by the
/// fixed-face-permutation convention (calibrated below).

struct Limits {
    long dessin_dmax = 7;    // edges for dessin enumeration
    long fatgraph_emax = 6;  // edges for fatgraph enumeration
};
Limits& limits();

/// Weighted dessin counts per genus for boundary lengths 2*mu_i. Keys are all
/// genera with nonzero counts.
std::map<int, Rational> dessins_brute(const MuTuple& mu, int threads = 1);

/// Same restricted to pruned dessins (no fixed points in either vertex
/// permutation).
std::map<int, Rational> pruned_brute(const MuTuple& mu, int threads = 1);

/// Weighted fatgraph counts per genus with labelled boundary lengths
/// `lengths` (total even). pruned=true excludes valence-1 vertices.
std::map<int, Rational> fatgraphs_brute(const MuTuple& lengths, bool pruned, int threads = 1);

/// f_bullet(v, e): disconnected dessin count with v vertices, e edges,
/// unlabelled faces; no transitivity filter.
Rational disconnected_brute(long v, long e);

/// Connected count f(v, e) with unlabelled faces (transitive pairs only).
Rational connected_brute(long v, long e);

/// One-time calibration of the counting conventions; throws on mismatch.
/// Asserts B_{0,1}(2)=1, B_{0,3}(1,1,1)=2, N_{0,2}(2,2)=1/2, N_{0,3}(2,2,2)=1.
void calibrate();

}  // namespace oracle
}  // namespace irrec
