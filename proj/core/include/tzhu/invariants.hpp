#pragma once

#include "tzhu/check.hpp"
#include "tzhu/voa.hpp"
#include "tzhu/zhu.hpp"

namespace tzhu {

// Mode-engine invariants on the model itself. Cases whose intermediate
// weights pass the cutoff are counted as skipped.

// [u_m, v_n] w = sum_i C(m, i) (u_i v)_{m+n-i} w.
CheckReport check_vertex_commutator(const VoaSpec& spec, int max_weight = 4, int w_weight = 2);
// (L(-1) u)_n w = -n u_{n-1} w.
CheckReport check_derivative(const VoaSpec& spec, int max_weight = 3, int w_weight = 2);
// u_{-1} 1 = u and u_n 1 = 0 for n >= 0.
CheckReport check_creation(const VoaSpec& spec, int max_weight = 6);
// u in V^r, v in V^s  =>  u_n v in V^{r+s}.
CheckReport check_g_grading(const VoaSpec& spec, int max_weight = 3);
// phi(u) = (-1)^{wt u} u + lower weights, and phi squares to the identity.
CheckReport check_phi_involution(const VoaSpec& spec, int max_weight = 6);

// Contravariant-form invariants.
CheckReport check_gram_symmetry(const VoaSpec& spec, int max_weight = 6);
CheckReport check_radical_null(const VoaSpec& spec, int max_weight = 6);
// Radical vectors stay in the radical under modes of basis vectors (quotient models).
CheckReport check_quotient_well_defined(const VoaSpec& spec, int max_weight = 6, int u_weight = 3);

// dim at margin K never exceeds dim at margin K-1.
CheckReport check_margin_monotonicity(const ZhuAlgebra& alg);

}  // namespace tzhu
