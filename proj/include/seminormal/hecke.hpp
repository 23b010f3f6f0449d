#pragma once

#include "seminormal/rep.hpp"

namespace seminormal {

/// Hoefsmit content of the k-th entry of L:
///  A: q^{2 ct(L(k))}, B: sgn(L(k)) p^{sgn(L(k))} q^{2 ct(L(k))},
///  D (p = 1): sgn(L(k)) q^{2 ct(L(k))}.
RatFunc hecke_content(GroupType t, const StandardTableau& L, int k);

HeckeRep build_hecke_rep(const ShapeLabel& label);

/// Type B matrices with p specialized to 1 at build time, on the full
/// tableau basis; the ambient algebra for the type D construction.
std::vector<Matrix<RatFunc>> hecke_b_matrices_p1(const std::vector<StandardTableau>& basis);

/// Murphy element matrix:
///  A: M_k = T_k...T_3 T_2 T_2 T_3...T_k (k >= 2),
///  B: M_k = T_k...T_2 T_1 T_2...T_k,
///  D: Mt_1 = 1, Mt_2 = Tt_2 Tt_1, Mt_k = Tt_k...Tt_3 Tt_2 Tt_1 Tt_3...Tt_k,
///  G2: z_1 = T_1, z_2 = (T_1 T_2)^3.
Matrix<RatFunc> murphy_matrix(const HeckeRep& rep, int k);

/// Central element matrix: A: T_{w_k0}^2 = M_k...M_2; B: T_{w_k0} = M_k...M_1;
/// D: Mt_k...Mt_1; G2: z_k.
Matrix<RatFunc> central_matrix(const HeckeRep& rep, int k);

/// Entrywise rf_eval; throws PoleError. At p = q = 1 this reproduces the
/// Weyl-group matrices.
WeylRep specialize_rep(const HeckeRep& rep, const Rational& p0, const Rational& q0);

} // namespace seminormal
