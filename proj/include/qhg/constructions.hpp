#pragma once

#include "qhg/group.hpp"
#include "qhg/hypergroup.hpp"

namespace qhg {

/// Functions on G constant on the double cosets HgH, with
/// Δ(f)(p,q) = (1/|H|) Σ_h f(phq), ε(f) = f(e), φ(f) = Σ_p f(p) and
/// pointwise conjugation as involution. Basis: the coset indicators in the
/// order of double_cosets().
QuantumHypergroup double_coset_hypergroup(const FiniteGroup& g, const Subgroup& h);
/// Raw data for double_coset_hypergroup, before verification.
HypergroupData double_coset_data(const FiniteGroup& g, const Subgroup& h);

/// K(G): all functions on G (the double-coset construction with H = {e}).
QuantumHypergroup function_algebra(const FiniteGroup& g);

/// ℂG on the basis λ_p with Δ(λ_p) = λ_p⊗λ_p, ε(λ_p) = 1, φ(λ_p) = [p = e]
/// and λ_p* = λ_{p⁻¹}.
QuantumHypergroup group_algebra_hopf(const FiniteGroup& g);

/// Records the three group-like projection conditions for u in B.
Report check_group_like_projection(const QuantumHypergroup& b, const Vector& u);

/// (1/|H|) Σ_{h∈H} λ_h in group_algebra_hopf(g). Throws ValidationError when
/// the result is not a group-like projection.
Vector hecke_unit(const QuantumHypergroup& group_algebra, const FiniteGroup& g, const Subgroup& h);

/// uBu with b ↦ (u⊗u)Δ(b)(u⊗u) and the restricted counit, integral and
/// involution. The basis is a set of pivot columns of x ↦ uxu.
QuantumHypergroup group_like_projection_compression(const QuantumHypergroup& b, const Vector& u);

/// Matrix whose columns are the compression basis, expressed in B.
Matrix compression_basis(const QuantumHypergroup& b, const Vector& u);

/// Sweedler's four-dimensional Hopf algebra on 1, g, x, gx with g² = 1,
/// x² = 0, xg = -gx, Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x. The integral is computed.
QuantumHypergroup sweedler_fixture();
HypergroupData sweedler_data();

}  // namespace qhg
