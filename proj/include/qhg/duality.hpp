#pragma once

#include "qhg/hypergroup.hpp"

namespace qhg {

/// The dual (Â, Δ̂) on the basis ω_i = φ(·e_i), with the pairing
/// P(i, j) = ⟨ω_i, e_j⟩ = φ(e_j e_i). Elements of Â are stored as
/// coordinates against the ω basis; as functionals on A they are Pᵀw.
struct DualPackage {
  QuantumHypergroup source;
  QuantumHypergroup dual;
  Matrix pairing;
  Matrix pairing_t_inv;  // (Pᵀ)⁻¹: functional values -> coordinates
  Report report;         // construction checks, including the dual pipeline
};

/// Builds Â and runs it through the full pipeline. Throws ValidationError
/// (check names prefixed "dual:") if the dual fails any check.
DualPackage build_dual(const QuantumHypergroup& h);

/// Values on the basis of A of the dual element with coordinates w.
Vector as_functional(const DualPackage& p, const Vector& w);
/// Coordinates of the functional with the given values on the basis of A.
Vector from_functional(const DualPackage& p, const Vector& values);

/// (f g)(x) = (f⊗g)Δ(x) for arbitrary functionals on A.
Vector convolve(const QuantumHypergroup& h, const Vector& f, const Vector& g);

/// ω = φ(a·) = φ(·b) = ψ(c·) = ψ(·d).
struct FourForms {
  Vector a, b, c, d;
};
FourForms four_forms(const QuantumHypergroup& h, const Vector& functional);
FourForms four_forms(const DualPackage& p, const Vector& w);

/// Pairing identities for the stored tables, the four product formulas for
/// ω φ(·a), ω φ(a·), ψ(·a) ω, ψ(a·) ω, and the two one-sided coproduct
/// formulas of Δ̂, on all basis pairs.
Report check_product_formulas(const DualPackage& p);

enum class Action {
  LeftOnDual,      // a ▸ ω = ω(·a), operands (a, ω)
  RightOnDual,     // ω ◂ a = ω(a·), operands (ω, a)
  LeftOnAlgebra,   // ω ▸ a = (ι⊗ω)Δ(a), operands (ω, a)
  RightOnAlgebra,  // a ◂ ω = (ω⊗ι)Δ(a), operands (a, ω)
};
/// Dual operands are coordinates in Â; the result lives in Â for the first
/// two kinds and in A for the last two.
Vector module_action(const DualPackage& p, Action kind, const Vector& x, const Vector& y);

/// Γ(a) = evaluation at a, as a matrix from A to the bidual basis.
Matrix bidual_map(const DualPackage& first, const DualPackage& second);
/// Builds dual and bidual and checks that Γ is an isomorphism of quantum
/// hypergroups (product, coproduct, counit, antipode, integral, involution).
Report bidual_check(const QuantumHypergroup& h);
Report bidual_check(const DualPackage& first, const DualPackage& second);

/// Closed forms for δ̂, δ̂⁻¹, σ̂, σ̂′, ψ̂ on the basis, Δ(δ) = δ⊗δ and the
/// transfer of positivity from ψ to φ̂.
Report dual_data_check(const DualPackage& p);
/// σ = δ̂⁻¹ ▸ S², σ′ = S⁻² ◂ δ̂⁻¹ and S⁴(a) = δ⁻¹(δ̂ ▸ a ◂ δ̂⁻¹)δ.
Report radford_check(const DualPackage& p);
/// compact ⇔ dual discrete (both ways); φ, ψ as co-integrals of Â.
Report compact_discrete_duality_check(const DualPackage& p);

/// Everything above on one hypergroup, in a fixed order. Never throws for
/// a verified input; failures show up as records.
Report full_duality_report(const QuantumHypergroup& h);

}  // namespace qhg
