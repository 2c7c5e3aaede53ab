#pragma once

#include <optional>
#include <vector>

#include "qhg/algebra.hpp"
#include "qhg/linalg.hpp"
#include "qhg/report.hpp"

namespace qhg {

enum class Side { Left, Right };

/// Raw structure maps of a candidate algebraic quantum hypergroup.
///
/// `comult` is the n^2 x n matrix of Δ on the canonical A⊗A layout, `counit`
/// and `left_integral` are covectors (values on the basis). `antipode`, when
/// present, is a claimed S that is checked against the derived one.
struct HypergroupData {
  StructureAlgebra alg;
  Matrix comult;
  Vector counit;
  Vector left_integral;
  std::optional<Matrix> antipode;

  std::size_t dim() const { return alg.dim(); }
};

/// Everything the derivation pipeline computes from (A, Δ, ε, φ).
struct DerivedData {
  Matrix antipode;
  Matrix antipode_inv;
  Vector right_integral;  // ψ = φ∘S
  Vector modular;         // δ
  Vector modular_inv;     // δ⁻¹
  Matrix sigma;
  Matrix sigma_inv;
  Matrix sigma_prime;
  Matrix sigma_prime_inv;
  Scalar scaling;         // τ with φ∘S² = τφ
  Matrix gram;            // φ(e_i e_j)
  Matrix right_gram;      // ψ(e_i e_j)
};

struct TypeFlags {
  bool compact = false;
  bool discrete = false;
  bool finite = false;
};

// --- raw checks, usable on unverified input -------------------------------

Vector comult_apply(const HypergroupData& h, const Vector& a);
Report verify_comultiplication(const HypergroupData& h);
Report verify_counit(const HypergroupData& h);
/// Affine spanning set of all ε' with (ι⊗ε')Δ = ι; one element iff unique.
std::vector<Vector> counit_space(const HypergroupData& h);
/// Basis of all invariant functionals on the given side.
std::vector<Vector> integral_space(const HypergroupData& h, Side side);
Matrix gram_matrix(const StructureAlgebra& alg, const Vector& f);
Report verify_faithful(const StructureAlgebra& alg, const Vector& f);
/// Basis of {h : a h = ε(a) h} (left) or {h : h a = ε(a) h} (right).
std::vector<Vector> cointegral_space(const HypergroupData& h, Side side);
bool coproduct_is_homomorphism(const HypergroupData& h);
/// Positivity of f via the Gram form f(e_i* e_j). Throws StarAbsent.
bool integral_positivity(const StructureAlgebra& alg, const Vector& f);

// --- derivation steps; each records its checks and throws ValidationError
// --- at the first failure.

Matrix derive_antipode(const HypergroupData& h, Report& report);
Vector derive_right_integral(const HypergroupData& h, const Matrix& antipode, Report& report);
/// Returns (δ, δ⁻¹).
std::pair<Vector, Vector> derive_modular_element(const HypergroupData& h, const Matrix& antipode,
                                                 const Vector& right_integral, Report& report);
Matrix derive_sigma(const HypergroupData& h, Report& report);
Matrix derive_sigma_prime(const HypergroupData& h, const Matrix& antipode, const Matrix& sigma,
                          const Vector& right_integral, Report& report);
Scalar derive_scaling_constant(const HypergroupData& h, const Matrix& antipode, Report& report);

// --- checks on fully derived data ------------------------------------------

Report verify_structural_relations(const HypergroupData& h, const DerivedData& d);
/// Requires a homomorphic Δ; records the two antipode-as-Hopf identities.
Report verify_hopf_conditions(const HypergroupData& h, const DerivedData& d);
Report verify_star_axioms(const HypergroupData& h, const DerivedData& d);
/// Throws ValidationError when φ vanishes on a left co-integral.
TypeFlags classify_type(const HypergroupData& h);

enum class Level { Axioms, Derived };

struct PipelineResult {
  Report report;
  std::optional<DerivedData> derived;  // set only when every step passed
  TypeFlags type;
  bool homomorphic = false;
};

/// Runs the fixed verification order (axioms, then S, ψ, δ, σ, σ', τ and the
/// relation suite). Never throws for invalid input; inspect the report.
PipelineResult run_pipeline(const HypergroupData& h, Level level = Level::Derived);

/// A verified algebraic quantum hypergroup with its derived data. Immutable.
class QuantumHypergroup {
 public:
  /// Runs the full pipeline; throws ValidationError naming the first failure.
  static QuantumHypergroup create(HypergroupData data);

  const HypergroupData& data() const { return data_; }
  const StructureAlgebra& alg() const { return data_.alg; }
  const Matrix& comult() const { return data_.comult; }
  const Vector& counit() const { return data_.counit; }
  const Vector& left_integral() const { return data_.left_integral; }
  const DerivedData& derived() const { return derived_; }
  const Report& report() const { return report_; }
  std::size_t dim() const { return data_.dim(); }
  const Vector& unit() const { return *data_.alg.find_unit(); }

  TypeFlags classify_type() const { return type_; }
  bool coproduct_is_homomorphism() const { return homomorphic_; }

 private:
  QuantumHypergroup(HypergroupData data, DerivedData derived, Report report, TypeFlags type, bool homomorphic)
      : data_(std::move(data)), derived_(std::move(derived)), report_(std::move(report)), type_(type),
        homomorphic_(homomorphic) {}

  HypergroupData data_;
  DerivedData derived_;
  Report report_;
  TypeFlags type_;
  bool homomorphic_ = false;
};

// Small helpers shared with the duality code.

/// (f⊗ι)T for every column T of `tensors` (n^2 x m) -> n x m.
Matrix slice_first(const Matrix& tensors, const Vector& f);
/// (ι⊗f)T for every column T of `tensors` (n^2 x m) -> n x m.
Matrix slice_second(const Matrix& tensors, const Vector& f);
/// m(Σ t_kl e_k⊗e_l) = Σ t_kl e_k e_l.
Vector multiply_out(const StructureAlgebra& alg, const Vector& t);
/// Outer product u fᵀ: the matrix of a -> f(a) u.
Matrix outer(const Vector& u, const Vector& f);

}  // namespace qhg
