// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "fixtures.hpp"

using namespace qhg;
using fx::q;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream why;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

bool proportional(const Vector& a, const Vector& b) { return rank(Matrix::from_columns({a, b}, a.size())) == 1; }

Scalar eval(const Vector& f, const Vector& a) { return dot(f, a); }

std::string first_failure(const Report& r) {
  const auto* f = r.first_failure();
  return f ? f->name + " (" + f->witness + ")" : "";
}

void criterion1(Outcome& o) {
  const FiniteGroup& g = fx::s3();
  const QuantumHypergroup h = fx::s3h12();
  o.require(h.dim() == 2, "dim");
  const Matrix oracle = fx::brute_comult(g, fx::s3_h12());
  o.require(h.comult() == oracle, "Δ differs from the group oracle");
  const Vector e0 = basis_vector(2, 0), e1 = basis_vector(2, 1);
  o.require(oracle * e0 == tensor(e0, e0) + q(1, 2) * tensor(e1, e1), "oracle Δ(e0)");
  o.require(oracle * e1 == tensor(e0, e1) + tensor(e1, e0) + q(1, 2) * tensor(e1, e1), "oracle Δ(e1)");
  const auto ints = integral_space(h.data(), Side::Left);
  o.require(ints.size() == 1, "integral space not one-dimensional");
  o.require(!ints.empty() && proportional(ints[0], fx::brute_coset_sizes(g, fx::s3_h12())), "φ vs coset sizes");
  o.require(proportional(h.left_integral(), Vector{q(2), q(4)}), "φ not proportional to (2,4)");
  const DerivedData& d = h.derived();
  o.require(d.antipode == Matrix::identity(2), "S");
  o.require(d.modular == h.unit(), "δ");
  o.require(d.sigma == Matrix::identity(2) && d.sigma_prime == Matrix::identity(2), "σ, σ′");
  o.require(d.scaling == q(1), "τ");
  const auto co = cointegral_space(h.data(), Side::Left);
  o.require(co.size() == 1 && proportional(co[0], e0), "co-integral");
  // Δ(e1 e1) vs Δ(e1)Δ(e1), straight from the oracle
  const Vector lhs = oracle * h.alg().multiply(e1, e1);
  const Vector rhs = h.alg().multiply_tensor(oracle * e1, oracle * e1);
  o.require(lhs != rhs, "oracle Δ is multiplicative");
  o.require(!h.coproduct_is_homomorphism(), "Δ reported homomorphic");
}

void criterion2(Outcome& o) {
  for (const auto& f : fx::fixtures()) {
    const PipelineResult r = run_pipeline(f.make().data());
    o.require(r.report.ok(), f.name + ": " + first_failure(r.report));
    o.require(r.derived.has_value(), f.name + ": no derived data");
    if (!r.derived) continue;
    const bool hopf = verify_hopf_conditions(f.make().data(), *r.derived).ok();
    o.require(hopf == r.homomorphic, f.name + ": Hopf identities disagree with Δ-homomorphism");
    if (f.star) o.require(r.report.find("star-antipode") != nullptr, f.name + ": star suite skipped");
  }
  const FiniteGroup& d4 = fx::d4();
  for (const auto& [g, h] : std::vector<std::pair<FiniteGroup, Subgroup>>{
           {fx::s3(), fx::s3_h12()},
           {fx::s3(), fx::s3_a3()},
           {d4, fx::d4_h2()},
           {d4, fx::members(d4, {"e", "(13)(24)"})},
           {d4, fx::members(d4, {"e", "(12)(34)"})}}) {
    const QuantumHypergroup hg = double_coset_hypergroup(g, h);
    o.require(is_normal(g, h) == hg.coproduct_is_homomorphism(), "normality vs Δ-homomorphism");
  }
}

void criterion3(Outcome& o) {
  for (const auto& f : fx::fixtures()) {
    const DualPackage p = build_dual(f.make());
    o.require(p.report.ok() && p.dual.report().ok(), f.name + ": dual suite " + first_failure(p.report));
    const Report formulas = check_product_formulas(p);
    o.require(formulas.ok(), f.name + ": " + first_failure(formulas));
    for (const char* name : {"product-left-phi-right", "product-left-phi-left", "product-right-psi-right",
                             "product-right-psi-left", "dual-comult-left-slice", "dual-comult-right-slice"})
      o.require(formulas.find(name) != nullptr, f.name + ": missing " + name);
  }
}

void criterion4(Outcome& o) {
  for (const auto& f : fx::fixtures()) {
    const DualPackage first = build_dual(f.make());
    const DualPackage second = build_dual(first.dual);
    const Report r = bidual_check(first, second);
    o.require(r.ok(), f.name + ": " + first_failure(r));
    for (const char* name : {"bidual-bijective", "bidual-multiplicative", "bidual-comult", "bidual-counit",
                             "bidual-antipode", "bidual-integral"})
      o.require(r.passed(name), f.name + ": " + name);
    // independent: φ̂̂(Γ(a)) = φ(a) on the basis
    const Matrix gamma = bidual_map(first, second);
    const Vector pulled = compose(second.dual.left_integral(), gamma);
    o.require(pulled == first.source.left_integral(), f.name + ": φ̂̂∘Γ ≠ φ");
  }
}

void criterion5(Outcome& o) {
  for (const auto& f : fx::fixtures()) {
    const DualPackage p = build_dual(f.make());
    const QuantumHypergroup& h = p.source;
    const DerivedData& d = h.derived();
    const auto& alg = h.alg();
    const std::size_t n = h.dim();
    const Matrix s2 = d.antipode * d.antipode;
    const Matrix s2_inv = d.antipode_inv * d.antipode_inv;
    o.require(as_functional(p, p.dual.derived().modular) == compose(h.counit(), d.sigma_inv), f.name + ": δ̂");
    for (std::size_t i = 0; i < n; ++i) {
      const Vector w = basis_vector(n, i);
      const Vector wf = as_functional(p, w);
      const Vector sig = as_functional(p, p.dual.derived().sigma * w);
      const Vector sigp = as_functional(p, p.dual.derived().sigma_prime * w);
      for (std::size_t j = 0; j < n; ++j) {
        const Vector x = basis_vector(n, j);
        o.require(sig[j] == eval(wf, alg.multiply(s2 * x, d.modular_inv)), f.name + ": σ̂");
        o.require(sigp[j] == eval(wf, alg.multiply(d.modular_inv, s2_inv * x)), f.name + ": σ̂′");
      }
    }
    o.require(comult_apply(h.data(), d.modular) == tensor(d.modular, d.modular), f.name + ": Δ(δ) ≠ δ⊗δ");
    const Report dd = dual_data_check(p);
    o.require(dd.ok(), f.name + ": " + first_failure(dd));
    const Report rad = radford_check(p);
    o.require(rad.ok() && rad.passed("radford-s4"), f.name + ": " + first_failure(rad));
    if (f.name == "Sweedler") o.require(s2 != Matrix::identity(n), "Sweedler S² = id");
  }
}

void criterion6(Outcome& o) {
  for (const auto& f : fx::fixtures()) {
    const DualPackage p = build_dual(f.make());
    const TypeFlags a = p.source.classify_type(), b = p.dual.classify_type();
    o.require(a.compact == b.discrete && a.discrete == b.compact, f.name + ": type flags");
    const Report r = compact_discrete_duality_check(p);
    o.require(r.ok(), f.name + ": " + first_failure(r));
    // φ, ψ as elements of Â are co-integrals: ω φ = ε̂(ω) φ, ψ ω = ε̂(ω) ψ
    const Vector phi = from_functional(p, p.source.left_integral());
    const Vector psi = from_functional(p, p.source.derived().right_integral);
    for (std::size_t i = 0; i < p.dual.dim(); ++i) {
      const Vector w = basis_vector(p.dual.dim(), i);
      o.require(p.dual.alg().multiply(w, phi) == p.dual.counit()[i] * phi, f.name + ": φ left co-integral");
      o.require(p.dual.alg().multiply(psi, w) == p.dual.counit()[i] * psi, f.name + ": ψ right co-integral");
    }
  }
}

// Θ(ω_i) = Σ_{p∈D_i} λ_p, written in the compression basis.
void compression_case(Outcome& o, const std::string& label, const FiniteGroup& g, const Subgroup& hsub) {
  const QuantumHypergroup dc = double_coset_hypergroup(g, hsub);
  const DualPackage p = build_dual(dc);
  const QuantumHypergroup cg = group_algebra_hopf(g);
  const Vector u = hecke_unit(cg, g, hsub);
  const QuantumHypergroup comp = group_like_projection_compression(cg, u);
  const Matrix basis = compression_basis(cg, u);
  const std::size_t n = dc.dim(), ng = g.order();
  const auto cosets = fx::brute_double_cosets(g, hsub);
  const auto order = fx::match_cosets(g, hsub, cosets);
  o.require(comp.dim() == n, label + ": dimensions");
  if (comp.dim() != n) return;

  std::vector<Vector> indicator;
  Matrix theta(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector ind(ng);
    for (auto x : cosets[order[i]]) ind[x] = Scalar(1);
    indicator.push_back(ind);
    const auto c = solve_linear(basis, ind);
    o.require(c.has_value(), label + ": indicator outside uCGu");
    if (!c) return;
    theta.set_column(i, *c);
  }
  const auto theta_inv = invert(theta);
  o.require(theta_inv.has_value(), label + ": Θ not bijective");
  if (!theta_inv) return;

  const auto& da = p.dual.alg();
  const auto& ca = comp.alg();
  for (std::size_t i = 0; i < n; ++i) {
    const Vector wi = basis_vector(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector wj = basis_vector(n, j);
      const Vector prod = da.multiply(wi, wj);
      o.require(theta * prod == ca.multiply(theta * wi, theta * wj), label + ": Θ not multiplicative");
      // brute convolution of coset indicators against the dual product
      const Vector conv = fx::group_convolution(g, indicator[i], indicator[j]);
      o.require(basis * (theta * prod) == conv, label + ": dual product ≠ convolution");
      // summation pairing: (ω_i ω_j)(a) = Σ_x conv(x) a(x) for coset-constant a
      for (std::size_t k = 0; k < n; ++k) {
        Scalar paired;
        for (auto x : cosets[order[k]]) paired += conv[x];
        o.require(eval(as_functional(p, prod), basis_vector(n, k)) == paired, label + ": summation pairing");
      }
    }
    o.require(kron(theta, theta) * comult_apply(p.dual.data(), wi) == comult_apply(comp.data(), theta * wi),
              label + ": Θ does not intertwine Δ");
  }
  o.require(compose(comp.counit(), theta) == p.dual.counit(), label + ": counit");
  o.require(theta * p.dual.derived().antipode == comp.derived().antipode * theta, label + ": antipode");
  o.require(theta * da.star_matrix() == ca.star_matrix() * theta.conj(), label + ": involution");
  o.require(proportional(compose(comp.left_integral(), theta), p.dual.left_integral()), label + ": integral");
}

void criterion7(Outcome& o) {
  compression_case(o, "S3/{e,(12)}", fx::s3(), fx::s3_h12());
  compression_case(o, "D4/{e,(24)}", fx::d4(), fx::d4_h2());
}

void criterion8(Outcome& o) {
  for (const auto& f : fx::fixtures()) {
    if (!f.star) continue;
    const DualPackage p = build_dual(f.make());
    const QuantumHypergroup& h = p.source;
    if (integral_positivity(h.alg(), h.derived().right_integral))
      o.require(integral_positivity(p.dual.alg(), p.dual.left_integral()), f.name + ": φ̂ not positive");
    else
      o.require(false, f.name + ": ψ not positive");
    o.require(h.alg().apply_star(h.derived().modular) == h.derived().modular, f.name + ": δ* ≠ δ");
    o.require(h.derived().scaling.norm() == 1, f.name + ": |τ| ≠ 1");
  }
}

struct Corruption {
  std::string what;
  HypergroupData data;
  std::vector<std::string> allowed_prefixes;
};

void criterion9(Outcome& o) {
  const HypergroupData base = fx::s3h12().data();
  const std::size_t n = base.dim();
  std::vector<Corruption> cases;
  for (std::size_t r = 0; r < n * n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      HypergroupData d = base;
      d.comult(r, c) += Scalar(1);
      cases.push_back({"Δ[" + std::to_string(r) + "," + std::to_string(c) + "]", d,
                       {"coassociativity", "counit-", "left-integral-", "antipode-", "unit-comult"}});
    }
  for (std::size_t i = 0; i < n; ++i) {
    HypergroupData d = base;
    d.counit[i] += Scalar(1);
    cases.push_back({"ε[" + std::to_string(i) + "]", d, {"counit-"}});
    d = base;
    d.left_integral[i] += Scalar(1);
    cases.push_back({"φ[" + std::to_string(i) + "]", d, {"left-integral-"}});
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      HypergroupData d = base;
      d.antipode = Matrix::identity(n);
      (*d.antipode)(r, c) += Scalar(1);
      cases.push_back({"S[" + std::to_string(r) + "," + std::to_string(c) + "]", d, {"antipode-matches-claimed"}});
    }
  for (const auto& c : cases) {
    const PipelineResult r = run_pipeline(c.data);
    const CheckRecord* fail = r.report.first_failure();
    o.require(fail != nullptr, c.what + ": not caught");
    if (!fail) continue;
    bool named = false;
    for (const auto& pre : c.allowed_prefixes) named = named || fail->name.rfind(pre, 0) == 0;
    o.require(named, c.what + ": unexpected first failure " + fail->name);
    o.require(!fail->anchor.empty() && !fail->witness.empty(), c.what + ": record lacks anchor or witness");
    o.require(r.report.checks().back().name == fail->name, c.what + ": pipeline continued past the failure");
    o.require(!r.derived.has_value(), c.what + ": derived data produced");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, void (*)(Outcome&)>> criteria{
      {"S3/{e,(12)} fixture matches the group oracle exactly", criterion1},
      {"full axiom and relation suite on all fixtures, Hopf and normality dichotomies", criterion2},
      {"duals pass the full suite, product and slice formulas hold", criterion3},
      {"biduality isomorphism with normalized integrals", criterion4},
      {"dual data closed forms, Δ(δ)=δ⊗δ, Radford S⁴", criterion5},
      {"compact/discrete type duality and co-integrals of the dual", criterion6},
      {"dual of double-coset hypergroup equals the Hecke compression", criterion7},
      {"involution and positivity: φ̂ positive, δ*=δ, |τ|=1", criterion8},
      {"single-entry corruptions of Δ, ε, φ, S are caught with witnesses", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << i + 1 << ": " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[i].first;
    std::cout << "  [" << std::fixed << std::setprecision(2) << secs << "s]";
    if (!o.ok) std::cout << "  (" << o.why.str() << ")";
    std::cout << '\n';
    failed += !o.ok;
  }
  return failed ? 1 : 0;
}
