#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qhg/constructions.hpp"
#include "qhg/duality.hpp"

namespace fx {

using namespace qhg;

inline Scalar q(long n, long d = 1) { return Scalar(n, d); }

inline Vector vec(std::initializer_list<Scalar> xs) { return Vector(xs); }

inline Subgroup members(const FiniteGroup& g, std::initializer_list<const char*> labels) {
  Subgroup out;
  for (const char* l : labels) out.push_back(g.index_of(l));
  std::sort(out.begin(), out.end());
  return out;
}

inline const FiniteGroup& s3() {
  static const FiniteGroup g = symmetric_group(3);
  return g;
}
inline const FiniteGroup& d4() {
  static const FiniteGroup g = dihedral_group_d4();
  return g;
}
inline Subgroup s3_h12() { return members(s3(), {"e", "(12)"}); }
inline Subgroup s3_a3() { return members(s3(), {"e", "(123)", "(132)"}); }
inline Subgroup d4_h2() { return members(d4(), {"e", "(24)"}); }

struct Fixture {
  std::string name;
  std::function<QuantumHypergroup()> make;
  bool star = true;
};

inline QuantumHypergroup s3h12() { return double_coset_hypergroup(s3(), s3_h12()); }

inline QuantumHypergroup hecke_compression(const FiniteGroup& g, const Subgroup& h) {
  const QuantumHypergroup b = group_algebra_hopf(g);
  return group_like_projection_compression(b, hecke_unit(b, g, h));
}

inline std::vector<Fixture> fixtures() {
  return {
      {"S3/{e,(12)}", [] { return s3h12(); }},
      {"S3/A3", [] { return double_coset_hypergroup(s3(), s3_a3()); }},
      {"D4/{e,(24)}", [] { return double_coset_hypergroup(d4(), d4_h2()); }},
      {"K(Z2)", [] { return function_algebra(cyclic_group(2)); }},
      {"CS3", [] { return group_algebra_hopf(s3()); }},
      {"Sweedler", [] { return sweedler_fixture(); }, false},
      {"u CS3 u", [] { return hecke_compression(s3(), s3_h12()); }},
  };
}

// --- brute-force group-level oracles ----------------------------------------

/// Double cosets computed directly as sets {h p k}.
inline std::vector<std::set<std::size_t>> brute_double_cosets(const FiniteGroup& g, const Subgroup& h) {
  std::vector<std::set<std::size_t>> out;
  std::vector<bool> seen(g.order(), false);
  for (std::size_t p = 0; p < g.order(); ++p) {
    if (seen[p]) continue;
    std::set<std::size_t> c;
    for (auto a : h)
      for (auto b : h) c.insert(g.mul(g.mul(a, p), b));
    for (auto x : c) seen[x] = true;
    out.push_back(c);
  }
  return out;
}

/// Index of the brute coset that equals the library's i-th basis element.
inline std::vector<std::size_t> match_cosets(const FiniteGroup& g, const Subgroup& h,
                                             const std::vector<std::set<std::size_t>>& brute) {
  std::vector<std::size_t> out;
  for (const auto& lib : double_cosets(g, h)) {
    const std::set<std::size_t> s(lib.begin(), lib.end());
    out.push_back(static_cast<std::size_t>(std::find(brute.begin(), brute.end(), s) - brute.begin()));
  }
  return out;
}

/// Δ(f)(p,q) = (1/|H|) Σ_h f(phq) evaluated at representatives, in the library basis order.
inline Matrix brute_comult(const FiniteGroup& g, const Subgroup& h) {
  const auto brute = brute_double_cosets(g, h);
  const auto order = match_cosets(g, h, brute);
  const std::size_t n = brute.size();
  Matrix m(n * n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& dk = brute[order[k]];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t p = *brute[order[i]].begin();
        const std::size_t r = *brute[order[j]].begin();
        long count = 0;
        for (auto x : h) count += dk.count(g.mul(g.mul(p, x), r));
        m(i * n + j, k) = Scalar(count, static_cast<long>(h.size()));
      }
  }
  return m;
}

/// Sizes |D_i| in library order; φ(f) = Σ_p f(p) on indicators.
inline Vector brute_coset_sizes(const FiniteGroup& g, const Subgroup& h) {
  const auto brute = brute_double_cosets(g, h);
  Vector out;
  for (auto k : match_cosets(g, h, brute)) out.push_back(Scalar(static_cast<long>(brute[k].size())));
  return out;
}

/// (f * k)(x) = Σ_y f(y) k(y⁻¹x) for functions on G given by value lists.
inline Vector group_convolution(const FiniteGroup& g, const Vector& f, const Vector& k) {
  Vector out(g.order());
  for (std::size_t y = 0; y < g.order(); ++y)
    for (std::size_t z = 0; z < g.order(); ++z) out[g.mul(y, z)] += f[y] * k[z];
  return out;
}

// --- random elements --------------------------------------------------------

inline Vector random_vector(std::mt19937& rng, std::size_t n, bool complex = false) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  Vector v;
  for (std::size_t i = 0; i < n; ++i) {
    Scalar s(num(rng), den(rng));
    if (complex) s += Scalar(num(rng), den(rng)) * Scalar::i();
    v.push_back(s);
  }
  return v;
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, bool complex = false) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < r; ++i) rows.push_back(random_vector(rng, c, complex));
  return Matrix::from_rows(rows, c);
}

}  // namespace fx
