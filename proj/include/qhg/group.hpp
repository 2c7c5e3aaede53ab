#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qhg/errors.hpp"

namespace qhg {

class NotAGroup : public Error {
 public:
  NotAGroup(std::string axiom, std::string witness)
      : Error("not a group: " + axiom + (witness.empty() ? "" : " (" + witness + ")")),
        axiom_(std::move(axiom)), witness_(std::move(witness)) {}
  const std::string& axiom() const { return axiom_; }
  const std::string& witness() const { return witness_; }

 private:
  std::string axiom_;
  std::string witness_;
};

class NotASubgroup : public Error {
 public:
  using Error::Error;
};

/// Finite group given by its Cayley table: table[i][j] is the index of
/// (element i)(element j).
class FiniteGroup {
 public:
  /// Validates closure, associativity, identity and inverses. Throws NotAGroup.
  FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table);

  std::size_t order() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t identity() const { return identity_; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  /// Throws SchemaError for an unknown label.
  std::size_t index_of(const std::string& label) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

FiniteGroup group_from_table(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table);

/// A permutation of {0..n-1}, p[x] = image of x.
using Permutation = std::vector<std::size_t>;

/// Closure of the generators under composition, (pq)(x) = p(q(x)). Elements
/// are sorted lexicographically by image list (identity first) and labelled
/// in cycle notation on the points 1..n.
FiniteGroup permutation_group(std::size_t degree, const std::vector<Permutation>& generators);
FiniteGroup symmetric_group(std::size_t degree);
/// Symmetries of the square acting on its vertices 1..4, generated by the
/// rotation (1234) and the reflection (24).
FiniteGroup dihedral_group_d4();
FiniteGroup cyclic_group(std::size_t n);

std::string cycle_notation(const Permutation& p);

/// Sorted, deduplicated member indices.
using Subgroup = std::vector<std::size_t>;

bool subgroup_check(const FiniteGroup& g, const std::vector<std::size_t>& members);
/// Returns the sorted subgroup or throws NotASubgroup.
Subgroup require_subgroup(const FiniteGroup& g, std::vector<std::size_t> members);
bool is_normal(const FiniteGroup& g, const Subgroup& h);
/// Partition of G into the sets HgH. The coset containing the identity comes
/// first, the rest are ordered by their smallest member; members are sorted.
std::vector<std::vector<std::size_t>> double_cosets(const FiniteGroup& g, const Subgroup& h);

}  // namespace qhg
