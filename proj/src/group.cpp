#include "qhg/group.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qhg {

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw NotAGroup("nonempty", "");
  if (table_.size() != n) throw NotAGroup("closure", "table has " + idx(table_.size()) + " rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (table_[i].size() != n) throw NotAGroup("closure", "row " + idx(i) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j)
      if (table_[i][j] >= n) throw NotAGroup("closure", "entry (" + idx(i) + "," + idx(j) + ") out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw NotAGroup("associativity", "triple (" + idx(a) + "," + idx(b) + "," + idx(c) + ")");
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw NotAGroup("identity", "no two-sided identity");
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    if (inverse_[a] == n) throw NotAGroup("inverse", "element " + idx(a) + " (" + labels_[a] + ")");
  }
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != n) throw NotAGroup("labels", "duplicate element label");
}

std::size_t FiniteGroup::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw SchemaError("unknown group element '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

FiniteGroup group_from_table(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table) {
  return FiniteGroup(std::move(labels), std::move(table));
}

std::string cycle_notation(const Permutation& p) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (done[s] || p[s] == s) continue;
    out += '(';
    for (std::size_t x = s; !done[x]; x = p[x]) {
      done[x] = true;
      out += std::to_string(x + 1);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

FiniteGroup permutation_group(std::size_t degree, const std::vector<Permutation>& generators) {
  Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = i;
  auto compose = [&](const Permutation& p, const Permutation& q) {
    Permutation r(degree);
    for (std::size_t x = 0; x < degree; ++x) r[x] = p[q[x]];
    return r;
  };
  for (const auto& g : generators)
    if (g.size() != degree) throw NotAGroup("closure", "generator of wrong degree");
  std::set<Permutation> elems{id};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier)
      for (const auto& g : generators) {
        Permutation q = compose(p, g);
        if (elems.insert(q).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  std::vector<Permutation> list(elems.begin(), elems.end());
  std::map<Permutation, std::size_t> index;
  for (std::size_t i = 0; i < list.size(); ++i) index[list[i]] = i;
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table(list.size(), std::vector<std::size_t>(list.size()));
  for (std::size_t i = 0; i < list.size(); ++i) {
    labels.push_back(cycle_notation(list[i]));
    for (std::size_t j = 0; j < list.size(); ++j) table[i][j] = index.at(compose(list[i], list[j]));
  }
  return FiniteGroup(std::move(labels), std::move(table));
}

FiniteGroup symmetric_group(std::size_t degree) {
  std::vector<Permutation> gens;
  for (std::size_t k = 0; k + 1 < degree; ++k) {
    Permutation t(degree);
    for (std::size_t i = 0; i < degree; ++i) t[i] = i;
    std::swap(t[k], t[k + 1]);
    gens.push_back(t);
  }
  return permutation_group(degree, gens);
}

FiniteGroup dihedral_group_d4() { return permutation_group(4, {{1, 2, 3, 0}, {0, 3, 2, 1}}); }

FiniteGroup cyclic_group(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(i == 0 ? "e" : "g" + (i == 1 ? std::string() : "^" + std::to_string(i)));
    for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return FiniteGroup(std::move(labels), std::move(table));
}

bool subgroup_check(const FiniteGroup& g, const std::vector<std::size_t>& members) {
  if (members.empty()) return false;
  std::set<std::size_t> s(members.begin(), members.end());
  for (std::size_t a : s)
    if (a >= g.order()) return false;
  if (!s.count(g.identity())) return false;
  for (std::size_t a : s) {
    if (!s.count(g.inverse(a))) return false;
    for (std::size_t b : s)
      if (!s.count(g.mul(a, b))) return false;
  }
  return true;
}

Subgroup require_subgroup(const FiniteGroup& g, std::vector<std::size_t> members) {
  if (!subgroup_check(g, members)) throw NotASubgroup("subset is not a subgroup (closure, identity or inverses)");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  std::set<std::size_t> s(h.begin(), h.end());
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t a : h)
      if (!s.count(g.mul(g.mul(x, a), g.inverse(x)))) return false;
  return true;
}

std::vector<std::vector<std::size_t>> double_cosets(const FiniteGroup& g, const Subgroup& h) {
  std::vector<int> owner(g.order(), -1);
  std::vector<std::vector<std::size_t>> out;
  auto add = [&](std::size_t x) {
    std::set<std::size_t> coset;
    for (std::size_t a : h)
      for (std::size_t b : h) coset.insert(g.mul(g.mul(a, x), b));
    for (std::size_t y : coset) owner[y] = static_cast<int>(out.size());
    out.emplace_back(coset.begin(), coset.end());
  };
  add(g.identity());
  for (std::size_t x = 0; x < g.order(); ++x)
    if (owner[x] < 0) add(x);
  return out;
}

}  // namespace qhg
