#ifndef BOOLSYM_TESTS_CATALOG_HPP
#define BOOLSYM_TESTS_CATALOG_HPP

// Small regular groups, their direct sums, and every subgroup of a given
// group. Used to sweep the classifier against brute-force oracles.

#include <map>
#include <string>
#include <vector>

#include "boolsym/group.hpp"
#include "boolsym/sum_expression.hpp"

namespace boolsym::catalog {

/// Left-multiplication action of g on its own elements.
inline PermutationGroup regular_representation(const PermutationGroup& g) {
  const auto& el = g.elements();
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    std::vector<Point> images(el.size());
    for (std::size_t j = 0; j < el.size(); ++j) {
      images[j] = static_cast<Point>(g.index_of(compose(s, el[j])));
    }
    gens.emplace_back(std::move(images));
  }
  return PermutationGroup(el.size(), std::move(gens));
}

struct NamedGroup {
  std::string name;
  PermutationGroup group;
};

/// Every regular group of degree 2..8 up to permutation isomorphism.
inline std::vector<NamedGroup> regular_groups(std::size_t max_degree) {
  std::vector<NamedGroup> all = {
      {"C2", cyclic_group(2)},
      {"C3", cyclic_group(3)},
      {"C4", cyclic_group(4)},
      {"K4", klein_group()},
      {"C5", cyclic_group(5)},
      {"C6", cyclic_group(6)},
      {"S3", regular_representation(symmetric_group(3))},
      {"C7", cyclic_group(7)},
      {"C8", cyclic_group(8)},
      {"C4xC2", regular_representation(direct_sum(cyclic_group(4), cyclic_group(2)))},
      {"C2^3", regular_representation(
                   direct_sum(std::vector{cyclic_group(2), cyclic_group(2), cyclic_group(2)}))},
      {"D4", regular_representation(dihedral_group(4))},
      {"Q8", regular_representation(
                 group_from_cycles(8, {"(1 2 4 7)(3 6 8 5)", "(1 3 4 8)(2 5 7 6)"}))},
  };
  std::vector<NamedGroup> out;
  for (auto& g : all) {
    if (g.group.degree() <= max_degree) out.push_back(std::move(g));
  }
  return out;
}

/// Direct sums of regular groups of total degree lo..hi, each multiset of
/// summands once.
inline std::vector<std::vector<NamedGroup>> regular_sums(std::size_t lo, std::size_t hi) {
  const auto leaves = regular_groups(hi);
  std::vector<std::vector<NamedGroup>> out;
  std::vector<NamedGroup> cur;
  auto rec = [&](auto&& self, std::size_t start, std::size_t degree) -> void {
    if (degree >= lo && !cur.empty()) out.push_back(cur);
    for (std::size_t j = start; j < leaves.size(); ++j) {
      if (degree + leaves[j].group.degree() > hi) continue;
      cur.push_back(leaves[j]);
      self(self, j, degree + leaves[j].group.degree());
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

inline std::string sum_name(const std::vector<NamedGroup>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "+") + p.name;
  return out;
}

inline SumExpression sum_expression(const std::vector<NamedGroup>& parts) {
  std::vector<PermutationGroup> groups;
  for (const auto& p : parts) groups.push_back(p.group);
  return SumExpression::direct(groups);
}

/// All subgroups, as joins of cyclic subgroups.
inline std::vector<PermutationGroup> all_subgroups(const PermutationGroup& g) {
  std::map<std::vector<Permutation>, PermutationGroup> found;
  std::vector<Permutation> cyclic_gens;
  std::vector<PermutationGroup> frontier;
  for (const auto& s : g.elements()) {
    PermutationGroup c(g.degree(), {s});
    if (found.emplace(c.elements(), c).second) {
      cyclic_gens.push_back(s);
      frontier.push_back(c);
    }
  }
  while (!frontier.empty()) {
    std::vector<PermutationGroup> next;
    for (const auto& h : frontier) {
      for (const auto& s : cyclic_gens) {
        if (h.contains(s)) continue;
        auto gens = h.generators();
        gens.push_back(s);
        PermutationGroup j(g.degree(), std::move(gens));
        if (found.emplace(j.elements(), j).second) next.push_back(j);
      }
    }
    frontier = std::move(next);
  }
  std::vector<PermutationGroup> out;
  for (auto& [key, h] : found) out.push_back(std::move(h));
  return out;
}

}  // namespace boolsym::catalog

#endif  // BOOLSYM_TESTS_CATALOG_HPP
