#ifndef BOOLSYM_QUOTIENT_HPP
#define BOOLSYM_QUOTIENT_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

#include "boolsym/error.hpp"
#include "boolsym/group.hpp"

namespace boolsym {

/// parent / kernel with cosets ordered by their smallest element, so coset 0
/// is the kernel itself.
struct QuotientGroup {
  PermutationGroup parent;
  PermutationGroup kernel;
  std::vector<std::vector<std::size_t>> cosets;  // indices into parent.elements()
  std::vector<std::size_t> coset_of;             // per parent element
  std::vector<std::vector<std::size_t>> table;   // table[a][b] = coset of rep(a) * rep(b)

  std::size_t order() const noexcept { return cosets.size(); }
  const Permutation& representative(std::size_t coset) const {
    return parent.elements()[cosets[coset].front()];
  }
  std::size_t coset_of_element(const Permutation& s) const { return coset_of[parent.index_of(s)]; }
};

/// A bijection between coset indices preserving the multiplication tables.
struct QuotientIso {
  std::vector<std::size_t> mapping;

  friend bool operator==(const QuotientIso&, const QuotientIso&) = default;
};

inline bool is_normal_subgroup(const PermutationGroup& n, const PermutationGroup& g) {
  if (!n.is_subgroup_of(g)) return false;
  for (const auto& s : g.generators()) {
    const Permutation inv = s.inverse();
    for (const auto& k : n.generators()) {
      if (!n.contains(compose(compose(s, k), inv))) return false;
    }
  }
  return true;
}

inline QuotientGroup quotient(const PermutationGroup& g, const PermutationGroup& n) {
  if (n.degree() != g.degree() || !n.is_subgroup_of(g)) {
    throw NotSubgroup("quotient: kernel is not a subgroup of the parent");
  }
  if (!is_normal_subgroup(n, g)) throw NotNormal("quotient: kernel is not normal");
  QuotientGroup q{g, n, {}, {}, {}};
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  q.coset_of.assign(g.order(), kUnset);
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (q.coset_of[i] != kUnset) continue;
    std::vector<std::size_t> coset;
    for (const auto& k : n.elements()) {
      const std::size_t j = g.index_of(compose(g.elements()[i], k));
      q.coset_of[j] = q.cosets.size();
      coset.push_back(j);
    }
    std::sort(coset.begin(), coset.end());
    q.cosets.push_back(std::move(coset));
  }
  const std::size_t m = q.cosets.size();
  q.table.assign(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      q.table[a][b] = q.coset_of_element(compose(q.representative(a), q.representative(b)));
    }
  }
  return q;
}

namespace detail {

inline std::size_t table_element_order(const std::vector<std::vector<std::size_t>>& table,
                                       std::size_t x) {
  std::size_t k = 1;
  for (std::size_t y = x; y != 0; y = table[y][x]) ++k;
  return x == 0 ? 1 : k;
}

inline bool preserves_tables(const QuotientGroup& a, const QuotientGroup& b,
                             const std::vector<std::size_t>& map) {
  const std::size_t m = a.order();
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (b.table[map[x]][map[y]] != map[a.table[x][y]]) return false;
    }
  }
  return true;
}

}  // namespace detail

inline bool is_valid_iso(const QuotientGroup& a, const QuotientGroup& b, const QuotientIso& iso) {
  if (a.order() != b.order() || iso.mapping.size() != a.order()) return false;
  std::vector<bool> hit(b.order(), false);
  for (std::size_t v : iso.mapping) {
    if (v >= b.order() || hit[v]) return false;
    hit[v] = true;
  }
  return detail::preserves_tables(a, b, iso.mapping);
}

/// All isomorphisms a -> b, sorted lexicographically by mapping.
inline std::vector<QuotientIso> quotient_isomorphisms(const QuotientGroup& a,
                                                      const QuotientGroup& b) {
  std::vector<QuotientIso> out;
  if (a.order() != b.order()) return out;
  const std::size_t m = a.order();

  // Greedy generating set of a's table.
  std::vector<std::size_t> gens;
  std::vector<bool> reached(m, false);
  reached[0] = true;
  std::size_t reached_count = 1;
  for (std::size_t x = 1; x < m && reached_count < m; ++x) {
    if (reached[x]) continue;
    gens.push_back(x);
    std::vector<std::size_t> frontier;
    for (std::size_t y = 0; y < m; ++y) {
      if (reached[y]) frontier.push_back(y);
    }
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (std::size_t y : frontier) {
        for (std::size_t g : gens) {
          const std::size_t z = a.table[y][g];
          if (!reached[z]) {
            reached[z] = true;
            ++reached_count;
            next.push_back(z);
          }
        }
      }
      frontier = std::move(next);
    }
  }

  std::vector<std::size_t> images(gens.size());
  std::function<void(std::size_t)> assign = [&](std::size_t level) {
    if (level == gens.size()) {
      constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
      std::vector<std::size_t> map(m, kUnset);
      map[0] = 0;
      std::vector<std::size_t> queue{0};
      for (std::size_t k = 0; k < queue.size(); ++k) {
        const std::size_t x = queue[k];
        for (std::size_t j = 0; j < gens.size(); ++j) {
          const std::size_t y = a.table[x][gens[j]];
          const std::size_t fy = b.table[map[x]][images[j]];
          if (map[y] == kUnset) {
            map[y] = fy;
            queue.push_back(y);
          } else if (map[y] != fy) {
            return;
          }
        }
      }
      QuotientIso iso{std::move(map)};
      if (is_valid_iso(a, b, iso)) out.push_back(std::move(iso));
      return;
    }
    const std::size_t want = detail::table_element_order(a.table, gens[level]);
    for (std::size_t c = 0; c < m; ++c) {
      if (detail::table_element_order(b.table, c) != want) continue;
      images[level] = c;
      assign(level + 1);
    }
  };
  assign(0);
  std::sort(out.begin(), out.end(),
            [](const QuotientIso& x, const QuotientIso& y) { return x.mapping < y.mapping; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// G1/N1 (+)_phi G2/N2: all (s, t) in G1 (+) G2 with phi(s N1) = t N2.
inline PermutationGroup subdirect_sum(const QuotientGroup& a, const QuotientGroup& b,
                                      const QuotientIso& iso) {
  if (!is_valid_iso(a, b, iso)) throw InvalidIsomorphism("subdirect_sum: invalid isomorphism");
  std::vector<Permutation> elements;
  elements.reserve(a.parent.order() * b.kernel.order());
  for (std::size_t i = 0; i < a.parent.order(); ++i) {
    const std::size_t target = iso.mapping[a.coset_of[i]];
    for (std::size_t j : b.cosets[target]) {
      elements.push_back(join_disjoint(a.parent.elements()[i], b.parent.elements()[j]));
    }
  }
  return PermutationGroup::from_elements(a.parent.degree() + b.parent.degree(),
                                         std::move(elements));
}

inline PermutationGroup subdirect_sum(const PermutationGroup& g1, const PermutationGroup& n1,
                                      const PermutationGroup& g2, const PermutationGroup& n2,
                                      const QuotientIso& iso) {
  return subdirect_sum(quotient(g1, n1), quotient(g2, n2), iso);
}

}  // namespace boolsym

#endif  // BOOLSYM_QUOTIENT_HPP
