#ifndef BOOLSYM_GROUP_HPP
#define BOOLSYM_GROUP_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "boolsym/error.hpp"
#include "boolsym/permutation.hpp"

namespace boolsym {

inline constexpr std::uint64_t kDefaultOrderCap = 1'000'000;

/// A finite permutation group held as its full, lexicographically sorted
/// element list. Immutable once built.
class PermutationGroup {
 public:
  /// Closure of the generators under composition. Every generator must have
  /// the given degree.
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                   std::uint64_t order_cap = kDefaultOrderCap)
      : degree_(degree) {
    for (const auto& g : generators) {
      if (g.degree() != degree) throw DegreeMismatch("generator degree differs from group degree");
    }
    std::unordered_set<Permutation, PermutationHash> seen;
    std::deque<Permutation> queue;
    auto id = Permutation::identity(degree);
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
      Permutation cur = std::move(queue.front());
      queue.pop_front();
      for (const auto& g : generators) {
        Permutation next = compose(g, cur);
        if (seen.insert(next).second) {
          if (seen.size() > order_cap) {
            throw OrderCapExceeded("group order exceeds cap of " + std::to_string(order_cap));
          }
          queue.push_back(std::move(next));
        }
      }
    }
    elements_.assign(seen.begin(), seen.end());
    std::sort(elements_.begin(), elements_.end());
    generators_ = std::move(generators);
    std::erase_if(generators_, [](const Permutation& p) { return p.is_identity(); });
  }

  /// Wraps an element list already known to be a group. Sorted and
  /// deduplicated here; closure is not re-checked.
  static PermutationGroup from_elements(std::size_t degree, std::vector<Permutation> elements,
                                        std::vector<Permutation> generators = {}) {
    PermutationGroup g;
    g.degree_ = degree;
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    g.elements_ = std::move(elements);
    if (generators.empty()) {
      g.generators_ = greedy_generators(degree, g.elements_);
    } else {
      g.generators_ = std::move(generators);
    }
    return g;
  }

  std::size_t degree() const noexcept { return degree_; }
  std::uint64_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }

  bool contains(const Permutation& p) const {
    return p.degree() == degree_ && std::binary_search(elements_.begin(), elements_.end(), p);
  }

  std::size_t index_of(const Permutation& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || *it != p) throw NotSubgroup("element not in group");
    return static_cast<std::size_t>(it - elements_.begin());
  }

  bool is_subgroup_of(const PermutationGroup& other) const {
    if (degree_ != other.degree_) return false;
    return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                         elements_.end());
  }

  /// Greedy minimal generating sequence: scan elements in lexicographic order
  /// and keep each one not already generated by the ones kept.
  std::vector<Permutation> minimal_generators() const {
    return greedy_generators(degree_, elements_);
  }

  friend bool operator==(const PermutationGroup& a, const PermutationGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

 private:
  PermutationGroup() = default;

  static std::vector<Permutation> greedy_generators(std::size_t degree,
                                                    const std::vector<Permutation>& elements) {
    std::vector<Permutation> gens;
    std::unordered_set<Permutation, PermutationHash> span{Permutation::identity(degree)};
    for (const auto& e : elements) {
      if (span.size() == elements.size()) break;
      if (span.contains(e)) continue;
      gens.push_back(e);
      std::vector<Permutation> frontier(span.begin(), span.end());
      while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& x : frontier) {
          for (const auto& g : gens) {
            Permutation y = compose(g, x);
            if (span.insert(y).second) next.push_back(std::move(y));
          }
        }
        frontier = std::move(next);
      }
    }
    return gens;
  }

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

inline PermutationGroup generate(std::size_t degree, std::vector<Permutation> gens,
                                 std::uint64_t order_cap = kDefaultOrderCap) {
  if (order_cap < 1) throw PreconditionViolation("order cap must be at least 1");
  return PermutationGroup(degree, std::move(gens), order_cap);
}

/// Parses each generator from cycle notation.
inline PermutationGroup group_from_cycles(std::size_t degree,
                                          std::initializer_list<std::string_view> cycles,
                                          std::uint64_t order_cap = kDefaultOrderCap) {
  std::vector<Permutation> gens;
  for (auto c : cycles) gens.push_back(Permutation::parse(c, degree));
  return PermutationGroup(degree, std::move(gens), order_cap);
}

// ---------------------------------------------------------------------------
// Named families

inline PermutationGroup trivial_group(std::size_t n) { return PermutationGroup(n, {}); }

/// C_n generated by (1 2 ... n).
inline PermutationGroup cyclic_group(std::size_t n) {
  if (n < 2) return trivial_group(n);
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>((i + 1) % n);
  return PermutationGroup(n, {Permutation(std::move(images))});
}

/// D_n as the symmetries of an n-gon labelled 1..n in order.
inline PermutationGroup dihedral_group(std::size_t n) {
  if (n < 3) return PermutationGroup(n, n == 2 ? std::vector{Permutation::parse("(1 2)", 2)}
                                              : std::vector<Permutation>{});
  std::vector<Point> rot(n), ref(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    ref[i] = static_cast<Point>((n - i) % n);
  }
  return PermutationGroup(n, {Permutation(std::move(rot)), Permutation(std::move(ref))});
}

inline PermutationGroup symmetric_group(std::size_t n,
                                        std::uint64_t order_cap = kDefaultOrderCap) {
  if (n < 2) return trivial_group(n);
  std::vector<Point> cyc(n);
  for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<Point>((i + 1) % n);
  return PermutationGroup(n, {Permutation::parse("(1 2)", n), Permutation(std::move(cyc))},
                          order_cap);
}

/// K_4 = {1, (1 2)(3 4), (1 3)(2 4), (1 4)(2 3)}.
inline PermutationGroup klein_group() { return group_from_cycles(4, {"(1 2)(3 4)", "(1 3)(2 4)"}); }

// ---------------------------------------------------------------------------
// Sums

/// G + H acting independently on {1..n} and {n+1..n+m}.
inline PermutationGroup direct_sum(const PermutationGroup& g, const PermutationGroup& h,
                                   std::uint64_t order_cap = kDefaultOrderCap) {
  if (g.order() * h.order() > order_cap) {
    throw OrderCapExceeded("direct sum order exceeds cap");
  }
  const std::size_t n = g.degree() + h.degree();
  std::vector<Permutation> elements;
  elements.reserve(g.order() * h.order());
  for (const auto& s : g.elements()) {
    for (const auto& t : h.elements()) elements.push_back(join_disjoint(s, t));
  }
  std::vector<Permutation> gens;
  const auto idg = Permutation::identity(g.degree());
  const auto idh = Permutation::identity(h.degree());
  for (const auto& s : g.generators()) gens.push_back(join_disjoint(s, idh));
  for (const auto& t : h.generators()) gens.push_back(join_disjoint(idg, t));
  return PermutationGroup::from_elements(n, std::move(elements), std::move(gens));
}

inline PermutationGroup direct_sum(std::span<const PermutationGroup> parts,
                                   std::uint64_t order_cap = kDefaultOrderCap) {
  PermutationGroup acc = trivial_group(0);
  for (const auto& p : parts) acc = direct_sum(acc, p, order_cap);
  return acc;
}

/// G^(2): every element acting simultaneously on two copies of the base set.
inline PermutationGroup parallel_sum(const PermutationGroup& g) {
  std::vector<Permutation> elements;
  elements.reserve(g.order());
  for (const auto& s : g.elements()) elements.push_back(join_disjoint(s, s));
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) gens.push_back(join_disjoint(s, s));
  return PermutationGroup::from_elements(2 * g.degree(), std::move(elements), std::move(gens));
}

// ---------------------------------------------------------------------------
// Restriction and relabelling

/// Restriction of every element to a union of orbits, relabelled so that
/// points[i] becomes point i. The points must form a G-invariant set.
inline PermutationGroup restrict_to(const PermutationGroup& g, std::span<const Point> points) {
  std::vector<int> local(g.degree(), -1);
  for (std::size_t i = 0; i < points.size(); ++i) local[points[i]] = static_cast<int>(i);
  std::vector<Permutation> elements;
  elements.reserve(g.order());
  for (const auto& s : g.elements()) {
    std::vector<Point> images(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      const int j = local[s(points[i])];
      if (j < 0) throw PreconditionViolation("restriction to a set that is not invariant");
      images[i] = static_cast<Point>(j);
    }
    elements.emplace_back(std::move(images));
  }
  return PermutationGroup::from_elements(points.size(), std::move(elements));
}

/// Conjugates by a relabelling: point p is renamed to relabel(p).
inline Permutation relabel(const Permutation& s, const Permutation& relabelling) {
  std::vector<Point> images(s.degree());
  for (std::size_t p = 0; p < s.degree(); ++p) images[relabelling(p)] = relabelling(s(p));
  return Permutation(std::move(images));
}

inline PermutationGroup relabel(const PermutationGroup& g, const Permutation& relabelling) {
  if (relabelling.degree() != g.degree()) throw DegreeMismatch("relabel: degree mismatch");
  std::vector<Permutation> elements;
  elements.reserve(g.order());
  for (const auto& s : g.elements()) elements.push_back(relabel(s, relabelling));
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) gens.push_back(relabel(s, relabelling));
  return PermutationGroup::from_elements(g.degree(), std::move(elements), std::move(gens));
}

/// Points moved by at least one element, in increasing order.
inline std::vector<Point> support(const PermutationGroup& g) {
  std::vector<bool> moved(g.degree(), false);
  for (const auto& s : g.generators()) {
    for (std::size_t p = 0; p < g.degree(); ++p) {
      if (s(p) != p) moved[p] = true;
    }
  }
  std::vector<Point> out;
  for (std::size_t p = 0; p < g.degree(); ++p) {
    if (moved[p]) out.push_back(static_cast<Point>(p));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Point orbits and structure

inline std::vector<std::vector<Point>> point_orbits(const PermutationGroup& g) {
  std::vector<int> orbit_of(g.degree(), -1);
  std::vector<std::vector<Point>> orbits;
  for (std::size_t s = 0; s < g.degree(); ++s) {
    if (orbit_of[s] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    std::vector<Point> orbit{static_cast<Point>(s)};
    orbit_of[s] = id;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const auto& gen : g.generators()) {
        const Point q = gen(orbit[k]);
        if (orbit_of[q] < 0) {
          orbit_of[q] = id;
          orbit.push_back(q);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

struct StructureReport {
  bool transitive = false;
  bool regular = false;
  bool semiregular = false;
};

inline StructureReport structure_tests(const PermutationGroup& g) {
  StructureReport r;
  r.transitive = g.degree() > 0 && point_orbits(g).size() == 1;
  r.semiregular = true;
  for (const auto& s : g.elements()) {
    if (s.is_identity()) continue;
    for (std::size_t p = 0; p < g.degree(); ++p) {
      if (s(p) == p) {
        r.semiregular = false;
        break;
      }
    }
    if (!r.semiregular) break;
  }
  r.regular = r.transitive && g.order() == g.degree();
  return r;
}

inline std::vector<std::size_t> cycle_type(const Permutation& s) { return s.cycle_type(); }

/// Characteristic vector of the smallest point of every point orbit.
inline BitVector selector(const PermutationGroup& g) {
  const int n = static_cast<int>(g.degree());
  Mask bits = 0;
  for (const auto& orbit : point_orbits(g)) bits |= point_bit(n, orbit.front());
  return BitVector(n, bits);
}

/// True iff the identity is the only element fixing the set setwise.
inline bool regular_set_check(const BitVector& set, const PermutationGroup& g) {
  if (static_cast<std::size_t>(set.length()) != g.degree()) {
    throw DegreeMismatch("regular_set_check: degree mismatch");
  }
  for (const auto& s : g.elements()) {
    if (!s.is_identity() && s.image_of(set.bits()) == set.bits()) return false;
  }
  return true;
}

/// True when g is the cyclic group generated by a single n-cycle on its n
/// points (permutation isomorphic to C_n).
inline bool is_full_cycle_group(const PermutationGroup& g) {
  if (g.degree() < 2 || g.order() != g.degree()) return false;
  for (const auto& s : g.elements()) {
    if (s.order() == g.degree() && s.cycles().size() == 1) return true;
  }
  return false;
}

/// Literal equality with K_4 on {1,2,3,4}. The regular representation of
/// the Klein group is unique, so this is also the permutation-isomorphism test.
inline bool is_klein_group(const PermutationGroup& g) {
  return g.degree() == 4 && g == klein_group();
}

inline std::string format_points(std::span<const Point> points) {
  std::string out = "{";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(points[i] + 1);
  }
  return out + "}";
}

}  // namespace boolsym

#endif  // BOOLSYM_GROUP_HPP
