#ifndef BOOLSYM_DECISION_HPP
#define BOOLSYM_DECISION_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "boolsym/closure.hpp"
#include "boolsym/constructions.hpp"
#include "boolsym/decompose.hpp"
#include "boolsym/error.hpp"
#include "boolsym/group.hpp"
#include "boolsym/sum_expression.hpp"
#include "boolsym/symmetry.hpp"

namespace boolsym {

enum class Verdict { kRepresentable2, kRepresentableOnly3, kNotRepresentableAnyK, kUnknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kRepresentable2: return "Representable2";
    case Verdict::kRepresentableOnly3: return "RepresentableOnly3";
    case Verdict::kNotRepresentableAnyK: return "NotRepresentableAnyK";
    case Verdict::kUnknown: return "Unknown";
  }
  return "?";
}

/// reason names the rule that fired: cyclic-criterion, trivial-group,
/// cyclic-group, klein-group, independent-cyclic-summand or
/// witness-construction.
struct Classification {
  Verdict verdict = Verdict::kUnknown;
  std::string reason;
  std::string detail;
  std::optional<KValuedFunction> witness;
  std::optional<PermutationGroup> closure;
  bool witness_omitted = false;
};

/// Nontrivial cycle lengths of a generator: 2-representable iff every
/// length in {3,4,5} shares a factor with some other length.
inline Classification classify_cyclic(const std::vector<std::size_t>& lengths) {
  for (auto l : lengths) {
    if (l < 2) throw PreconditionViolation("cycle lengths must be at least 2");
  }
  Classification out;
  out.reason = "cyclic-criterion";
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    const auto l = lengths[i];
    if (l < 3 || l > 5) continue;
    bool partnered = false;
    for (std::size_t j = 0; j < lengths.size() && !partnered; ++j) {
      partnered = j != i && std::gcd(l, lengths[j]) != 1;
    }
    if (!partnered) {
      out.verdict = Verdict::kNotRepresentableAnyK;
      out.detail = "cycle of length " + std::to_string(l) + " is coprime to all other cycles";
      return out;
    }
  }
  out.verdict = Verdict::kRepresentable2;
  out.detail = "every cycle of length 3, 4 or 5 shares a factor with another cycle";
  return out;
}

struct ClassifyOptions {
  int witness_degree_cap = 14;            // no witness is built above this degree
  std::uint64_t sample_tries = 1 << 12;                 // random unions per fallback search
  std::uint64_t search_budget = std::uint64_t{1} << 16;  // ordered unions after sampling
  bool compute_closure = true;            // attach closure(A) to negative verdicts
};

namespace detail {

inline bool is_small_cycle_group(const PermutationGroup& g) {
  return g.order() >= 3 && g.order() <= 5 && is_full_cycle_group(g);
}

/// Relabelled copy of f: point j of f becomes order[j].
inline KValuedFunction place(const KValuedFunction& f, const std::vector<Point>& order) {
  return permute_variables(f, Permutation(order));
}

/// Builds exact witnesses for subgroups of direct sums of regular groups
/// without fixed points, following the reductions of the classification:
/// split independent parts, absorb dependent short cycles, then attach a
/// regular selector orbit to a direct-sum function.
class WitnessBuilder {
 public:
  explicit WitnessBuilder(const ClassifyOptions& options) : options_(options) {}

  /// 2-valued f with symmetry_group(f) == g.
  std::optional<KValuedFunction> two_valued(const PermutationGroup& g) {
    const auto key = std::make_pair(g.degree(), g.elements());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    auto result = build(g);
    memo_.emplace(key, result);
    return result;
  }

  /// At most 4-valued exact witness.
  std::optional<KValuedFunction> four_valued(const PermutationGroup& g) {
    if (is_klein_group(g)) return fixture("k4_3val");
    return two_valued(g);
  }

 private:
  using Key = std::pair<std::size_t, std::vector<Permutation>>;

  bool verified(const KValuedFunction& f, const PermutationGroup& g) const {
    if (f.n() > kMaxSearchDegree) return false;
    return symmetry_order(f) == g.order() &&
           std::all_of(g.generators().begin(), g.generators().end(),
                       [&](const Permutation& s) { return is_invariant(f, s); });
  }

  std::optional<KValuedFunction> build(const PermutationGroup& g) {
    if (static_cast<int>(g.degree()) > options_.witness_degree_cap) return std::nullopt;
    const auto orbits = point_orbits(g);
    if (g.degree() == 0) return KValuedFunction(0, 2);
    if (orbits.size() == 1) return single_orbit(g);
    for (auto attempt : {&WitnessBuilder::split_direct, &WitnessBuilder::absorb_cycle,
                         &WitnessBuilder::pair_orbit, &WitnessBuilder::selector_split}) {
      try {
        if (auto f = (this->*attempt)(g, orbits)) return f;
      } catch (const Error&) {
        // A failed precondition only rules out this reduction.
      }
    }
    return search(g);
  }

  /// Random unions first: exact witnesses are common among them, while the
  /// ordered enumeration starts with the most symmetric unions.
  std::optional<KValuedFunction> search(const PermutationGroup& g) const {
    if (auto sampled = sample_2rep(g, options_.sample_tries); sampled.witness) {
      return sampled.witness;
    }
    SearchOptions opt;
    opt.budget = options_.search_budget;
    return search_2rep(g, opt).witness;
  }

  std::optional<KValuedFunction> single_orbit(const PermutationGroup& g) const {
    if (is_klein_group(g) || is_small_cycle_group(g)) return std::nullopt;
    if (g.degree() == 2) return KValuedFunction(2, 2);
    return search(g);
  }

  std::optional<KValuedFunction> accept(KValuedFunction f, const std::vector<Point>& order,
                                        const PermutationGroup& g) const {
    auto placed = place(f, order);
    if (verified(placed, g)) return placed;
    return std::nullopt;
  }

  static std::vector<Point> concat(const std::vector<std::vector<Point>>& parts) {
    std::vector<Point> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
  }

  static std::vector<Point> iota_points(std::size_t from, std::size_t to) {
    std::vector<Point> out(to - from);
    std::iota(out.begin(), out.end(), static_cast<Point>(from));
    return out;
  }

  /// g = g|U (+) g|rest for the first factor U of the finest decomposition.
  std::optional<KValuedFunction> split_direct(const PermutationGroup& g,
                                              const std::vector<std::vector<Point>>& orbits) {
    const auto parts = decompose_independent(g);
    std::vector<std::vector<Point>> first, rest;
    for (const auto& e : parts) (e.factor == 0 ? first : rest).push_back(e.orbit);
    if (rest.empty()) return std::nullopt;
    (void)orbits;
    const auto u = concat(first);
    const auto v = concat(rest);
    auto gu = four_valued(restrict_to(g, u));
    auto gv = four_valued(restrict_to(g, v));
    if (!gu || !gv) return std::nullopt;
    auto order = u;
    order.insert(order.end(), v.begin(), v.end());
    return accept(theorem3_build(*gu, *gv, 2), order, g);
  }

  /// A short cycle orbit O that depends on another orbit O': the cyclic
  /// construction on C_i (+) g|rest with O' as the factor.
  std::optional<KValuedFunction> absorb_cycle(const PermutationGroup& g,
                                              const std::vector<std::vector<Point>>& orbits) {
    for (const auto& o : orbits) {
      const auto go = restrict_to(g, o);
      if (!is_small_cycle_group(go)) continue;
      const std::size_t i = o.size();
      // Order O along a generating i-cycle, starting at its smallest point.
      const Permutation* gen = nullptr;
      for (const auto& s : go.elements()) {
        if (s.cycles().size() == 1 && s.cycles()[0].size() == i) {
          gen = &s;
          break;
        }
      }
      std::vector<Point> cyc;
      for (std::size_t k = 0, p = 0; k < i; ++k, p = (*gen)(p)) cyc.push_back(o[p]);
      for (const auto& other : orbits) {
        if (other == o) continue;
        std::vector<std::vector<Point>> tail{other};
        for (const auto& x : orbits) {
          if (x != o && x != other) tail.push_back(x);
        }
        auto order = cyc;
        const auto rest = concat(tail);
        order.insert(order.end(), rest.begin(), rest.end());
        if (auto f = absorb_into(g, order, i, other.size())) return f;
      }
    }
    return std::nullopt;
  }

  std::optional<KValuedFunction> absorb_into(const PermutationGroup& g,
                                             const std::vector<Point>& order, std::size_t i,
                                             std::size_t factor_size) {
    const auto gp = restrict_to(g, order);
    const std::size_t n = gp.degree();
    const auto h = restrict_to(gp, iota_points(i, n));
    const auto h1 = restrict_to(gp, iota_points(i, i + factor_size));
    const auto pair = restrict_to(gp, iota_points(0, i + factor_size));
    std::vector<Permutation> m_elems, n1_elems;
    for (const auto& s : pair.elements()) {
      bool left_id = true, right_id = true;
      for (std::size_t p = 0; p < i; ++p) left_id = left_id && s(p) == p;
      for (std::size_t p = i; p < i + factor_size; ++p) right_id = right_id && s(p) == p;
      if (right_id) m_elems.push_back(restrict_element(s, 0, i));
      if (left_id) n1_elems.push_back(restrict_element(s, i, factor_size));
    }
    const auto m = PermutationGroup::from_elements(i, m_elems);
    const auto n1 = PermutationGroup::from_elements(factor_size, n1_elems);
    if (m.order() == i) return std::nullopt;  // independent of this factor
    const auto qa = quotient(cyclic_group(i), m);
    const auto qb = quotient(h1, n1);
    std::optional<QuotientIso> phi;
    for (const auto& iso : quotient_isomorphisms(qa, qb)) {
      if (subdirect_sum(qa, qb, iso) == pair) {
        phi = iso;
        break;
      }
    }
    if (!phi) return std::nullopt;
    auto hf = two_valued(h);
    if (!hf) hf = KValuedFunction(static_cast<int>(h.degree()), 2);
    const auto w = RegularWitness::make(h, *hf);
    return accept(from_support(lemma2_build(i, m, w, 0, h1, n1, *phi)), order, g);
  }

  /// An orbit of size 2 as the C_2 summand of B = C_2 (+) H. H is tried as
  /// the projection of g first, then as the sum of its orbit restrictions.
  std::optional<KValuedFunction> pair_orbit(const PermutationGroup& g,
                                            const std::vector<std::vector<Point>>& orbits) {
    for (const auto& o : orbits) {
      if (o.size() != 2) continue;
      std::vector<std::vector<Point>> rest;
      for (const auto& x : orbits) {
        if (x != o) rest.push_back(x);
      }
      const auto v = concat(rest);
      auto order = o;
      order.insert(order.end(), v.begin(), v.end());
      const auto gp = restrict_to(g, order);
      for (const auto& h : factor_choices(g, v, rest)) {
        std::optional<KValuedFunction> hf;
        if (!is_klein_group(h)) {
          hf = two_valued(h);
          if (!hf) continue;
        }
        try {
          if (auto f = accept(from_support(lemma6_build(gp, h, hf)), order, g)) return f;
        } catch (const PreconditionViolation&) {
        }
      }
    }
    return std::nullopt;
  }

  /// Candidate groups H on the points v with g|v <= H: the projection
  /// itself, then the direct sum of the orbit restrictions when larger.
  static std::vector<PermutationGroup> factor_choices(const PermutationGroup& g,
                                                      const std::vector<Point>& v,
                                                      const std::vector<std::vector<Point>>& parts) {
    std::vector<PermutationGroup> out{restrict_to(g, v)};
    std::vector<PermutationGroup> pieces;
    for (const auto& x : parts) pieces.push_back(restrict_to(g, x));
    auto sum = direct_sum(pieces);
    if (sum != out.front()) out.push_back(std::move(sum));
    return out;
  }

  /// B = G (+) H over a split of the orbits with at least 3 points per side.
  std::optional<KValuedFunction> selector_split(const PermutationGroup& g,
                                                const std::vector<std::vector<Point>>& orbits) {
    const std::size_t r = orbits.size();
    if (r > 12) return std::nullopt;
    for (std::uint64_t subset = 1; subset + 1 < (std::uint64_t{1} << r); ++subset) {
      if (!(subset & 1)) continue;  // each split once: orbit 0 on the left
      std::vector<std::vector<Point>> left, right;
      for (std::size_t j = 0; j < r; ++j) {
        const bool in = (subset >> j) & 1;
        (in ? left : right).push_back(orbits[j]);
      }
      const auto u = concat(left);
      const auto v = concat(right);
      if (u.size() < 3 || v.size() < 3) continue;
      auto order = u;
      order.insert(order.end(), v.begin(), v.end());
      const auto gp = restrict_to(g, order);
      for (const auto& gu : factor_choices(g, u, left)) {
        auto fu = four_valued(gu);
        if (!fu) continue;
        for (const auto& gv : factor_choices(g, v, right)) {
          auto fv = four_valued(gv);
          if (!fv) continue;
          try {
            if (auto f = accept(from_support(lemma5_build(gp, gu, *fu, gv, *fv)), order, g)) {
              return f;
            }
          } catch (const PreconditionViolation&) {
          }
        }
      }
    }
    return std::nullopt;
  }

  const ClassifyOptions& options_;
  std::map<Key, std::optional<KValuedFunction>> memo_;
};

/// Adds the fixed points of g (points missing from support, increasing) to
/// a witness on the support.
inline std::optional<KValuedFunction> extend_by_fixed_points(KValuedFunction f,
                                                             const std::vector<Point>& moved,
                                                             std::size_t degree) {
  std::size_t fixed = degree - moved.size();
  if (fixed == 0) return f;
  if (moved.empty()) return trivial_group_witness(static_cast<int>(degree));
  for (std::size_t k = 0; k < fixed; ++k) {
    if (f.n() + 1 > kMaxMaskDegree) return std::nullopt;
    f = add_fixed_point(f);
  }
  // f now has the fixed points first (in reverse order of addition, which
  // is irrelevant) followed by the moved points.
  std::vector<Point> order;
  std::vector<bool> is_moved(degree, false);
  for (Point p : moved) is_moved[p] = true;
  for (Point p = 0; p < degree; ++p) {
    if (!is_moved[p]) order.push_back(p);
  }
  order.insert(order.end(), moved.begin(), moved.end());
  return place(f, order);
}

inline void attach_closure(Classification& c, const PermutationGroup& a,
                           const ClassifyOptions& options) {
  if (!options.compute_closure) return;
  try {
    c.closure = closure(a);
  } catch (const Error&) {
    // Beyond the search caps; the verdict stands without the certificate.
  }
}

}  // namespace detail

/// Representability of A, a subgroup of the direct sum B of regular groups.
inline Classification classify_in_regular_sum(const PermutationGroup& a, const SumExpression& b,
                                              const ClassifyOptions& options = {}) {
  if (a.degree() != b.degree()) throw DegreeMismatch("A and B differ in degree");
  for (const auto& leaf : b.leaves()) {
    if (!structure_tests(leaf.group).regular) {
      throw PreconditionViolation("leaf at offset " + std::to_string(leaf.offset) +
                                  " is not a regular group");
    }
  }
  if (!a.is_subgroup_of(b.evaluate())) throw NotSubgroup("A is not contained in B");

  const auto moved = support(a);
  const auto core = restrict_to(a, moved);
  const bool has_fixed = moved.size() < a.degree();
  Classification out;

  if (moved.empty()) {
    out.verdict = Verdict::kRepresentable2;
    out.reason = "trivial-group";
    out.witness = trivial_group_witness(static_cast<int>(a.degree()));
    return out;
  }
  if (detail::is_small_cycle_group(core)) {
    out.verdict = Verdict::kNotRepresentableAnyK;
    out.reason = "cyclic-group";
    out.detail = "C_" + std::to_string(core.order()) + " on " + format_points(moved);
    detail::attach_closure(out, a, options);
    return out;
  }
  if (is_klein_group(core) && !has_fixed) {
    out.verdict = Verdict::kRepresentableOnly3;
    out.reason = "klein-group";
    out.witness = fixture("k4_3val");
    detail::attach_closure(out, a, options);
    return out;
  }
  for (const auto& e : decompose_independent(core)) {
    if (e.independent && detail::is_small_cycle_group(e.restricted)) {
      std::vector<Point> pts;
      for (Point p : e.orbit) pts.push_back(moved[p]);
      out.verdict = Verdict::kNotRepresentableAnyK;
      out.reason = "independent-cyclic-summand";
      out.detail = "C_" + std::to_string(e.restricted.order()) + " on " + format_points(pts) +
                   " is a direct summand";
      detail::attach_closure(out, a, options);
      return out;
    }
  }

  out.verdict = Verdict::kRepresentable2;
  out.reason = "witness-construction";
  if (static_cast<int>(a.degree()) > options.witness_degree_cap) {
    out.witness_omitted = true;
    out.detail = "witness omitted for size";
    return out;
  }
  detail::WitnessBuilder builder(options);
  std::optional<KValuedFunction> f;
  if (is_klein_group(core)) {
    f = fixture("k4_3val");
  } else {
    f = builder.two_valued(core);
  }
  if (f) f = detail::extend_by_fixed_points(*f, moved, a.degree());
  if (f && f->k() == 2 && a.degree() <= static_cast<std::size_t>(kMaxSearchDegree) &&
      symmetry_group(*f) == a) {
    out.witness = std::move(f);
  } else {
    out.witness_omitted = true;
    out.detail = "no verified witness within the construction budget";
  }
  return out;
}

enum class Certificate { kConfirmed, kRejected, kUnknown };

inline const char* to_string(Certificate c) {
  switch (c) {
    case Certificate::kConfirmed: return "confirmed";
    case Certificate::kRejected: return "rejected";
    case Certificate::kUnknown: return "unknown";
  }
  return "?";
}

/// Independent check of a verdict. Unknown when a cap or budget stops the
/// check; never Confirmed without a completed check.
inline Certificate certify(const PermutationGroup& a, const Classification& c,
                           const SearchOptions& search = {}) {
  try {
    switch (c.verdict) {
      case Verdict::kRepresentable2: {
        if (c.witness) {
          if (c.witness->k() != 2 || c.witness->n() != static_cast<int>(a.degree())) {
            return Certificate::kRejected;
          }
          return symmetry_group(*c.witness) == a ? Certificate::kConfirmed : Certificate::kRejected;
        }
        const auto found = search_2rep(a, search);
        if (found.status == SearchStatus::kFound) return Certificate::kConfirmed;
        if (found.status == SearchStatus::kExhausted) return Certificate::kRejected;
        return Certificate::kUnknown;
      }
      case Verdict::kNotRepresentableAnyK: {
        const auto cl = c.closure ? *c.closure : closure(a);
        if (!a.is_subgroup_of(cl)) return Certificate::kRejected;
        return cl.order() > a.order() ? Certificate::kConfirmed : Certificate::kRejected;
      }
      case Verdict::kRepresentableOnly3: {
        if (closure(a) != a) return Certificate::kRejected;
        const auto two = search_2rep(a, search);
        if (two.status == SearchStatus::kFound) return Certificate::kRejected;
        const auto three = search_krep(a, 3, search);
        if (three.status == SearchStatus::kExhausted) return Certificate::kRejected;
        if (two.status != SearchStatus::kExhausted || three.status != SearchStatus::kFound) {
          return Certificate::kUnknown;
        }
        return Certificate::kConfirmed;
      }
      case Verdict::kUnknown:
        return Certificate::kUnknown;
    }
  } catch (const SearchCapExceeded&) {
  } catch (const OrderCapExceeded&) {
  }
  return Certificate::kUnknown;
}

}  // namespace boolsym

#endif  // BOOLSYM_DECISION_HPP
