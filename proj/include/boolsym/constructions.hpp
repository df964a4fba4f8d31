#ifndef BOOLSYM_CONSTRUCTIONS_HPP
#define BOOLSYM_CONSTRUCTIONS_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "boolsym/closure.hpp"
#include "boolsym/error.hpp"
#include "boolsym/function.hpp"
#include "boolsym/group.hpp"
#include "boolsym/quotient.hpp"
#include "boolsym/symmetry.hpp"

namespace boolsym {

/// Values 0..r*r-1 read as pairs (v mod r, v div r).
class PairEncoding {
 public:
  PairEncoding(Value r, Value k) : r_(r) {
    if (r < 2) throw PreconditionViolation("pair encoding needs r >= 2");
    if (static_cast<std::uint64_t>(r) * r < k) {
      throw PreconditionViolation("r*r = " + std::to_string(r * r) + " < k = " + std::to_string(k));
    }
  }
  Value r() const noexcept { return r_; }
  Value first(Value v) const noexcept { return v % r_; }
  Value second(Value v) const noexcept { return v / r_; }
  Value encode(Value first, Value second) const noexcept { return first + r_ * second; }

 private:
  Value r_;
};

// ---------------------------------------------------------------------------
// Direct-sum function

enum class WeightVariant { kWeight1, kWeight2 };

struct DirectSumOptions {
  WeightVariant variant = WeightVariant::kWeight1;
  // Drops the two cases that read the second projection of h.
  bool omit_second_projection = false;
};

namespace detail {

inline KValuedFunction direct_sum_function_ordered(const KValuedFunction& g, const KValuedFunction& h,
                                                   Value r, const DirectSumOptions& opt) {
  const int m = g.n();
  const int n = h.n();
  const PairEncoding enc(r, std::max(g.k(), h.k()));
  const Mask full_x = full_mask(m);
  const Mask full_y = full_mask(n);
  const int w5 = opt.variant == WeightVariant::kWeight1 ? 1 : 2;
  KValuedFunction f(m + n, r);
  for (Mask z = 0; z < (Mask{1} << (m + n)); ++z) {
    const Mask x = z >> n;
    const Mask y = z & full_y;
    const bool x_mid = x != 0 && x != full_x;
    const bool y_mid = y != 0 && y != full_y;
    Value v = 0;
    if (y == 0 && x_mid) {
      v = enc.first(g(x));
    } else if (y == full_y && x_mid) {
      v = enc.second(g(x));
    } else if (x == 0 && y_mid) {
      v = enc.first(h(y));
    } else if (!opt.omit_second_projection && x == full_x && y_mid && weight(y) != n - m) {
      v = enc.second(h(y));
    } else if (!opt.omit_second_projection && weight(x) == w5 && weight(y) == n - m) {
      v = enc.second(h(y));
    } else if (x == 0 && y == full_y) {
      v = 1;
    }
    f.set(z, v);
  }
  return f;
}

}  // namespace detail

/// r-valued f on m+n variables, g on the first m and h on the last n, with
/// symmetry group S(g) (+) S(h). The smaller factor plays the role of the
/// first block internally; the output is always in the caller's order.
inline KValuedFunction theorem3_build(const KValuedFunction& g, const KValuedFunction& h, Value r,
                                      const DirectSumOptions& opt = {}) {
  const int m = g.n();
  const int n = h.n();
  if (m < 2 || n < 2) throw PreconditionViolation("direct-sum function needs m, n >= 2");
  if (m + n > kMaxMaskDegree) throw SearchCapExceeded("m + n exceeds the mask cap");
  if (opt.variant == WeightVariant::kWeight2 && std::min(m, n) <= 2) {
    throw PreconditionViolation("weight-2 variant needs the smaller factor to have > 2 variables");
  }
  if (m <= n) return detail::direct_sum_function_ordered(g, h, r, opt);
  // Built as h then g; point j of h sits at m + j in the caller's order.
  const auto swapped = detail::direct_sum_function_ordered(h, g, r, opt);
  std::vector<Point> images(static_cast<std::size_t>(m + n));
  for (int j = 0; j < n; ++j) images[static_cast<std::size_t>(j)] = static_cast<Point>(m + j);
  for (int i = 0; i < m; ++i) images[static_cast<std::size_t>(n + i)] = static_cast<Point>(i);
  return permute_variables(swapped, Permutation(std::move(images)));
}

/// 2-valued f on 1+n variables with symmetry group S_1 (+) S(h): point 1 is
/// new and fixed. h may take up to 4 values provided the second projection
/// of h vanishes on weight n-1.
inline KValuedFunction add_fixed_point(const KValuedFunction& h) {
  const int n = h.n();
  if (n + 1 > kMaxMaskDegree) throw SearchCapExceeded("n + 1 exceeds the mask cap");
  const PairEncoding enc(2, h.k());
  const Mask full_y = full_mask(n);
  for (Mask y = 0; y <= full_y; ++y) {
    if (weight(y) == n - 1 && enc.second(h(y)) != 0) {
      throw PreconditionViolation("h must have zero second projection on weight n-1");
    }
  }
  KValuedFunction f(n + 1, 2);
  const Mask one = Mask{1} << n;
  for (Mask y = 1; y < full_y; ++y) {
    f.set(y, enc.first(h(y)));
    f.set(one | y, enc.second(h(y)));
  }
  f.set(full_y, 1);
  return f;
}

/// 2-valued function whose symmetry group is trivial: a chain of initial
/// segments {1}, {1,2}, ..., {1..n-1}.
inline KValuedFunction trivial_group_witness(int n) {
  KValuedFunction f(n, 2);
  Mask m = 0;
  for (int p = 0; p + 1 < n; ++p) {
    m |= point_bit(n, static_cast<Point>(p));
    f.set(m, 1);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Cyclic factor absorbed into a regular factor

/// A group H with a function h invariant under it; exact records whether
/// symmetry_group(h) == H was confirmed.
struct RegularWitness {
  PermutationGroup group;
  KValuedFunction function;
  std::optional<PermutationGroup> kernel;
  bool exact = false;

  static RegularWitness make(PermutationGroup h_group, KValuedFunction h,
                             std::optional<PermutationGroup> kernel = std::nullopt) {
    if (h.n() != static_cast<int>(h_group.degree())) {
      throw DegreeMismatch("witness function and group differ in degree");
    }
    for (const auto& s : h_group.generators()) {
      if (!is_invariant(h, s)) throw PreconditionViolation("witness function is not invariant");
    }
    if (kernel && !is_normal_subgroup(*kernel, h_group)) {
      throw NotNormal("kernel is not a normal subgroup of the witness group");
    }
    bool exact = false;
    if (h.n() <= kMaxSearchDegree) exact = symmetry_order(h) == h_group.order();
    return RegularWitness{std::move(h_group), std::move(h), std::move(kernel), exact};
  }
};

namespace detail {

/// X_1 is the kernel orbit of point 0, X_{k+1} = tau(X_k). The blocks must
/// partition the factor's points and tau must cycle through exactly count
/// of them.
inline std::vector<std::vector<Point>> cyclic_blocks(const PermutationGroup& factor,
                                                     const PermutationGroup& kernel,
                                                     const Permutation& tau, std::size_t count) {
  const std::size_t n = factor.degree();
  std::vector<Point> first;
  for (const auto& s : kernel.elements()) first.push_back(s(0));
  std::sort(first.begin(), first.end());
  first.erase(std::unique(first.begin(), first.end()), first.end());
  std::vector<std::vector<Point>> blocks{first};
  std::vector<bool> used(n, false);
  for (std::size_t k = 0; k < count; ++k) {
    for (Point p : blocks[k]) {
      if (used[p]) throw PreconditionViolation("block/quotient mismatch: blocks overlap");
      used[p] = true;
    }
    std::vector<Point> next;
    for (Point p : blocks[k]) next.push_back(tau(p));
    std::sort(next.begin(), next.end());
    if (k + 1 < count) {
      blocks.push_back(std::move(next));
    } else if (next != blocks[0]) {
      throw PreconditionViolation("block/quotient mismatch: blocks do not cycle");
    }
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    throw PreconditionViolation("block/quotient mismatch: blocks do not cover the factor");
  }
  return blocks;
}

inline PermutationGroup klein_kernel_of_c4() { return group_from_cycles(4, {"(1 3)(2 4)"}); }

/// Which cyclic-factor family to emit: the plain i-cycle (kernel 1) or the
/// i = 4 case with kernel {1, (1 3)(2 4)}.
inline bool is_c4_half_kernel(std::size_t i, const PermutationGroup& m) {
  if (m.order() == 1) return false;
  if (i == 4 && m == klein_kernel_of_c4()) return true;
  throw PreconditionViolation("cyclic kernel must be trivial, or {1,(1 3)(2 4)} for i = 4");
}

/// The four families: weight-1 points of the cycle, 1^i followed by the
/// support of h, and the masks tying cycle points to blocks (in points
/// i.. of the output).
inline SupportRelation cyclic_absorption_relation(std::size_t i, bool c4_half_kernel,
                                                  const KValuedFunction& h,
                                                  const std::vector<std::vector<Point>>& blocks) {
  if (h.k() != 2) throw PreconditionViolation("the regular witness must be 2-valued");
  const int hn = h.n();
  const int n = static_cast<int>(i) + hn;
  if (n > kMaxMaskDegree) throw SearchCapExceeded("construction exceeds the mask cap");
  auto bit = [&](std::size_t p) { return point_bit(n, static_cast<Point>(p)); };
  auto hbit = [&](Point p) { return bit(i + p); };
  std::vector<Mask> masks;
  for (std::size_t p = 0; p < i; ++p) masks.push_back(bit(p));
  const Mask prefix = full_mask(static_cast<int>(i)) << hn;
  for (Mask v = 0; v < (Mask{1} << hn); ++v) {
    if (h(v) == 1) masks.push_back(prefix | v);
  }
  if (!c4_half_kernel) {
    for (std::size_t k = 0; k < i; ++k) {
      const auto& here = blocks[k];
      const auto& next = blocks[(k + 1) % i];
      for (Point a : here) {
        masks.push_back(bit(k) | hbit(a));
        for (Point b : next) masks.push_back(bit(k) | hbit(a) | hbit(b));
      }
    }
  } else {
    // Points 1,3 mark X_1 and 2,4 mark X_2; pairs {1,2},{3,4} mark X_1 and
    // {2,3},{1,4} mark X_2.
    const std::vector<std::vector<std::size_t>> singles{{0}, {2}, {1}, {3}};
    const std::vector<std::vector<std::size_t>> pairs{{0, 1}, {2, 3}, {1, 2}, {0, 3}};
    for (std::size_t t = 0; t < 4; ++t) {
      const auto& block = blocks[t < 2 ? 0 : 1];
      for (Point a : block) {
        masks.push_back(bit(singles[t][0]) | hbit(a));
        masks.push_back(bit(pairs[t][0]) | bit(pairs[t][1]) | hbit(a));
      }
    }
  }
  return SupportRelation(n, std::move(masks));
}

inline Permutation restrict_element(const Permutation& s, std::size_t offset, std::size_t degree) {
  std::vector<Point> images(degree);
  for (std::size_t p = 0; p < degree; ++p) {
    const auto q = s(offset + p);
    if (q < offset || q >= offset + degree) {
      throw PreconditionViolation("element does not preserve the factor's points");
    }
    images[p] = static_cast<Point>(q - offset);
  }
  return Permutation(std::move(images));
}

inline void check_factor(const PermutationGroup& h, std::size_t offset, const PermutationGroup& h1) {
  if (offset + h1.degree() > h.degree()) throw PreconditionViolation("factor outside the base set");
  std::vector<Point> pts(h1.degree());
  std::iota(pts.begin(), pts.end(), static_cast<Point>(offset));
  if (restrict_to(h, pts) != h1) {
    throw PreconditionViolation("factor group differs from the restriction of H");
  }
}

}  // namespace detail

/// 2-valued f on i + deg(H) points. H is the full group with 2-valued
/// witness h; the cyclic group C_i on points 1..i depends on the factor H_1
/// (points offset+1.. of H) through phi : C_i/M -> H_1/N_1. Intended
/// symmetry group: cyclic_absorption_target with the same arguments.
inline SupportRelation lemma2_build(std::size_t i, const PermutationGroup& m,
                                    const RegularWitness& w, std::size_t offset,
                                    const PermutationGroup& h1, const PermutationGroup& n1,
                                    const QuotientIso& phi) {
  if (i < 3 || i > 5) throw PreconditionViolation("cyclic factor must have order 3, 4 or 5");
  if (m.degree() != i) throw DegreeMismatch("cyclic kernel degree differs from i");
  const bool c4 = detail::is_c4_half_kernel(i, m);
  detail::check_factor(w.group, offset, h1);
  if (!structure_tests(h1).regular) throw PreconditionViolation("dependent factor must be regular");
  const auto qa = quotient(cyclic_group(i), m);
  const auto qb = quotient(h1, n1);
  if (qa.order() < 2) throw PreconditionViolation("cyclic factor is independent");
  if (!is_valid_iso(qa, qb, phi)) throw InvalidIsomorphism("phi is not an isomorphism of the quotients");
  const auto delta = cyclic_group(i).generators().front();
  const auto& tau = qb.representative(phi.mapping[qa.coset_of_element(delta)]);
  auto blocks = detail::cyclic_blocks(h1, n1, tau, qa.order());
  for (auto& b : blocks) {
    for (auto& p : b) p = static_cast<Point>(p + offset);
  }
  return detail::cyclic_absorption_relation(i, c4, w.function, blocks);
}

/// The subgroup of C_i (+) H of pairs (c, t) with phi(cM) = t|H_1 N_1.
inline PermutationGroup cyclic_absorption_target(std::size_t i, const PermutationGroup& m,
                                                 const PermutationGroup& h, std::size_t offset,
                                                 const PermutationGroup& h1,
                                                 const PermutationGroup& n1,
                                                 const QuotientIso& phi) {
  const auto ci = cyclic_group(i);
  const auto qa = quotient(ci, m);
  const auto qb = quotient(h1, n1);
  std::vector<Permutation> elements;
  for (const auto& t : h.elements()) {
    const auto coset = qb.coset_of_element(detail::restrict_element(t, offset, h1.degree()));
    for (const auto& c : ci.elements()) {
      if (phi.mapping[qa.coset_of_element(c)] == coset) elements.push_back(join_disjoint(c, t));
    }
  }
  return PermutationGroup::from_elements(i + h.degree(), std::move(elements));
}

/// Case M = 1: C_i/1 (+)_phi H/N with H regular of order d*i, on i(d+1) points.
inline SupportRelation lemma1_build_m1(std::size_t i, const RegularWitness& w,
                                       const QuotientIso& phi) {
  if (!w.kernel) throw PreconditionViolation("the witness needs a kernel N");
  if (!structure_tests(w.group).regular) throw PreconditionViolation("H must be regular");
  return lemma2_build(i, trivial_group(i), w, 0, w.group, *w.kernel, phi);
}

/// Case i = 4, M = {1,(1 3)(2 4)}: C_4/M (+)_phi H/N with |H| = 2|N|.
inline SupportRelation lemma1_build_c4(const RegularWitness& w, const QuotientIso& phi) {
  if (!w.kernel) throw PreconditionViolation("the witness needs a kernel N");
  if (!structure_tests(w.group).regular) throw PreconditionViolation("H must be regular");
  return lemma2_build(4, detail::klein_kernel_of_c4(), w, 0, w.group, *w.kernel, phi);
}

// ---------------------------------------------------------------------------
// Subgroups of direct sums via a regular selector

namespace detail {

/// Set images of x under every element of a.
inline std::vector<Mask> set_orbit(const PermutationGroup& a, Mask x) {
  std::vector<Mask> out;
  for (const auto& s : a.elements()) out.push_back(MaskAction(s)(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Sets f to 1 on the a-orbit of the selector of b, which must be regular
/// in b and where f is currently 0.
inline SupportRelation add_selector_orbit(KValuedFunction f, const PermutationGroup& a,
                                          const PermutationGroup& b) {
  const auto s = selector(b);
  if (!regular_set_check(s, b)) throw PreconditionViolation("selector is not regular in B");
  for (Mask z : set_orbit(a, s.bits())) {
    if (f(z) != 0) throw PreconditionViolation("selector orbit meets the direct-sum support");
    f.set(z, 1);
  }
  return support_of(f);
}

inline void check_subgroup(const PermutationGroup& a, const PermutationGroup& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch("A and B differ in degree");
  if (!a.is_subgroup_of(b)) throw NotSubgroup("A is not contained in B");
}

}  // namespace detail

/// A <= B = G (+) H with g, h at most 4-valued, deg G, deg H >= 3 and no
/// fixed points in B. 2-valued f with symmetry group A.
inline SupportRelation lemma5_build(const PermutationGroup& a, const PermutationGroup& g,
                                    const KValuedFunction& gf, const PermutationGroup& h,
                                    const KValuedFunction& hf) {
  const auto b = direct_sum(g, h);
  detail::check_subgroup(a, b);
  const int m = static_cast<int>(g.degree());
  const int n = static_cast<int>(h.degree());
  if (m < 3 || n < 3) throw PreconditionViolation("both factors need at least 3 points");
  if (gf.k() > 4 || hf.k() > 4) throw PreconditionViolation("factor witnesses must be at most 4-valued");
  for (const auto& orbit : point_orbits(b)) {
    if (orbit.size() == 1) throw PreconditionViolation("B must have no fixed points");
  }
  const auto s = selector(b);
  const Mask small_part = m <= n ? s.bits() >> n : s.bits() & full_mask(n);
  if (s.weight() >= std::max(m, n)) {
    throw PreconditionViolation("selector weight reaches the larger factor's degree");
  }
  DirectSumOptions opt;
  if (weight(small_part) == 1) opt.variant = WeightVariant::kWeight2;
  return detail::add_selector_orbit(theorem3_build(gf, hf, 2, opt), a, b);
}

namespace detail {
inline SupportRelation example1_relation();
inline SupportRelation example2_relation();
inline PermutationGroup example2_group();
}  // namespace detail

/// A <= B = C_2 (+) H with H 2-representable by h, or H = K_4 (no h).
inline SupportRelation lemma6_build(const PermutationGroup& a, const PermutationGroup& h,
                                    const std::optional<KValuedFunction>& hf = std::nullopt) {
  const auto b = direct_sum(cyclic_group(2), h);
  detail::check_subgroup(a, b);
  if (h.degree() < 2) throw PreconditionViolation("H needs at least 2 points");
  if (!hf) {
    if (!is_klein_group(h)) throw PreconditionViolation("a witness for H is required unless H = K_4");
    if (a == b) return detail::example1_relation();
    for (const char* r : {"()", "(4 5)", "(5 6)"}) {
      const auto relabelling = Permutation::parse(r, 6);
      if (relabel(detail::example2_group(), relabelling) == a) {
        return support_of(permute_variables(from_support(detail::example2_relation()), relabelling));
      }
    }
    throw PreconditionViolation("for H = K_4 only B and its nontrivial subdirect sums are covered");
  }
  if (hf->k() != 2) throw PreconditionViolation("the witness for H must be 2-valued");
  DirectSumOptions opt;
  opt.omit_second_projection = true;
  return detail::add_selector_orbit(theorem3_build(KValuedFunction(2, 2), *hf, 2, opt), a, b);
}

// ---------------------------------------------------------------------------
// Fixtures

namespace detail {

inline SupportRelation example1_relation() {
  return SupportRelation::parse(6, {"100000", "010000", "001010", "000101", "111100", "110011"});
}

inline SupportRelation example2_relation() {
  return SupportRelation::parse(6, {"100000", "010000", "101010", "010101", "111100", "110011"});
}

inline PermutationGroup example2_group() {
  return group_from_cycles(6, {"(3 5)(4 6)", "(1 2)(3 4)(5 6)"});
}

}  // namespace detail

/// Named functions with known symmetry groups.
inline std::map<std::string, KValuedFunction> fixtures() {
  std::map<std::string, KValuedFunction> out;
  out.emplace("example1", from_support(detail::example1_relation()));
  out.emplace("example2", from_support(detail::example2_relation()));
  // 011001 where the printed list has 101001; the printed set has a
  // trivial symmetry group.
  out.emplace("example3", from_support(SupportRelation::parse(
                              6, {"001111", "101010", "010101", "101100", "010110", "100011",
                                  "011001", "001010", "000101"})));
  KValuedFunction k4(4, 3);
  for (const char* s : {"1100", "0011"}) k4.set(BitVector::parse(s).bits(), 1);
  for (const char* s : {"1010", "0101"}) k4.set(BitVector::parse(s).bits(), 2);
  out.emplace("k4_3val", std::move(k4));
  // First 2-representing unions found by search_2rep on C_i^(2).
  out.emplace("parallel_c2", from_support(SupportRelation::parse(4, {"0001", "0010", "0101", "1010"})));
  out.emplace("parallel_c3",
              from_support(SupportRelation::parse(
                  6, {"001001", "001011", "010010", "010110", "100100", "100101"})));
  out.emplace("parallel_c4",
              from_support(SupportRelation::parse(
                  8, {"00010001", "00010011", "00100010", "00100110", "01000100", "01001100",
                      "10001000", "10001001"})));
  out.emplace("parallel_c5",
              from_support(SupportRelation::parse(
                  10, {"0000100001", "0000100011", "0001000010", "0001000110", "0010000100",
                       "0010001100", "0100001000", "0100011000", "1000010000", "1000010001"})));
  return out;
}

inline KValuedFunction fixture(const std::string& name) {
  auto all = fixtures();
  auto it = all.find(name);
  if (it == all.end()) throw PreconditionViolation("unknown fixture " + name);
  return it->second;
}

}  // namespace boolsym

#endif  // BOOLSYM_CONSTRUCTIONS_HPP
