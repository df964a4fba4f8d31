#ifndef BOOLSYM_FUNCTION_HPP
#define BOOLSYM_FUNCTION_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "boolsym/error.hpp"
#include "boolsym/permutation.hpp"

namespace boolsym {

using Value = std::uint32_t;

/// Set of subsets of {1..n}, kept sorted and duplicate-free. Equivalent to
/// the support of a 2-valued function.
class SupportRelation {
 public:
  SupportRelation() = default;
  SupportRelation(int n, std::vector<Mask> masks) : n_(n), masks_(std::move(masks)) {
    if (n < 0 || n > kMaxMaskDegree) throw SearchCapExceeded("relation degree out of range");
    for (Mask m : masks_) {
      if (m & ~full_mask(n)) throw PreconditionViolation("mask wider than relation degree");
    }
    std::sort(masks_.begin(), masks_.end());
    masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
  }

  static SupportRelation parse(int n, std::initializer_list<std::string_view> bitstrings) {
    std::vector<Mask> masks;
    for (auto s : bitstrings) {
      auto bv = BitVector::parse(s);
      if (bv.length() != n) throw DegreeMismatch("bit string length differs from n");
      masks.push_back(bv.bits());
    }
    return SupportRelation(n, std::move(masks));
  }

  int n() const noexcept { return n_; }
  const std::vector<Mask>& masks() const noexcept { return masks_; }
  std::size_t size() const noexcept { return masks_.size(); }
  bool contains(Mask m) const { return std::binary_search(masks_.begin(), masks_.end(), m); }

  friend bool operator==(const SupportRelation&, const SupportRelation&) = default;

 private:
  int n_ = 0;
  std::vector<Mask> masks_;
};

/// f : {0,1}^n -> {0..k-1} as a dense table indexed by mask.
class KValuedFunction {
 public:
  KValuedFunction() = default;

  KValuedFunction(int n, Value k) : n_(n), k_(k) {
    check_shape(n, k);
    table_.assign(std::size_t{1} << n, 0);
  }

  KValuedFunction(int n, Value k, std::vector<Value> table)
      : n_(n), k_(k), table_(std::move(table)) {
    check_shape(n, k);
    if (table_.size() != (std::size_t{1} << n)) {
      throw PreconditionViolation("table length must be 2^n");
    }
    for (Value v : table_) {
      if (v >= k) throw PreconditionViolation("table value out of range");
    }
  }

  int n() const noexcept { return n_; }
  Value k() const noexcept { return k_; }
  const std::vector<Value>& table() const noexcept { return table_; }

  Value operator()(Mask x) const { return table_[x]; }
  Value operator()(const BitVector& x) const {
    if (x.length() != n_) throw DegreeMismatch("function evaluated on a vector of wrong length");
    return table_[x.bits()];
  }

  void set(Mask x, Value v) {
    if (v >= k_) throw PreconditionViolation("value out of range");
    table_[x] = v;
  }

  /// Largest value actually taken, plus one.
  Value used_values() const {
    Value hi = 0;
    for (Value v : table_) hi = std::max(hi, v);
    return hi + 1;
  }

  friend bool operator==(const KValuedFunction&, const KValuedFunction&) = default;

 private:
  static void check_shape(int n, Value k) {
    if (n < 0 || n > kMaxMaskDegree) {
      throw SearchCapExceeded("functions limited to n <= " + std::to_string(kMaxMaskDegree));
    }
    if (k < 2) throw PreconditionViolation("a k-valued function needs k >= 2");
  }

  int n_ = 0;
  Value k_ = 2;
  std::vector<Value> table_;
};

/// f(x) = 1 exactly on the members of the relation.
inline KValuedFunction from_support(const SupportRelation& s) {
  KValuedFunction f(s.n(), 2);
  for (Mask m : s.masks()) f.set(m, 1);
  return f;
}

/// Masks with nonzero value.
inline SupportRelation support_of(const KValuedFunction& f) {
  std::vector<Mask> masks;
  for (std::size_t x = 0; x < f.table().size(); ++x) {
    if (f.table()[x] != 0) masks.push_back(static_cast<Mask>(x));
  }
  return SupportRelation(f.n(), std::move(masks));
}

/// f(x^sigma) == f(x) for every x.
inline bool is_invariant(const KValuedFunction& f, const Permutation& sigma) {
  if (sigma.degree() != static_cast<std::size_t>(f.n())) {
    throw DegreeMismatch("is_invariant: degree mismatch");
  }
  const MaskAction image(sigma);
  const auto& t = f.table();
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (t[image(static_cast<Mask>(x))] != t[x]) return false;
  }
  return true;
}

/// The function g with g(r(S)) = f(S): its symmetry group is the conjugate
/// of f's by the relabelling r.
inline KValuedFunction permute_variables(const KValuedFunction& f, const Permutation& r) {
  if (r.degree() != static_cast<std::size_t>(f.n())) {
    throw DegreeMismatch("permute_variables: degree mismatch");
  }
  const MaskAction image(r);
  std::vector<Value> out(f.table().size());
  for (std::size_t x = 0; x < out.size(); ++x) out[image(static_cast<Mask>(x))] = f.table()[x];
  return KValuedFunction(f.n(), f.k(), std::move(out));
}

}  // namespace boolsym

#endif  // BOOLSYM_FUNCTION_HPP
