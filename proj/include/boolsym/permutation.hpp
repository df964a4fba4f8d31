#ifndef BOOLSYM_PERMUTATION_HPP
#define BOOLSYM_PERMUTATION_HPP

#include <algorithm>
#include <bit>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boolsym/error.hpp"

namespace boolsym {

/// 0-based point of a permutation domain. Text forms are 1-based.
using Point = std::uint16_t;

/// A subset of {1..n} packed into an integer. Position 1 is the most
/// significant of the n low bits, so integer order coincides with the
/// lexicographic order of the bit strings ("001" < "010" < "100").
using Mask = std::uint32_t;

inline constexpr int kMaxMaskDegree = 24;

constexpr Mask point_bit(int n, int p) { return Mask{1} << (n - 1 - p); }

constexpr Mask full_mask(int n) {
  return n == 0 ? Mask{0} : (n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1));
}

constexpr int weight(Mask x) { return std::popcount(x); }

/// A bijection of {0..n-1}. images()[i] is the image of i.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point p : images_) {
      if (p >= images_.size() || seen[p]) {
        throw PreconditionViolation("images do not form a bijection");
      }
      seen[p] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<Point> images(n);
    std::iota(images.begin(), images.end(), Point{0});
    return Permutation(std::move(images), Unchecked{});
  }

  /// Builds from 1-based images, as written in one-line notation.
  static Permutation from_one_based(std::span<const int> images) {
    std::vector<Point> zero(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (images[i] < 1) throw PreconditionViolation("image out of range");
      zero[i] = static_cast<Point>(images[i] - 1);
    }
    return Permutation(std::move(zero));
  }

  static Permutation from_one_based(std::initializer_list<int> images) {
    return from_one_based(std::span<const int>(images.begin(), images.size()));
  }

  /// Parses cycle notation such as "(1 2)(3 4)" or "(1,2,3)". Points not
  /// mentioned are fixed. "()" and the empty string denote the identity.
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(std::size_t p) const { return images_[p]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  Permutation inverse() const {
    std::vector<Point> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      inv[images_[i]] = static_cast<Point>(i);
    }
    return Permutation(std::move(inv), Unchecked{});
  }

  /// Nontrivial cycles, each starting at its smallest point, ordered by
  /// that point.
  std::vector<std::vector<Point>> cycles() const {
    std::vector<std::vector<Point>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t s = 0; s < images_.size(); ++s) {
      if (seen[s] || images_[s] == s) continue;
      std::vector<Point> cycle;
      for (std::size_t p = s; !seen[p]; p = images_[p]) {
        seen[p] = true;
        cycle.push_back(static_cast<Point>(p));
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  /// Multiset of cycle lengths, fixed points counted as 1-cycles, sorted.
  std::vector<std::size_t> cycle_type() const {
    std::vector<std::size_t> lengths;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t s = 0; s < images_.size(); ++s) {
      if (seen[s]) continue;
      std::size_t len = 0;
      for (std::size_t p = s; !seen[p]; p = images_[p]) {
        seen[p] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
  }

  std::uint64_t order() const {
    std::uint64_t result = 1;
    for (std::size_t len : cycle_type()) result = std::lcm(result, std::uint64_t{len});
    return result;
  }

  /// Embeds into a larger domain, moving point i to i + offset.
  Permutation shifted(std::size_t offset, std::size_t new_degree) const {
    if (offset + images_.size() > new_degree) {
      throw DegreeMismatch("shifted permutation does not fit");
    }
    std::vector<Point> images(new_degree);
    std::iota(images.begin(), images.end(), Point{0});
    for (std::size_t i = 0; i < images_.size(); ++i) {
      images[offset + i] = static_cast<Point>(offset + images_[i]);
    }
    return Permutation(std::move(images), Unchecked{});
  }

  /// Image of a subset: the mask of {sigma(p) : p in S}.
  Mask image_of(Mask set) const {
    const int n = static_cast<int>(images_.size());
    Mask out = 0;
    for (int p = 0; p < n; ++p) {
      if (set & point_bit(n, p)) out |= point_bit(n, images_[p]);
    }
    return out;
  }

  std::string to_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::string out;
    for (const auto& c : cs) {
      out += '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(c[i] + 1);
      }
      out += ')';
    }
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation join_disjoint(const Permutation&, const Permutation&);

  std::vector<Point> images_;
};

/// compose(s, t) applies t first and then s: compose(s, t)(i) == s(t(i)).
/// With this convention act(act(x, s), t) == act(x, compose(s, t)).
inline Permutation compose(const Permutation& s, const Permutation& t) {
  if (s.degree() != t.degree()) throw DegreeMismatch("compose: degree mismatch");
  std::vector<Point> images(s.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = s.images_[t.images_[i]];
  return Permutation(std::move(images), Permutation::Unchecked{});
}

/// (s, t) acting on the juxtaposition of the two base sets.
inline Permutation join_disjoint(const Permutation& s, const Permutation& t) {
  const std::size_t n = s.degree();
  std::vector<Point> images(n + t.degree());
  for (std::size_t i = 0; i < n; ++i) images[i] = s.images_[i];
  for (std::size_t i = 0; i < t.degree(); ++i) {
    images[n + i] = static_cast<Point>(n + t.images_[i]);
  }
  return Permutation(std::move(images), Permutation::Unchecked{});
}

inline Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) != 0)) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError(1, i + 1, "expected '('");
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
      if (i >= text.size()) throw ParseError(1, i + 1, "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (std::isdigit(static_cast<unsigned char>(text[i])) == 0) {
        throw ParseError(1, i + 1, "expected a point number");
      }
      const std::size_t start = i;
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])) != 0) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > degree) throw ParseError(1, start + 1, "point exceeds degree");
        ++i;
      }
      if (value == 0) throw ParseError(1, start + 1, "points are numbered from 1");
      if (used[value - 1]) throw ParseError(1, start + 1, "point repeated");
      used[value - 1] = true;
      cycle.push_back(static_cast<Point>(value - 1));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    skip_ws();
  }
  return Permutation(std::move(images), Unchecked{});
}

/// A point of {0,1}^n; position 1 is the leftmost character of text forms.
class BitVector {
 public:
  BitVector() = default;
  BitVector(int length, Mask bits) : length_(length), bits_(bits & full_mask(length)) {
    if (length < 0 || length > 32) throw PreconditionViolation("bit vector length out of range");
  }

  static BitVector parse(std::string_view text) {
    if (text.size() > 32) throw ParseError(1, 33, "bit string longer than 32");
    Mask bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] != '0' && text[i] != '1') throw ParseError(1, i + 1, "expected 0 or 1");
      bits = (bits << 1) | static_cast<Mask>(text[i] - '0');
    }
    return BitVector(static_cast<int>(text.size()), bits);
  }

  /// Characteristic vector of a set of 0-based points.
  static BitVector of_points(int length, std::span<const Point> points) {
    Mask bits = 0;
    for (Point p : points) bits |= point_bit(length, p);
    return BitVector(length, bits);
  }

  int length() const noexcept { return length_; }
  Mask bits() const noexcept { return bits_; }
  int weight() const noexcept { return std::popcount(bits_); }
  /// 1-based position, as in the text form.
  bool at(int position) const { return (bits_ & point_bit(length_, position - 1)) != 0; }

  std::string to_string() const {
    std::string s(static_cast<std::size_t>(length_), '0');
    for (int p = 0; p < length_; ++p) {
      if (bits_ & point_bit(length_, p)) s[static_cast<std::size_t>(p)] = '1';
    }
    return s;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  int length_ = 0;
  Mask bits_ = 0;
};

inline std::string mask_to_string(int n, Mask m) { return BitVector(n, m).to_string(); }

/// x^sigma: bit i of the result is bit sigma(i) of x. As a set this is the
/// preimage sigma^{-1}(S).
inline BitVector act(const BitVector& x, const Permutation& sigma) {
  if (static_cast<std::size_t>(x.length()) != sigma.degree()) {
    throw DegreeMismatch("act: vector length differs from permutation degree");
  }
  const int n = x.length();
  Mask out = 0;
  for (int i = 0; i < n; ++i) {
    if (x.bits() & point_bit(n, sigma(static_cast<std::size_t>(i)))) out |= point_bit(n, i);
  }
  return BitVector(n, out);
}

/// Applies a fixed permutation to many subsets using per-byte lookup tables.
class MaskAction {
 public:
  /// Maps the mask of S to the mask of sigma(S).
  explicit MaskAction(const Permutation& sigma) : n_(static_cast<int>(sigma.degree())) {
    if (n_ > 32) throw SearchCapExceeded("mask action limited to 32 points");
    chunks_ = (n_ + 7) / 8;
    tables_.assign(static_cast<std::size_t>(chunks_) * 256, 0);
    for (int c = 0; c < chunks_; ++c) {
      for (int byte = 0; byte < 256; ++byte) {
        Mask out = 0;
        for (int b = 0; b < 8; ++b) {
          const int bit = 8 * c + b;
          if (bit >= n_ || !((byte >> b) & 1)) continue;
          const int p = n_ - 1 - bit;
          out |= point_bit(n_, sigma(static_cast<std::size_t>(p)));
        }
        tables_[static_cast<std::size_t>(c) * 256 + static_cast<std::size_t>(byte)] = out;
      }
    }
  }

  Mask operator()(Mask set) const {
    Mask out = 0;
    for (int c = 0; c < chunks_; ++c) {
      out |= tables_[static_cast<std::size_t>(c) * 256 + ((set >> (8 * c)) & 0xFFu)];
    }
    return out;
  }

 private:
  int n_;
  int chunks_ = 0;
  std::vector<Mask> tables_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Point x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace boolsym

#endif  // BOOLSYM_PERMUTATION_HPP
