#ifndef BOOLSYM_CLOSURE_HPP
#define BOOLSYM_CLOSURE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "boolsym/error.hpp"
#include "boolsym/function.hpp"
#include "boolsym/group.hpp"
#include "boolsym/orbits.hpp"
#include "boolsym/symmetry.hpp"

namespace boolsym {

/// The canonical G-invariant function: value j on the j-th bit-vector orbit.
inline KValuedFunction orbit_function(const PermutationGroup& g) {
  const auto orbs = mask_orbits(g);
  const auto k = static_cast<Value>(std::max<std::size_t>(2, orbs.size()));
  std::vector<Value> table(orbs.block_of.begin(), orbs.block_of.end());
  return KValuedFunction(static_cast<int>(g.degree()), k, std::move(table));
}

/// Largest group with the same orbits on {0,1}^n as g.
inline PermutationGroup closure(const PermutationGroup& g,
                                std::uint64_t order_cap = kDefaultOrderCap) {
  return symmetry_group(orbit_function(g), order_cap);
}

enum class SearchStatus { kFound, kExhausted, kBudgetExceeded };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound: return "found";
    case SearchStatus::kExhausted: return "exhausted";
    case SearchStatus::kBudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

struct SearchOptions {
  std::uint64_t budget = std::uint64_t{1} << 20;
  unsigned threads = 1;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::kBudgetExceeded;
  std::uint64_t candidates = 0;  // candidates examined, witness included
  std::optional<KValuedFunction> witness;
};

namespace detail {

/// Tests one orbit colouring at a time, remembering permutations outside G
/// that broke earlier candidates so most later ones are rejected cheaply.
class CandidateChecker {
 public:
  CandidateChecker(const PermutationGroup& g, const OrbitPartition& orbs, Value k)
      : g_(g), orbs_(orbs), k_(k), n_(static_cast<int>(g.degree())) {}

  /// digits[j] is the value on orbit j; orbits past digits.size() get 0.
  std::optional<KValuedFunction> check(const std::vector<Value>& digits) {
    auto digit = [&](std::size_t j) -> Value { return j < digits.size() ? digits[j] : 0; };
    for (const auto& r : rejectors_) {
      if (r.orbit_map) {
        bool preserved = true;
        for (std::size_t j = 0; j < r.orbit_map->size() && preserved; ++j) {
          preserved = digit((*r.orbit_map)[j]) == digit(j);
        }
        if (preserved) return std::nullopt;
      }
    }
    KValuedFunction f = build(digits);
    for (const auto& r : rejectors_) {
      if (!r.orbit_map && is_invariant(f, r.perm)) return std::nullopt;
    }
    auto found = symmetry_generators(f);
    if (found.order == g_.order()) return f;
    for (const auto& s : found.generators) {
      if (!g_.contains(s)) {
        remember(s);
        break;
      }
    }
    return std::nullopt;
  }

 private:
  struct Rejector {
    Permutation perm;
    std::optional<std::vector<std::uint32_t>> orbit_map;
  };

  KValuedFunction build(const std::vector<Value>& digits) const {
    std::vector<Value> table(orbs_.block_of.size(), 0);
    for (std::size_t x = 0; x < table.size(); ++x) {
      const auto j = orbs_.block_of[x];
      table[x] = j < digits.size() ? digits[j] : 0;
    }
    return KValuedFunction(n_, k_, std::move(table));
  }

  void remember(const Permutation& s) {
    const MaskAction image(s);
    std::vector<std::uint32_t> map(orbs_.size());
    bool respects = true;
    for (std::size_t j = 0; j < orbs_.size() && respects; ++j) {
      const auto& block = orbs_.blocks[j];
      const auto target = orbs_.block_of[image(block.front())];
      for (auto x : block) {
        if (orbs_.block_of[image(x)] != target) {
          respects = false;
          break;
        }
      }
      map[j] = target;
    }
    rejectors_.push_back(
        Rejector{s, respects ? std::optional(std::move(map)) : std::nullopt});
  }

  const PermutationGroup& g_;
  const OrbitPartition& orbs_;
  Value k_;
  int n_;
  std::vector<Rejector> rejectors_;
};

inline std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out *= base;
  }
  return out;
}

inline std::vector<Value> candidate_digits(std::uint64_t index, Value k, std::size_t orbits) {
  std::vector<Value> digits;
  while (index > 0 && digits.size() < orbits) {
    digits.push_back(static_cast<Value>(index % k));
    index /= k;
  }
  return digits;
}

/// Candidate i assigns orbit j the j-th base-k digit of i (orbit 0 least
/// significant). Results do not depend on the thread count: every batch
/// reports its smallest successful index.
inline SearchOutcome search_colourings(const PermutationGroup& g, Value k,
                                       const SearchOptions& options) {
  if (k < 2) throw PreconditionViolation("search needs k >= 2");
  const auto orbs = mask_orbits(g);
  const std::uint64_t total = saturating_pow(k, orbs.size());
  const std::uint64_t limit = std::min(total, options.budget);
  const unsigned threads = std::max(1u, options.threads);

  SearchOutcome out;
  std::vector<CandidateChecker> checkers;
  for (unsigned t = 0; t < threads; ++t) checkers.emplace_back(g, orbs, k);

  // With enough values the all-distinct colouring is tried before the
  // enumeration; it succeeds exactly when g is closed.
  if (k >= orbs.size() && limit > 0) {
    std::vector<Value> distinct(orbs.size());
    std::iota(distinct.begin(), distinct.end(), Value{0});
    if (auto f = checkers[0].check(distinct)) {
      out.status = SearchStatus::kFound;
      out.candidates = 1;
      out.witness = std::move(f);
      return out;
    }
  }

  if (threads == 1) {
    for (std::uint64_t i = 0; i < limit; ++i) {
      if (auto f = checkers[0].check(candidate_digits(i, k, orbs.size()))) {
        out.status = SearchStatus::kFound;
        out.candidates = i + 1;
        out.witness = std::move(f);
        return out;
      }
    }
  } else {
    const std::uint64_t batch = 64 * threads;
    for (std::uint64_t start = 0; start < limit; start += batch) {
      const std::uint64_t stop = std::min(limit, start + batch);
      std::vector<std::uint64_t> best(threads, stop);
      std::vector<std::optional<KValuedFunction>> found(threads);
      {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
          pool.emplace_back([&, t] {
            for (std::uint64_t i = start + t; i < stop; i += threads) {
              if (auto f = checkers[t].check(candidate_digits(i, k, orbs.size()))) {
                best[t] = i;
                found[t] = std::move(f);
                return;
              }
            }
          });
        }
      }
      const auto it = std::min_element(best.begin(), best.end());
      if (*it < stop) {
        const auto t = static_cast<std::size_t>(it - best.begin());
        out.status = SearchStatus::kFound;
        out.candidates = *it + 1;
        out.witness = std::move(found[t]);
        return out;
      }
    }
  }
  out.candidates = limit;
  out.status = limit == total ? SearchStatus::kExhausted : SearchStatus::kBudgetExceeded;
  return out;
}

}  // namespace detail

/// Looks for a union of bit-vector orbits whose indicator has symmetry group
/// exactly g. Exhausted means all 2^(#orbits) unions were tried.
inline SearchOutcome search_2rep(const PermutationGroup& g, const SearchOptions& options = {}) {
  return detail::search_colourings(g, 2, options);
}

/// Same over all assignments of k values to the bit-vector orbits. When k is
/// at least the orbit count the all-distinct colouring is tried first.
inline SearchOutcome search_krep(const PermutationGroup& g, Value k,
                                 const SearchOptions& options = {}) {
  if (k < 2) throw PreconditionViolation("search_krep needs k >= 2");
  return detail::search_colourings(g, k, options);
}

/// Random unions of bit-vector orbits, drawn from a fixed seed so the result
/// is reproducible. Never reports Exhausted: a miss proves nothing.
inline SearchOutcome sample_2rep(const PermutationGroup& g, std::uint64_t tries,
                                 std::uint64_t seed = 1) {
  if (g.degree() > static_cast<std::size_t>(kMaxSearchDegree)) {
    throw SearchCapExceeded("sampling limited to " + std::to_string(kMaxSearchDegree) + " points");
  }
  const auto orbs = mask_orbits(g);
  detail::CandidateChecker checker(g, orbs, 2);
  std::mt19937_64 rng(seed);
  std::vector<Value> digits(orbs.size());
  SearchOutcome out;
  for (std::uint64_t t = 0; t < tries; ++t) {
    for (auto& d : digits) d = static_cast<Value>(rng() & 1);
    ++out.candidates;
    if (auto f = checker.check(digits)) {
      out.status = SearchStatus::kFound;
      out.witness = std::move(f);
      return out;
    }
  }
  return out;
}

}  // namespace boolsym

#endif  // BOOLSYM_CLOSURE_HPP
