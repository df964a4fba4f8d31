#ifndef BOOLSYM_SUM_EXPRESSION_HPP
#define BOOLSYM_SUM_EXPRESSION_HPP

// A (sub)direct sum written in postfix form, one step per line:
//
//   leaf <grp-path> [kernel <grp-path>]   push a group, with a normal subgroup
//                                         used if it takes part in a join
//   join <iso-index> [kernel <grp-path>]  pop b, pop a, push a/N_a (+)_phi b/N_b
//                                         with phi the iso-index-th entry of
//                                         quotient_isomorphisms(a/N_a, b/N_b)
//
// A missing kernel means the whole group (trivial quotient). Whatever remains
// on the stack is direct-summed from the bottom up. Paths are relative to the
// directory of the file being read.

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "boolsym/error.hpp"
#include "boolsym/group.hpp"
#include "boolsym/io.hpp"
#include "boolsym/quotient.hpp"

namespace boolsym {

struct SumLeaf {
  PermutationGroup group;
  std::size_t offset = 0;  // first point of this leaf in the evaluated base set
};

class SumExpression {
 public:
  struct Step {
    enum class Kind { kLeaf, kJoin } kind = Kind::kLeaf;
    std::optional<PermutationGroup> group;   // leaves only
    std::optional<PermutationGroup> kernel;
    std::size_t iso_index = 0;               // joins only
  };

  SumExpression() = default;
  explicit SumExpression(std::vector<Step> steps) : steps_(std::move(steps)) { evaluate(); }

  /// Plain direct sum of the given groups.
  static SumExpression direct(const std::vector<PermutationGroup>& parts) {
    std::vector<Step> steps;
    for (const auto& g : parts) steps.push_back(Step{Step::Kind::kLeaf, g, std::nullopt, 0});
    return SumExpression(std::move(steps));
  }

  static SumExpression parse(std::istream& in, const std::filesystem::path& base_dir,
                             std::uint64_t order_cap = kDefaultOrderCap) {
    std::vector<Step> steps;
    std::string line;
    std::size_t number = 0;
    auto load = [&](const detail::Token& t) {
      try {
        return read_group((base_dir / std::string(t.text)).string(), order_cap);
      } catch (const ParseError& e) {
        throw ParseError(number, t.column, std::string(t.text) + ": " + e.what());
      } catch (const Error& e) {
        throw ParseError(number, t.column, e.what());
      }
    };
    while (detail::next_line(in, line, number)) {
      const auto words = detail::split_words(line);
      Step step;
      if (words[0].text == "leaf") {
        if (words.size() < 2) throw ParseError(number, words[0].column, "leaf needs a path");
        step.kind = Step::Kind::kLeaf;
        step.group = load(words[1]);
      } else if (words[0].text == "join") {
        if (words.size() < 2) throw ParseError(number, words[0].column, "join needs an index");
        step.kind = Step::Kind::kJoin;
        step.iso_index = static_cast<std::size_t>(detail::parse_count(words[1], number));
      } else {
        throw ParseError(number, words[0].column, "expected 'leaf' or 'join'");
      }
      if (words.size() > 2) {
        detail::expect_keyword(words, 2, "kernel", number);
        if (words.size() != 4) throw ParseError(number, words[2].column, "kernel needs a path");
        step.kernel = load(words[3]);
      }
      steps.push_back(std::move(step));
    }
    if (steps.empty()) throw ParseError(number + 1, 1, "empty sum description");
    try {
      return SumExpression(std::move(steps));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(number, 1, e.what());
    }
  }

  static SumExpression read(const std::string& path, std::uint64_t order_cap = kDefaultOrderCap) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return parse(in, std::filesystem::path(path).parent_path(), order_cap);
  }

  const std::vector<Step>& steps() const noexcept { return steps_; }

  std::vector<SumLeaf> leaves() const {
    std::vector<SumLeaf> out;
    std::size_t offset = 0;
    for (const auto& s : steps_) {
      if (s.kind != Step::Kind::kLeaf) continue;
      out.push_back(SumLeaf{*s.group, offset});
      offset += s.group->degree();
    }
    return out;
  }

  std::size_t degree() const {
    std::size_t n = 0;
    for (const auto& leaf : leaves()) n += leaf.group.degree();
    return n;
  }

  PermutationGroup evaluate(std::uint64_t order_cap = kDefaultOrderCap) const {
    struct Item {
      PermutationGroup group;
      PermutationGroup kernel;
    };
    std::vector<Item> stack;
    for (const auto& s : steps_) {
      if (s.kind == Step::Kind::kLeaf) {
        stack.push_back(Item{*s.group, s.kernel.value_or(*s.group)});
        continue;
      }
      if (stack.size() < 2) throw PreconditionViolation("join needs two operands");
      Item b = std::move(stack.back());
      stack.pop_back();
      Item a = std::move(stack.back());
      stack.pop_back();
      const auto qa = quotient(a.group, a.kernel);
      const auto qb = quotient(b.group, b.kernel);
      const auto isos = quotient_isomorphisms(qa, qb);
      if (s.iso_index >= isos.size()) {
        throw InvalidIsomorphism("join index " + std::to_string(s.iso_index) + " but only " +
                                 std::to_string(isos.size()) + " isomorphisms exist");
      }
      auto joined = subdirect_sum(qa, qb, isos[s.iso_index]);
      auto kernel = s.kernel.value_or(joined);
      stack.push_back(Item{std::move(joined), std::move(kernel)});
    }
    std::vector<PermutationGroup> parts;
    for (auto& item : stack) parts.push_back(std::move(item.group));
    return direct_sum(parts, order_cap);
  }

 private:
  std::vector<Step> steps_;
};

}  // namespace boolsym

#endif  // BOOLSYM_SUM_EXPRESSION_HPP
