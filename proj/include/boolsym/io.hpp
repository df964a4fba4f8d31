#ifndef BOOLSYM_IO_HPP
#define BOOLSYM_IO_HPP

// Text formats.
//
//   .grp   degree N
//          (1 2)(3 4)          one generator per line, fixed points omitted
//
//   .fn    vars N values K
//          0110 2              <bit string> <value>; unlisted masks are 0
//
// Blank lines and lines starting with '#' are ignored in both.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "boolsym/error.hpp"
#include "boolsym/function.hpp"
#include "boolsym/group.hpp"

namespace boolsym {

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> split_words(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

inline bool skippable(std::string_view line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string_view::npos || line[first] == '#';
}

inline std::uint64_t parse_count(const Token& t, std::size_t line) {
  std::uint64_t value = 0;
  const auto* end = t.text.data() + t.text.size();
  auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError(line, t.column, "expected a number");
  return value;
}

/// Reads lines until the first meaningful one; returns false at end of input.
inline bool next_line(std::istream& in, std::string& line, std::size_t& number) {
  while (std::getline(in, line)) {
    ++number;
    if (!skippable(line)) return true;
  }
  return false;
}

inline void expect_keyword(const std::vector<Token>& words, std::size_t index,
                           std::string_view keyword, std::size_t line) {
  if (index >= words.size() || words[index].text != keyword) {
    const std::size_t column = index < words.size() ? words[index].column : 1;
    throw ParseError(line, column, "expected '" + std::string(keyword) + "'");
  }
}

}  // namespace detail

inline PermutationGroup parse_group(std::istream& in, std::uint64_t order_cap = kDefaultOrderCap) {
  std::string line;
  std::size_t number = 0;
  if (!detail::next_line(in, line, number)) throw ParseError(number + 1, 1, "missing degree line");
  const auto header = detail::split_words(line);
  detail::expect_keyword(header, 0, "degree", number);
  if (header.size() != 2) throw ParseError(number, 1, "expected 'degree N'");
  const auto degree = detail::parse_count(header[1], number);
  if (degree > 4096) throw ParseError(number, header[1].column, "degree too large");

  std::vector<Permutation> gens;
  while (detail::next_line(in, line, number)) {
    try {
      gens.push_back(Permutation::parse(line, static_cast<std::size_t>(degree)));
    } catch (const ParseError& e) {
      throw ParseError(number, e.column(), e.reason());
    }
  }
  return PermutationGroup(static_cast<std::size_t>(degree), std::move(gens), order_cap);
}

inline KValuedFunction parse_function(std::istream& in) {
  std::string line;
  std::size_t number = 0;
  if (!detail::next_line(in, line, number)) throw ParseError(number + 1, 1, "missing header line");
  const auto header = detail::split_words(line);
  detail::expect_keyword(header, 0, "vars", number);
  detail::expect_keyword(header, 2, "values", number);
  if (header.size() != 4) throw ParseError(number, 1, "expected 'vars N values K'");
  const auto n = detail::parse_count(header[1], number);
  const auto k = detail::parse_count(header[3], number);
  if (n > static_cast<std::uint64_t>(kMaxMaskDegree)) {
    throw ParseError(number, header[1].column, "too many variables");
  }
  if (k < 2 || k > UINT32_MAX) throw ParseError(number, header[3].column, "values must be >= 2");

  KValuedFunction f(static_cast<int>(n), static_cast<Value>(k));
  std::vector<bool> seen(std::size_t{1} << n, false);
  while (detail::next_line(in, line, number)) {
    const auto words = detail::split_words(line);
    if (words.size() != 2) throw ParseError(number, 1, "expected '<bits> <value>'");
    BitVector x;
    try {
      x = BitVector::parse(words[0].text);
    } catch (const ParseError& e) {
      throw ParseError(number, words[0].column + e.column() - 1, e.reason());
    }
    if (static_cast<std::uint64_t>(x.length()) != n) {
      throw ParseError(number, words[0].column, "bit string length differs from vars");
    }
    const auto v = detail::parse_count(words[1], number);
    if (v >= k) throw ParseError(number, words[1].column, "value out of range");
    if (seen[x.bits()]) throw ParseError(number, words[0].column, "duplicate mask");
    seen[x.bits()] = true;
    f.set(x.bits(), static_cast<Value>(v));
  }
  return f;
}

namespace detail {

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return in;
}

}  // namespace detail

inline PermutationGroup read_group(const std::string& path,
                                   std::uint64_t order_cap = kDefaultOrderCap) {
  auto in = detail::open_input(path);
  return parse_group(in, order_cap);
}

inline KValuedFunction read_function(const std::string& path) {
  auto in = detail::open_input(path);
  return parse_function(in);
}

/// Degree line plus a greedy generating set.
inline std::string format_group(const PermutationGroup& g) {
  std::ostringstream out;
  out << "degree " << g.degree() << '\n';
  for (const auto& s : g.minimal_generators()) out << s.to_string() << '\n';
  return out.str();
}

/// Nonzero entries only, in mask order.
inline std::string format_function(const KValuedFunction& f) {
  std::ostringstream out;
  out << "vars " << f.n() << " values " << f.k() << '\n';
  for (std::size_t x = 0; x < f.table().size(); ++x) {
    if (f.table()[x] != 0) {
      out << mask_to_string(f.n(), static_cast<Mask>(x)) << ' ' << f.table()[x] << '\n';
    }
  }
  return out.str();
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("write failed for " + path);
}

}  // namespace boolsym

#endif  // BOOLSYM_IO_HPP
