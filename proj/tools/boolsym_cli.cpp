#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "boolsym/boolsym.hpp"

namespace {

using namespace boolsym;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

struct Flags {
  std::uint64_t budget = std::uint64_t{1} << 20;
  std::uint64_t order_cap = kDefaultOrderCap;
  unsigned threads = 1;
  std::string out;
};

void report(const std::string& key, const std::string& value) {
  std::cout << key << '=' << value << '\n';
}

void report(const std::string& key, std::uint64_t value) { report(key, std::to_string(value)); }

void report_generators(const PermutationGroup& g) {
  for (const auto& s : g.minimal_generators()) report("generator", s.to_string());
}

void report_point_orbits(const PermutationGroup& g) {
  for (const auto& orbit : point_orbits(g)) report("point_orbit", format_points(orbit));
}

/// Writes f to --out when given, otherwise lists its nonzero entries.
void report_witness(const KValuedFunction& f, const Flags& flags) {
  if (!flags.out.empty()) {
    write_text(flags.out, format_function(f));
    report("witness", flags.out);
    return;
  }
  report("witness_values", f.k());
  for (std::size_t x = 0; x < f.table().size(); ++x) {
    if (f.table()[x] != 0) {
      report("witness_entry", mask_to_string(f.n(), static_cast<Mask>(x)) + " " +
                                  std::to_string(f.table()[x]));
    }
  }
}

/// Constructions print a plain .fn file unless --out is given.
void emit_function(const KValuedFunction& f, const Flags& flags) {
  if (flags.out.empty()) {
    std::cout << format_function(f);
    return;
  }
  write_text(flags.out, format_function(f));
  report("wrote", flags.out);
  report("variables", static_cast<std::uint64_t>(f.n()));
}

SearchOptions search_options(const Flags& flags) {
  SearchOptions opt;
  opt.budget = flags.budget;
  opt.threads = flags.threads;
  return opt;
}

int report_search(const SearchOutcome& found, const Flags& flags) {
  report("status", to_string(found.status));
  report("candidates", found.candidates);
  if (found.witness) {
    report_witness(*found.witness, flags);
    return kExitOk;
  }
  return kExitNegative;
}

QuotientIso pick_iso(const QuotientGroup& a, const QuotientGroup& b, std::size_t index) {
  const auto isos = quotient_isomorphisms(a, b);
  if (index >= isos.size()) {
    throw InvalidIsomorphism("isomorphism index " + std::to_string(index) + " but only " +
                             std::to_string(isos.size()) + " exist");
  }
  return isos[index];
}

PermutationGroup cyclic_kernel(std::size_t i, bool half) {
  if (!half) return trivial_group(i);
  if (i != 4) throw PreconditionViolation("the half kernel exists only for i = 4");
  return detail::klein_kernel_of_c4();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry groups of boolean functions: search, closure, constructions, classification"};
  app.fallthrough();
  app.require_subcommand(1);
  Flags flags;
  app.add_option("--budget", flags.budget, "Candidate budget for searches")->check(CLI::PositiveNumber);
  app.add_option("--order-cap", flags.order_cap, "Largest group order materialized")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", flags.threads, "Worker threads for searches")->check(CLI::Range(1u, 256u));
  app.add_option("--out", flags.out, "Output file");

  std::function<int()> action;
  auto on = [&](CLI::App* sub, std::function<int()> body) {
    sub->callback([&action, body = std::move(body)] { action = body; });
  };

  std::string fn_path, fn2_path, grp_path, grp2_path, grp3_path, sum_path, name;
  std::string domain = "points";
  std::size_t iso_index = 0, cyc = 3, offset = 0;
  std::uint32_t k = 3, r = 2;
  bool weight2 = false, omit_second = false, half_kernel = false, do_certify = false;

  auto* symmetry = app.add_subcommand("symmetry", "Symmetry group of a function");
  symmetry->add_option("function", fn_path, "Function file (.fn)")->required()->check(CLI::ExistingFile);
  on(symmetry, [&] {
    const auto f = read_function(fn_path);
    const auto g = symmetry_group(f, flags.order_cap);
    report("degree", g.degree());
    report("values", f.k());
    report("order", g.order());
    report_generators(g);
    report_point_orbits(g);
    if (!flags.out.empty()) write_text(flags.out, format_group(g));
    return kExitOk;
  });

  auto* closure_cmd = app.add_subcommand("closure", "Largest group with the same orbits on bit vectors");
  closure_cmd->add_option("group", grp_path, "Group file (.grp)")->required()->check(CLI::ExistingFile);
  on(closure_cmd, [&] {
    const auto g = read_group(grp_path, flags.order_cap);
    const auto c = closure(g, flags.order_cap);
    report("degree", g.degree());
    report("order", g.order());
    report("closure_order", c.order());
    report("closed", c == g ? "yes" : "no");
    report_generators(c);
    if (!flags.out.empty()) write_text(flags.out, format_group(c));
    return kExitOk;
  });

  auto* orbits_cmd = app.add_subcommand("orbits", "Orbits on points or on bit vectors");
  orbits_cmd->add_option("group", grp_path, "Group file (.grp)")->required()->check(CLI::ExistingFile);
  orbits_cmd->add_option("--domain", domain, "points or bitvectors")
      ->check(CLI::IsMember({"points", "bitvectors"}));
  on(orbits_cmd, [&] {
    const auto g = read_group(grp_path, flags.order_cap);
    if (domain == "points") {
      const auto orbs = point_orbits(g);
      report("orbit_count", orbs.size());
      report_point_orbits(g);
      return kExitOk;
    }
    const auto part = mask_orbits(g);
    report("orbit_count", part.size());
    for (const auto& block : part.blocks) {
      std::string line;
      for (Mask x : block) line += (line.empty() ? "" : " ") + mask_to_string(static_cast<int>(g.degree()), x);
      report("orbit", line);
    }
    return kExitOk;
  });

  auto* classify = app.add_subcommand("classify", "Representability of a subgroup of a sum of regular groups");
  classify->add_option("group", grp_path, "Group file (.grp)")->required()->check(CLI::ExistingFile);
  classify->add_option("sum", sum_path, "Sum description (.sum)")->required()->check(CLI::ExistingFile);
  classify->add_flag("--certify", do_certify, "Check the verdict independently");
  on(classify, [&] {
    const auto a = read_group(grp_path, flags.order_cap);
    const auto b = SumExpression::read(sum_path, flags.order_cap);
    ClassifyOptions opt;
    opt.search_budget = flags.budget;
    const auto c = classify_in_regular_sum(a, b, opt);
    report("verdict", to_string(c.verdict));
    report("reason", c.reason);
    if (!c.detail.empty()) report("detail", c.detail);
    if (c.closure) report("closure_order", c.closure->order());
    if (c.witness_omitted) report("witness", "omitted");
    if (c.witness) report_witness(*c.witness, flags);
    if (do_certify) report("certificate", to_string(certify(a, c, search_options(flags))));
    return kExitOk;
  });

  auto* construct = app.add_subcommand("construct", "Build a function with a prescribed symmetry group");
  construct->require_subcommand(1);

  auto* theorem3 = construct->add_subcommand("theorem3", "Direct-sum function of g and h");
  theorem3->add_option("g-function", fn_path, "First factor (.fn)")->required()->check(CLI::ExistingFile);
  theorem3->add_option("h-function", fn2_path, "Second factor (.fn)")->required()->check(CLI::ExistingFile);
  theorem3->add_option("--r", r, "Output value count; r*r must cover the inputs' values")
      ->check(CLI::Range(2u, 1u << 16));
  theorem3->add_flag("--weight2", weight2, "Use weight 2 for the mixed level");
  theorem3->add_flag("--omit-second-projection", omit_second, "Drop the cases reading pi2(h)");
  on(theorem3, [&] {
    DirectSumOptions opt;
    opt.variant = weight2 ? WeightVariant::kWeight2 : WeightVariant::kWeight1;
    opt.omit_second_projection = omit_second;
    emit_function(theorem3_build(read_function(fn_path), read_function(fn2_path), r, opt), flags);
    return kExitOk;
  });

  auto* lemma1_m1 = construct->add_subcommand("lemma1-m1", "C_i over a regular H modulo N");
  lemma1_m1->add_option("cycle-length", cyc, "Cycle length 3, 4 or 5")->required();
  lemma1_m1->add_option("H-group", grp_path, "Regular group (.grp)")->required()->check(CLI::ExistingFile);
  lemma1_m1->add_option("h-function", fn_path, "2-valued function invariant under H")->required()->check(CLI::ExistingFile);
  lemma1_m1->add_option("N-group", grp2_path, "Normal subgroup with H/N cyclic of order i")
      ->required()->check(CLI::ExistingFile);
  lemma1_m1->add_option("--iso", iso_index, "Index into the quotient isomorphisms");
  on(lemma1_m1, [&] {
    const auto h = read_group(grp_path, flags.order_cap);
    const auto n = read_group(grp2_path, flags.order_cap);
    const auto w = RegularWitness::make(h, read_function(fn_path), n);
    const auto phi = pick_iso(quotient(cyclic_group(cyc), trivial_group(cyc)), quotient(h, n), iso_index);
    emit_function(from_support(lemma1_build_m1(cyc, w, phi)), flags);
    return kExitOk;
  });

  auto* lemma1_c4 = construct->add_subcommand("lemma1-c4", "C_4 modulo {1,(1 3)(2 4)} over H modulo N");
  lemma1_c4->add_option("H-group", grp_path, "Regular group (.grp)")->required()->check(CLI::ExistingFile);
  lemma1_c4->add_option("h-function", fn_path, "2-valued function invariant under H")->required()->check(CLI::ExistingFile);
  lemma1_c4->add_option("N-group", grp2_path, "Normal subgroup of index 2")->required()->check(CLI::ExistingFile);
  lemma1_c4->add_option("--iso", iso_index, "Index into the quotient isomorphisms");
  on(lemma1_c4, [&] {
    const auto h = read_group(grp_path, flags.order_cap);
    const auto n = read_group(grp2_path, flags.order_cap);
    const auto w = RegularWitness::make(h, read_function(fn_path), n);
    const auto phi = pick_iso(quotient(cyclic_group(4), detail::klein_kernel_of_c4()), quotient(h, n),
                              iso_index);
    emit_function(from_support(lemma1_build_c4(w, phi)), flags);
    return kExitOk;
  });

  auto* lemma2 = construct->add_subcommand("lemma2", "C_i tied to one regular factor of H");
  lemma2->add_option("cycle-length", cyc, "Cycle length 3, 4 or 5")->required();
  lemma2->add_option("H-group", grp_path, "Whole group H (.grp)")->required()->check(CLI::ExistingFile);
  lemma2->add_option("h-function", fn_path, "2-valued witness for H")->required()->check(CLI::ExistingFile);
  lemma2->add_option("H1-group", grp2_path, "Regular factor of H (.grp)")->required()->check(CLI::ExistingFile);
  lemma2->add_option("N1-group", grp3_path, "Normal subgroup of H1")->required()->check(CLI::ExistingFile);
  lemma2->add_option("--offset", offset, "Number of points of H before H1");
  lemma2->add_flag("--half-kernel", half_kernel, "Cyclic kernel {1,(1 3)(2 4)} (i = 4)");
  lemma2->add_option("--iso", iso_index, "Index into the quotient isomorphisms");
  on(lemma2, [&] {
    const auto h = read_group(grp_path, flags.order_cap);
    const auto h1 = read_group(grp2_path, flags.order_cap);
    const auto n1 = read_group(grp3_path, flags.order_cap);
    const auto m = cyclic_kernel(cyc, half_kernel);
    const auto w = RegularWitness::make(h, read_function(fn_path));
    const auto phi = pick_iso(quotient(cyclic_group(cyc), m), quotient(h1, n1), iso_index);
    emit_function(from_support(lemma2_build(cyc, m, w, offset, h1, n1, phi)), flags);
    return kExitOk;
  });

  auto* lemma5 = construct->add_subcommand("lemma5", "Subgroup A of G (+) H via a regular selector");
  lemma5->add_option("A-group", grp_path, "Target group (.grp)")->required()->check(CLI::ExistingFile);
  lemma5->add_option("G-group", grp2_path, "First summand (.grp)")->required()->check(CLI::ExistingFile);
  lemma5->add_option("g-function", fn_path, "Witness for G, at most 4-valued")->required()->check(CLI::ExistingFile);
  lemma5->add_option("H-group", grp3_path, "Second summand (.grp)")->required()->check(CLI::ExistingFile);
  lemma5->add_option("h-function", fn2_path, "Witness for H, at most 4-valued")->required()->check(CLI::ExistingFile);
  on(lemma5, [&] {
    const auto rel = lemma5_build(read_group(grp_path, flags.order_cap), read_group(grp2_path, flags.order_cap),
                                  read_function(fn_path), read_group(grp3_path, flags.order_cap),
                                  read_function(fn2_path));
    emit_function(from_support(rel), flags);
    return kExitOk;
  });

  auto* lemma6 = construct->add_subcommand("lemma6", "Subgroup A of C_2 (+) H");
  lemma6->add_option("A-group", grp_path, "Target group (.grp)")->required()->check(CLI::ExistingFile);
  lemma6->add_option("H-group", grp2_path, "Second summand (.grp)")->required()->check(CLI::ExistingFile);
  lemma6->add_option("h-function", fn_path, "2-valued witness for H; omit when H = K_4")->check(CLI::ExistingFile);
  on(lemma6, [&] {
    std::optional<KValuedFunction> h;
    if (!fn_path.empty()) h = read_function(fn_path);
    const auto rel = lemma6_build(read_group(grp_path, flags.order_cap),
                                  read_group(grp2_path, flags.order_cap), h);
    emit_function(from_support(rel), flags);
    return kExitOk;
  });

  auto* fixture_cmd = construct->add_subcommand("fixture", "A named fixture function");
  fixture_cmd->add_option("name", name, "Fixture name")->required();
  on(fixture_cmd, [&] {
    emit_function(fixture(name), flags);
    return kExitOk;
  });

  auto* verify = app.add_subcommand("verify", "Whether a function's symmetry group equals a group");
  verify->add_option("group", grp_path, "Group file (.grp)")->required()->check(CLI::ExistingFile);
  verify->add_option("function", fn_path, "Function file (.fn)")->required()->check(CLI::ExistingFile);
  on(verify, [&] {
    const auto g = read_group(grp_path, flags.order_cap);
    const auto f = read_function(fn_path);
    if (static_cast<std::size_t>(f.n()) != g.degree()) throw DegreeMismatch("group and function differ in degree");
    const auto s = symmetry_group(f, flags.order_cap);
    report("group_order", g.order());
    report("function_order", s.order());
    const bool equal = s == g;
    report("equal", equal ? "yes" : "no");
    return equal ? kExitOk : kExitNegative;
  });

  auto* search2 = app.add_subcommand("search-2rep", "Search unions of orbits for a 2-valued witness");
  search2->add_option("group", grp_path, "Group file (.grp)")->required()->check(CLI::ExistingFile);
  on(search2, [&] {
    return report_search(search_2rep(read_group(grp_path, flags.order_cap), search_options(flags)), flags);
  });

  auto* searchk = app.add_subcommand("search-krep", "Search orbit colourings for a k-valued witness");
  searchk->add_option("group", grp_path, "Group file (.grp)")->required()->check(CLI::ExistingFile);
  searchk->add_option("--k", k, "Number of values")->check(CLI::Range(2u, 1u << 16));
  on(searchk, [&] {
    return report_search(search_krep(read_group(grp_path, flags.order_cap), k, search_options(flags)),
                         flags);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }
  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "error=parse: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error=" << e.what() << '\n';
  }
  return kExitError;
}
