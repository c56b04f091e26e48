// Command line interface: expand | dreams | puzzles | shift | matroid |
// monk | verify.  JSON is the interchange format; ASCII renderings are for
// humans.  Exit codes: 2 flag errors, 1 verification/computation failure,
// 0 otherwise.

#include <CLI11.hpp>
#include <iostream>

#include "pipedreams/classes.hpp"
#include "pipedreams/core.hpp"
#include "pipedreams/dreams.hpp"
#include "pipedreams/io.hpp"
#include "pipedreams/puzzles.hpp"
#include "pipedreams/scan.hpp"
#include "pipedreams/shifts.hpp"
#include "pipedreams/verify.hpp"

using namespace pipedreams;

namespace {

TheoryMode parse_mode(const std::string& name) {
  auto m = mode_from_name(name);
  if (!m) throw CLI::ValidationError("--mode", "expected H, HT, K or KT");
  return *m;
}

std::vector<int> parse_binary(const std::string& s) {
  std::vector<int> out;
  for (char c : s) {
    if (c != '0' && c != '1')
      throw CLI::ValidationError("boundary", "expected a 0/1 string");
    out.push_back(c - '0');
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  apply_thread_cap();
  CLI::App app{"Schubert-basis expansions of interval positroid varieties "
               "via pipe dreams"};
  app.require_subcommand(1);

  std::string perm_json, pattern_json, mode_name_arg = "KT", render;
  std::string nw, ne, ss, suite = "all";
  int flag_i = 0, flag_j = 0, row = 0, max_n = 0;
  bool equivariant = false;

  auto* cmd_expand = app.add_subcommand("expand", "Schubert-basis expansion");
  cmd_expand->add_option("--perm", perm_json, "variety JSON")->required();
  cmd_expand->add_option("--mode", mode_name_arg, "H, HT, K or KT");

  auto* cmd_dreams = app.add_subcommand("dreams", "list the pipe dreams");
  cmd_dreams->add_option("--perm", perm_json)->required();
  cmd_dreams->add_option("--mode", mode_name_arg);
  cmd_dreams->add_option("--render", render, "ascii for a picture per dream");

  auto* cmd_puzzles = app.add_subcommand("puzzles", "count puzzles");
  cmd_puzzles->add_option("--nw", nw)->required();
  cmd_puzzles->add_option("--ne", ne)->required();
  cmd_puzzles->add_option("--s", ss)->required();
  cmd_puzzles->add_flag("--equivariant", equivariant);

  auto* cmd_shift = app.add_subcommand("shift", "safe-shift decomposition");
  cmd_shift->add_option("--perm", perm_json)->required();
  cmd_shift->add_option("--i", flag_i)->required();
  cmd_shift->add_option("--j", flag_j)->required();

  auto* cmd_matroid = app.add_subcommand("matroid", "fixed-point bases");
  cmd_matroid->add_option("--perm", perm_json)->required();

  auto* cmd_monk = app.add_subcommand("monk", "Monk-formula components");
  cmd_monk->add_option("--pattern", pattern_json)->required();
  cmd_monk->add_option("--row", row)->required();

  auto* cmd_verify = app.add_subcommand("verify", "acceptance suites");
  cmd_verify->add_option("--suite", suite,
                         "figures|specialize|fusing|richardson|shifting|"
                         "oracle|all");
  cmd_verify->add_option("--max-n", max_n, "cap the scan sizes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_expand->parsed()) {
      auto f = variety_from_json(perm_json);
      std::cout << to_json(expand(f, parse_mode(mode_name_arg))) << '\n';
      return 0;
    }
    if (cmd_dreams->parsed()) {
      auto f = variety_from_json(perm_json);
      TheoryMode mode = parse_mode(mode_name_arg);
      for (const PipeDream& p : enumerate_dreams(f, mode)) {
        std::cout << to_json(p) << '\n';
        std::cout << "lambda " << p.lambda().to_string() << ", sign "
                  << (p.fusing() % 2 ? -1 : 1);
        if (mode == TheoryMode::HT)
          std::cout << ", weight " << wt_H(p).to_string();
        if (mode == TheoryMode::KT)
          std::cout << ", weight " << wt_K(p).to_string("E");
        std::cout << '\n';
        if (render == "ascii") std::cout << render_dream_ascii(p);
      }
      return 0;
    }
    if (cmd_puzzles->parsed()) {
      PuzzleBoundary b{parse_binary(nw), parse_binary(ne), parse_binary(ss)};
      auto puzzles = enumerate_puzzles(b, equivariant);
      std::cout << puzzles.size() << '\n';
      for (const auto& [z, w] : puzzles)
        std::cout << "weight " << w.to_string() << '\n'
                  << render_puzzle_ascii(z);
      return 0;
    }
    if (cmd_shift->parsed()) {
      auto f = variety_from_json(perm_json);
      auto dec = safe_shift_components(extend_to_juggling(f), flag_i, flag_j);
      std::cout << "sweep " << to_json(dec.sweep) << '\n';
      for (const auto& c : dec.components)
        std::cout << "component " << to_json(c) << '\n';
      for (const auto& [idx, pattern] : dec.intersections) {
        std::cout << "intersection {";
        for (size_t x = 0; x < idx.size(); ++x)
          std::cout << (x ? "," : "") << idx[x] + 1;
        std::cout << "} " << to_json(pattern) << '\n';
      }
      return 0;
    }
    if (cmd_matroid->parsed()) {
      auto f = variety_from_json(perm_json);
      std::cout << to_json(matroid_of(f)) << '\n';
      return 0;
    }
    if (cmd_monk->parsed()) {
      auto j = pattern_from_json(pattern_json);
      for (const auto& c : monk_components(j, row))
        std::cout << to_json(c) << '\n';
      return 0;
    }
    if (cmd_verify->parsed()) return run_suite(suite, max_n, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
