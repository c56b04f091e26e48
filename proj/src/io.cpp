#include "pipedreams/io.hpp"

#include <json.hpp>
#include <sstream>

namespace pipedreams {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

json poly_to_json(const SparsePoly& p) {
  json terms = json::array();
  for (const auto& [exps, coeff] : p.terms()) {
    json exp = json::object();
    for (size_t v = 0; v < exps.size(); ++v)
      if (exps[v] != 0) exp[std::to_string(v + 1)] = exps[v];
    terms.push_back({{"c", coeff}, {"exp", exp}});
  }
  return terms;
}

}  // namespace

std::string to_json(const PartialPermutation& f) {
  json dots = json::array();
  for (auto [i, j] : f.dots()) dots.push_back({i, j});
  json out = {{"n", f.n()}, {"dots", dots}};
  return out.dump();
}

std::string to_json(const BoundedAffinePermutation& j) {
  json out = {{"n", j.n()}, {"window", j.window()}};
  return out.dump();
}

std::string to_json(const Collection& c) {
  json bases = json::array();
  for (const auto& subset : c.subsets()) bases.push_back(subset);
  json out = {{"n", c.n()}, {"k", c.k()}, {"bases", bases}};
  return out.dump();
}

std::string to_json(const SchubertExpansion& e) {
  json terms = json::array();
  for (const auto& [lambda, coeff] : e.terms) {
    json term = {{"partition", lambda.parts()}};
    switch (e.mode) {
      case TheoryMode::H:
      case TheoryMode::K:
        term["coeff"] = {{"int", coeff.constant_value()}};
        break;
      case TheoryMode::HT:
        term["coeff"] = {{"poly", poly_to_json(coeff)}};
        break;
      case TheoryMode::KT:
        term["coeff"] = {{"laurent", poly_to_json(coeff)}};
        break;
    }
    terms.push_back(std::move(term));
  }
  json out = {{"mode", mode_name(e.mode)},
              {"k", e.k},
              {"n", e.n},
              {"terms", terms}};
  return out.dump();
}

std::string to_json(const PipeDream& p) {
  json tiles = json::array();
  auto word_json = [](const Word& w) {
    json arr = json::array();
    if (w.empty()) {
      arr.push_back("0");
      return arr;
    }
    for (Label l : w) arr.push_back(label_name(l));
    return arr;
  };
  for (int i = 1; i <= p.n(); ++i)
    for (int j = i; j <= p.n(); ++j) {
      const Tile& t = p.tile(i, j);
      tiles.push_back({{"i", i},
                       {"j", j},
                       {"south", label_name(t.south)},
                       {"east", word_json(t.east)},
                       {"north", label_name(t.north)},
                       {"west", word_json(t.west)}});
    }
  json out = {{"n", p.n()}, {"tiles", tiles}};
  return out.dump();
}

PartialPermutation partial_permutation_from_json(const std::string& text) {
  json in = json::parse(text);
  if (!in.contains("n") || !in.contains("dots")) fail("expected n and dots");
  std::vector<std::pair<int, int>> dots;
  for (const auto& d : in["dots"]) {
    if (!d.is_array() || d.size() != 2) fail("each dot must be a pair");
    dots.emplace_back(d[0].get<int>(), d[1].get<int>());
  }
  return PartialPermutation(in["n"].get<int>(), std::move(dots));
}

BoundedAffinePermutation pattern_from_json(const std::string& text) {
  json in = json::parse(text);
  if (!in.contains("window")) fail("expected a window");
  return BoundedAffinePermutation(in["window"].get<std::vector<long>>());
}

PartialPermutation variety_from_json(const std::string& text) {
  json in = json::parse(text);
  if (in.contains("dots")) return partial_permutation_from_json(text);
  if (in.contains("window")) {
    auto j = pattern_from_json(text);
    PartialPermutation f = j.left_half();
    if (extend_to_juggling(f) != j)
      fail("window does not name an interval positroid pattern");
    return f;
  }
  fail("expected dots or window");
}

std::string render_dream_ascii(const PipeDream& p) {
  // One 4-wide cell per box: north label centered on the top line, west and
  // east words on the middle line, south label on the bottom line.
  const int n = p.n();
  const int cell = 7;
  std::ostringstream out;
  for (int i = 1; i <= n; ++i) {
    std::string top(n * cell, ' '), mid(n * cell, ' '), bot(n * cell, ' ');
    for (int j = i; j <= n; ++j) {
      int base = (j - 1) * cell;
      const Tile& t = p.tile(i, j);
      top[base + cell / 2] = label_char(t.north);
      std::string w = word_name(t.west), e = word_name(t.east);
      for (size_t x = 0; x < w.size() && x + 1 < cell / 2; ++x)
        mid[base + x] = w[x];
      for (size_t x = 0; x < e.size() && x < cell / 2; ++x)
        mid[base + cell / 2 + 1 + x] = e[x];
      bot[base + cell / 2] = label_char(t.south);
    }
    out << top << '\n' << mid << '\n' << bot << '\n';
  }
  return out.str();
}

}  // namespace pipedreams
