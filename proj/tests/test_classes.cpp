#include <doctest.h>

#include <random>
#include <set>

#include "pipedreams/classes.hpp"
#include "pipedreams/core.hpp"
#include "pipedreams/dreams.hpp"

using namespace pipedreams;

namespace {

const PartialPermutation kFigure(4, {{1, 2}, {3, 4}});

SparsePoly random_poly(std::mt19937& rng, int n, bool laurent) {
  std::uniform_int_distribution<int> coeff(-4, 4), expo(laurent ? -2 : 0, 2),
      terms(0, 4);
  SparsePoly p(n);
  int t = terms(rng);
  for (int x = 0; x < t; ++x) {
    std::vector<int> e(n);
    for (int v = 0; v < n; ++v) e[v] = expo(rng);
    p.add_term(e, coeff(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("sparse polynomial ring laws") {
  std::mt19937 rng(7);
  for (int rep = 0; rep < 200; ++rep) {
    bool laurent = rep % 2;
    SparsePoly a = random_poly(rng, 3, laurent);
    SparsePoly b = random_poly(rng, 3, laurent);
    SparsePoly c = random_poly(rng, 3, laurent);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == SparsePoly(3));
    CHECK(a * SparsePoly::constant(3, 1) == a);
  }
}

TEST_CASE("polynomial printing uses graded lexicographic order") {
  SparsePoly p = y_minus_y(3, 1, 3) * y_minus_y(3, 1, 2) +
                 SparsePoly::constant(3, 2);
  CHECK(p.to_string() == "2 + y2*y3 - y1*y3 - y1*y2 + y1^2");
}

TEST_CASE("weights of the figure dreams") {
  auto ht = enumerate_dreams(kFigure, TheoryMode::HT);
  std::multiset<std::string> weights;
  for (const auto& p : ht) weights.insert(wt_H(p).to_string());
  CHECK(weights == std::multiset<std::string>{"1", "1", "y1 - y2", "y2 - y4"});

  // the K_T weights per the tile-local definition
  auto kt = enumerate_dreams(kFigure, TheoryMode::KT);
  std::multiset<std::string> kweights;
  for (const auto& p : kt) kweights.insert(wt_K(p).to_string("E"));
  auto one = SparsePoly::constant(4, 1);
  std::multiset<std::string> expect{
      exp_y_minus_y(4, 4, 2).to_string("E"),
      (one - exp_y_minus_y(4, 4, 2)).to_string("E"),
      exp_y_minus_y(4, 4, 1).to_string("E"),
      exp_y_minus_y(4, 4, 1).to_string("E"),
      (exp_y_minus_y(4, 4, 2) - exp_y_minus_y(4, 4, 1)).to_string("E"),
      (exp_y_minus_y(4, 4, 2) - exp_y_minus_y(4, 4, 1)).to_string("E")};
  CHECK(kweights == expect);
}

TEST_CASE("wt_H rejects fused dreams") {
  for (const auto& p : enumerate_dreams(kFigure, TheoryMode::KT))
    if (p.fusing() > 0) {
      CHECK_THROWS(wt_H(p));
      return;
    }
  FAIL("no fused dream found");
}

TEST_CASE("expansions of the whole Grassmannian") {
  for (int n = 1; n <= 4; ++n) {
    auto f = PartialPermutation::empty(n);
    for (auto mode : {TheoryMode::H, TheoryMode::HT, TheoryMode::K,
                      TheoryMode::KT}) {
      auto e = expand(f, mode);
      REQUIRE(e.terms.size() == 1);
      // k = n, so the full k x (n-k) box is the empty partition
      CHECK(e.terms.begin()->first == Partition{});
      CHECK(e.terms.begin()->second == SparsePoly::constant(n, 1));
    }
  }
}

TEST_CASE("expansion of a point") {
  auto e = expand(PartialPermutation::identity(3), TheoryMode::KT);
  REQUIRE(e.terms.size() == 1);
  CHECK(e.terms.begin()->first == Partition{});
  CHECK(e.terms.begin()->second == SparsePoly::constant(3, 1));
}

TEST_CASE("HT coefficients are homogeneous of the right degree") {
  for (const auto& f : all_partial_permutations(4)) {
    long dim = variety_dimension(f);
    auto e = expand(f, TheoryMode::HT);
    for (const auto& [lam, coeff] : e.terms) {
      int degree = lam.size() - static_cast<int>(dim);
      CHECK(coeff.homogeneous_part(degree) == coeff);
    }
  }
}

TEST_CASE("K coefficients alternate in sign with codimension") {
  for (const auto& f : all_partial_permutations(4)) {
    long dim = variety_dimension(f);
    auto e = expand(f, TheoryMode::K);
    for (const auto& [lam, coeff] : e.terms) {
      long long c = coeff.constant_value();
      CHECK(((dim - lam.size()) % 2 == 0 ? c > 0 : c < 0));
    }
  }
}

TEST_CASE("specializations agree with direct expansions") {
  for (const auto& f : all_partial_permutations(4)) {
    auto e = expand_with_records(f, TheoryMode::KT);
    CHECK(specialize_KT_to_K(e.expansion) == expand(f, TheoryMode::K));
    CHECK(specialize_KT_to_HT(e) == expand(f, TheoryMode::HT));
  }
  CHECK_THROWS(specialize_KT_to_K(expand(kFigure, TheoryMode::H)));
}

TEST_CASE("graham positivity of HT expansions") {
  auto e = expand_with_records(kFigure, TheoryMode::HT);
  auto report = check_graham_positive(e);
  CHECK(report.positive);
  CHECK(report.violations.empty());
  for (const auto& f : all_partial_permutations(4))
    CHECK(check_graham_positive(expand_with_records(f, TheoryMode::HT))
              .positive);
}

TEST_CASE("per-dream records carry signs and weights") {
  auto e = expand_with_records(kFigure, TheoryMode::KT);
  REQUIRE(e.records.size() == 6);
  int fused = 0;
  for (const auto& rec : e.records) {
    CHECK(rec.sign == (rec.fusing % 2 ? -1 : 1));
    if (rec.fusing > 0) ++fused;
  }
  CHECK(fused == 2);
}

TEST_CASE("substitution extracts exact bottom degrees") {
  // 1 - exp(y2 - y1) has bottom degree part y1 - y2
  auto p = SparsePoly::constant(3, 1) - exp_y_minus_y(3, 2, 1);
  CHECK(p.substitute_one_plus_y(1).homogeneous_part(1) == y_minus_y(3, 1, 2));
  // and the product of two such factors doubles the degree
  auto q = (SparsePoly::constant(3, 1) - exp_y_minus_y(3, 2, 1)) *
           (SparsePoly::constant(3, 1) - exp_y_minus_y(3, 3, 2));
  CHECK(q.substitute_one_plus_y(2).homogeneous_part(2) ==
        y_minus_y(3, 1, 2) * y_minus_y(3, 2, 3));
}
