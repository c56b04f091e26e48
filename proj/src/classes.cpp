#include "pipedreams/classes.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pipedreams {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

int total_degree(const std::vector<int>& exps) {
  return std::accumulate(exps.begin(), exps.end(), 0);
}

}  // namespace

bool SparsePoly::GradedLex::operator()(const std::vector<int>& a,
                                       const std::vector<int>& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

SparsePoly SparsePoly::constant(int n, long long c) {
  SparsePoly p(n);
  if (c != 0) p.terms_[std::vector<int>(n, 0)] = c;
  return p;
}

SparsePoly SparsePoly::variable(int n, int index, int power) {
  if (index < 1 || index > n) fail("variable index out of range");
  SparsePoly p(n);
  std::vector<int> e(n, 0);
  e[index - 1] = power;
  p.terms_[std::move(e)] = 1;
  return p;
}

bool SparsePoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

long long SparsePoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) fail("polynomial is not constant");
  return terms_.begin()->second;
}

void SparsePoly::add_term(const std::vector<int>& exps, long long coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_[exps] = coeff;
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& rhs) {
  if (n_ == 0) n_ = rhs.n_;
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& rhs) {
  if (n_ == 0) n_ = rhs.n_;
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly out(a.n_ ? a.n_ : b.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<int> e(ea);
      for (size_t x = 0; x < e.size(); ++x) e[x] += eb[x];
      out.add_term(e, ca * cb);
    }
  return out;
}

int SparsePoly::min_total_degree() const {
  if (terms_.empty()) return 0;
  return total_degree(terms_.begin()->first);  // graded order: first is lowest
}

SparsePoly SparsePoly::homogeneous_part(int degree) const {
  SparsePoly out(n_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) == degree) out.add_term(e, c);
  return out;
}

namespace {

// Generalized binomial C(e, t) for integer e (possibly negative).
long long gen_binomial(long long e, int t) {
  long long num = 1;
  for (int x = 0; x < t; ++x) num *= (e - x);
  long long den = 1;
  for (int x = 1; x <= t; ++x) den *= x;
  return num / den;
}

}  // namespace

SparsePoly SparsePoly::substitute_one_plus_y(int truncate_degree) const {
  SparsePoly out(n_);
  for (const auto& [e, c] : terms_) {
    // prod_i (1 + y_i)^{e_i}, truncated at total degree truncate_degree
    SparsePoly prod = SparsePoly::constant(n_, c);
    for (int var = 1; var <= n_; ++var) {
      int power = e[var - 1];
      if (power == 0) continue;
      SparsePoly series(n_);
      for (int t = 0; t <= truncate_degree; ++t) {
        long long coeff = gen_binomial(power, t);
        if (coeff == 0) continue;
        std::vector<int> mono(n_, 0);
        mono[var - 1] = t;
        series.add_term(mono, coeff);
      }
      SparsePoly next = prod * series;
      // re-truncate
      SparsePoly trunc(n_);
      for (const auto& [me, mc] : next.terms())
        if (total_degree(me) <= truncate_degree) trunc.add_term(me, mc);
      prod = std::move(trunc);
    }
    out += prod;
  }
  return out;
}

std::string SparsePoly::to_string(const std::string& varname) const {
  if (terms_.empty()) return "0";
  std::ostringstream s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    long long coeff = c;
    if (!first) s << (coeff >= 0 ? " + " : " - ");
    else if (coeff < 0) s << "-";
    first = false;
    long long mag = coeff < 0 ? -coeff : coeff;
    bool has_var = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
    if (mag != 1 || !has_var) s << mag;
    bool star = mag != 1;
    for (size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (star) s << '*';
      star = true;
      s << varname << (v + 1);
      if (e[v] != 1) s << '^' << e[v];
    }
  }
  return s.str();
}

SparsePoly y_minus_y(int n, int i, int j) {
  return SparsePoly::variable(n, i) - SparsePoly::variable(n, j);
}

SparsePoly exp_y_minus_y(int n, int i, int j) {
  SparsePoly p(n);
  std::vector<int> e(n, 0);
  e[i - 1] += 1;
  e[j - 1] -= 1;
  p.add_term(e, 1);
  return p;
}

SparsePoly wt_H(const PipeDream& p) {
  if (p.fusing() > 0) fail("wt_H rejects fused dreams");
  SparsePoly w = SparsePoly::constant(p.n(), 1);
  for (const Box& b : p.equivariant_positions())
    w = w * y_minus_y(p.n(), b.row, b.col);
  return w;
}

SparsePoly wt_K(const PipeDream& p) {
  const int n = p.n();
  SparsePoly w = SparsePoly::constant(n, 1);
  for (const Box& b : p.equivariant_positions())
    w = w * (SparsePoly::constant(n, 1) - exp_y_minus_y(n, b.col, b.row));
  for (const Box& b : p.fusor_positions())
    w = w * exp_y_minus_y(n, b.col, b.row);
  return w;
}

ExpansionWithRecords expand_with_records(const PartialPermutation& f,
                                         TheoryMode mode) {
  const int n = f.n();
  ExpansionWithRecords out;
  out.expansion.mode = mode;
  out.expansion.n = n;
  out.expansion.k = f.k();
  for (const PipeDream& p : enumerate_dreams(f, mode)) {
    DreamRecord rec;
    rec.lambda = p.lambda();
    rec.fusing = p.fusing();
    rec.sign = rec.fusing % 2 == 0 ? 1 : -1;
    rec.equivariant_tiles = p.equivariant_positions();
    rec.fusor_tiles = p.fusor_positions();
    switch (mode) {
      case TheoryMode::H:
      case TheoryMode::K:
        rec.weight = SparsePoly::constant(n, 1);
        break;
      case TheoryMode::HT:
        rec.weight = wt_H(p);
        break;
      case TheoryMode::KT:
        rec.weight = wt_K(p);
        break;
    }
    SparsePoly contribution = rec.weight;
    if (rec.sign < 0)
      contribution = SparsePoly::constant(n, 0) - contribution;
    auto [it, inserted] =
        out.expansion.terms.try_emplace(rec.lambda, contribution);
    if (!inserted) it->second += contribution;
    out.records.push_back(std::move(rec));
  }
  std::erase_if(out.expansion.terms,
                [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

SchubertExpansion expand(const PartialPermutation& f, TheoryMode mode) {
  return expand_with_records(f, mode).expansion;
}

SchubertExpansion specialize_KT_to_K(const SchubertExpansion& e) {
  if (e.mode != TheoryMode::KT) fail("expected a KT expansion");
  SchubertExpansion out;
  out.mode = TheoryMode::K;
  out.n = e.n;
  out.k = e.k;
  for (const auto& [lambda, coeff] : e.terms) {
    long long value = 0;
    for (const auto& [exps, c] : coeff.terms()) value += c;
    if (value != 0) out.terms[lambda] = SparsePoly::constant(e.n, value);
  }
  return out;
}

SchubertExpansion specialize_KT_to_HT(const ExpansionWithRecords& e) {
  if (e.expansion.mode != TheoryMode::KT) fail("expected a KT expansion");
  SchubertExpansion out;
  out.mode = TheoryMode::HT;
  out.n = e.expansion.n;
  out.k = e.expansion.k;
  for (const DreamRecord& rec : e.records) {
    if (rec.fusing > 0) continue;
    int degree = static_cast<int>(rec.equivariant_tiles.size());
    SparsePoly low =
        rec.weight.substitute_one_plus_y(degree).homogeneous_part(degree);
    auto [it, inserted] = out.terms.try_emplace(rec.lambda, low);
    if (!inserted) it->second += low;
  }
  std::erase_if(out.terms, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

GrahamReport check_graham_positive(const ExpansionWithRecords& e) {
  GrahamReport report;
  if (e.expansion.mode != TheoryMode::HT) fail("expected an HT expansion");
  const int n = e.expansion.n;
  for (size_t r = 0; r < e.records.size(); ++r) {
    const DreamRecord& rec = e.records[r];
    SparsePoly product = SparsePoly::constant(n, 1);
    std::vector<Box> seen;
    for (const Box& b : rec.equivariant_tiles) {
      std::ostringstream msg;
      if (b.row >= b.col) {
        msg << "dream " << r << ": factor y" << b.row << "-y" << b.col
            << " is not a positive root";
        report.positive = false;
        report.violations.push_back(msg.str());
      }
      if (std::find(seen.begin(), seen.end(), b) != seen.end()) {
        msg << "dream " << r << ": repeated factor at (" << b.row << ","
            << b.col << ")";
        report.positive = false;
        report.violations.push_back(msg.str());
      }
      seen.push_back(b);
      product = product * y_minus_y(n, b.row, b.col);
    }
    if (!(product == rec.weight)) {
      std::ostringstream msg;
      msg << "dream " << r << ": weight is not the product of its factors";
      report.positive = false;
      report.violations.push_back(msg.str());
    }
  }
  return report;
}

}  // namespace pipedreams
