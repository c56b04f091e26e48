#pragma once

#include <map>
#include <string>
#include <vector>

#include "pipedreams/core.hpp"
#include "pipedreams/dreams.hpp"

// Exact sparse polynomial coefficients and the assembly of Schubert-basis
// expansions in the four theories, with the specialization maps and the
// positivity validator.

namespace pipedreams {

// Integer-coefficient sparse polynomial in n commuting variables, exponent
// vectors as keys in graded lexicographic order.  Also serves as the Laurent
// ring S[E_1^{+-1},...] where E_i stands for exp(y_i): exponents may then be
// negative.
class SparsePoly {
 public:
  struct GradedLex {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
  };
  using Terms = std::map<std::vector<int>, long long, GradedLex>;

  SparsePoly() = default;
  explicit SparsePoly(int n) : n_(n) {}

  static SparsePoly constant(int n, long long c);
  static SparsePoly variable(int n, int index, int power = 1);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  long long constant_value() const;  // requires is_constant
  const Terms& terms() const { return terms_; }

  SparsePoly& operator+=(const SparsePoly& rhs);
  SparsePoly& operator-=(const SparsePoly& rhs);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  bool operator==(const SparsePoly& rhs) const = default;

  void add_term(const std::vector<int>& exps, long long coeff);
  int min_total_degree() const;  // 0 for the zero polynomial
  SparsePoly homogeneous_part(int degree) const;
  // Substitute variable i by (1 + y_i) as a power series truncated beyond
  // the given total degree; exact for extracting bottom-degree parts.
  SparsePoly substitute_one_plus_y(int truncate_degree) const;

  std::string to_string(const std::string& varname = "y") const;

 private:
  int n_ = 0;
  Terms terms_;
};

// y_i - y_j as a polynomial.
SparsePoly y_minus_y(int n, int i, int j);
// exp(y_i - y_j) as a Laurent monomial E_i * E_j^-1.
SparsePoly exp_y_minus_y(int n, int i, int j);

// Weight of a dream in H*_T(pt): the product of (y_row - y_col) over the
// equivariant tiles.  Rejects fused dreams.
SparsePoly wt_H(const PipeDream& p);

// Weight in K_T(pt): the product over tiles at (r,c) of 1 - exp(y_c - y_r)
// for the equivariant tile and exp(y_c - y_r) for fusor tiles.
SparsePoly wt_K(const PipeDream& p);

struct SchubertExpansion {
  TheoryMode mode = TheoryMode::H;
  int n = 0;
  int k = 0;
  std::map<Partition, SparsePoly> terms;  // no zero coefficients stored

  bool operator==(const SchubertExpansion&) const = default;
};

// Provenance of one summand, kept so positivity and specialization checks
// are structural.
struct DreamRecord {
  Partition lambda;
  int fusing = 0;
  int sign = 1;
  std::vector<Box> equivariant_tiles;
  std::vector<Box> fusor_tiles;
  SparsePoly weight;  // 1, wt_H or wt_K depending on the mode
};

struct ExpansionWithRecords {
  SchubertExpansion expansion;
  std::vector<DreamRecord> records;
};

SchubertExpansion expand(const PartialPermutation& f, TheoryMode mode);
ExpansionWithRecords expand_with_records(const PartialPermutation& f,
                                         TheoryMode mode);

// Set every exp(y_i) to 1.
SchubertExpansion specialize_KT_to_K(const SchubertExpansion& e);

// Drop the fused summands and keep each remaining dream's lowest-degree
// part under E_i = 1 + y_i + ...; equals the direct HT expansion.
SchubertExpansion specialize_KT_to_HT(const ExpansionWithRecords& e);

struct GrahamReport {
  bool positive = true;
  std::vector<std::string> violations;
};
// Verifies every HT summand is presented as a product of distinct positive
// roots y_i - y_j, i < j.
GrahamReport check_graham_positive(const ExpansionWithRecords& e);

}  // namespace pipedreams
