#ifndef GRAMCAL_POLY_HPP
#define GRAMCAL_POLY_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gramcal/rational.hpp"

namespace gramcal {

// Monomial over named indeterminates: (name, exponent) pairs sorted by name,
// exponents strictly positive. The empty monomial is 1.
using Monomial = std::vector<std::pair<std::string, unsigned>>;

// Graded lexicographic order: total degree first, then name-wise exponent
// comparison. Affects canonical printing only, never arithmetic.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Element of the commutative weight ring Q[q_1, ..., q_N, y, ...]:
// a canonical term map with exact rational coefficients and no zero terms.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexLess>;

  Poly() = default;  // zero
  explicit Poly(long c);
  explicit Poly(Rational c);

  static Poly var(const std::string& name);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Requires is_constant(); the zero polynomial yields 0.
  Rational constant_value() const;
  // True when the polynomial is exactly one indeterminate to the first power.
  bool is_single_variable() const;

  const TermMap& terms() const { return terms_; }
  unsigned total_degree() const;

  std::set<std::string> indeterminates() const;
  bool mentions(const std::string& name) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly pow(unsigned exp) const;

  bool operator==(const Poly& rhs) const { return terms_ == rhs.terms_; }
  bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

  // Full evaluation; every indeterminate of the polynomial must be assigned.
  Rational evaluate(const std::map<std::string, Rational>& assignment) const;

  // Ring-homomorphic substitution; assignment keys not occurring in this
  // polynomial are ignored here (the operation-level wrappers are strict).
  Poly substitute(const std::map<std::string, Poly>& assignment) const;

  // Canonical rendering, leading term first: "q1*q2 - 2*q1 + 3/2".
  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  TermMap terms_;
};

inline Poly operator*(Poly lhs, const Rational& c) { return lhs * Poly(c); }

// Strict substitution: every assignment key must occur in p.
Poly poly_substitute(const Poly& p, const std::map<std::string, Poly>& assignment);

// Recursive-descent parser for the canonical rendering (and simple weight
// expressions): rationals, names, '^', '*', '+', '-', parentheses.
Poly parse_poly(std::string_view text);

}  // namespace gramcal

#endif
