#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "folkit/monomial.hpp"
#include "folkit/rational.hpp"

namespace folkit {

// Exact multivariate polynomial over Q.
// Terms are kept sorted descending in a fixed canonical order (graded lex on
// the natural variable order); no zero coefficients are stored.
// degree() of the zero polynomial is the sentinel kZeroDegree, never used in
// arithmetic.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;
  using Term = std::pair<Monomial, Rational>;

  Poly() = default;
  explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static Poly zero(std::vector<std::string> vars) { return Poly(std::move(vars)); }
  static Poly constant(std::vector<std::string> vars, const Rational& c);
  static Poly variable(std::vector<std::string> vars, std::size_t index);
  static Poly monomial(std::vector<std::string> vars, Monomial m, Rational c);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }

  // total degree; kZeroDegree for the zero polynomial
  int degree() const;
  int degree_in(std::size_t var) const;

  Rational coeff(const Monomial& m) const;
  // canonical leading term (graded lex); only valid on nonzero polynomials
  const Term& leading_canonical() const;
  // leading term with respect to an explicit order
  const Term& leading(const MonomialOrder& order) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly operator*(const Rational& c) const;
  friend Poly operator*(const Rational& c, const Poly& p) { return p * c; }
  Poly shifted(const Monomial& m) const;  // * x^m
  Poly pow(unsigned e) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly derivative(std::size_t var) const;

  // substitute every variable by images[i] (polynomials in the target ring)
  Poly compose(std::span<const Poly> images) const;
  // rename/extend to a variable set that contains vars() (by name)
  Poly embedded(std::vector<std::string> target_vars) const;
  // drop a variable that the polynomial does not use
  Poly dropped_var(std::size_t var) const;
  // substitute one variable with a constant
  Poly substituted(std::size_t var, const Rational& value) const;

  Rational eval(std::span<const Rational> point) const;

  // integer content removed, denominators cleared, sign of the canonical
  // leading coefficient positive
  Poly primitive_part() const;
  // divide by the canonical leading coefficient
  Poly monic_canonical() const;

  // exact division: returns quotient iff divisor divides exactly
  std::optional<Poly> divided_exactly_by(const Poly& divisor) const;
  // single-divisor division wrt order: *this = q*divisor + r
  std::pair<Poly, Poly> divmod(const Poly& divisor, const MonomialOrder& order) const;

  bool is_homogeneous() const;

  // raw access for construction sites that build sorted data themselves
  static Poly from_terms(std::vector<std::string> vars, std::vector<Term> unsorted_terms);

 private:
  void sort_normalize();
  std::vector<std::string> vars_;
  std::vector<Term> terms_;  // descending canonical order
};

// canonical storage comparison (graded lex, natural variable order)
bool canonical_less(const Monomial& a, const Monomial& b);

}  // namespace folkit
