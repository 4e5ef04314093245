#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace folkit {

// Exponent vector; length = ambient variable count.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exp_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : exp_(std::move(exps)) {}

  std::size_t nvars() const { return exp_.size(); }
  int operator[](std::size_t i) const { return exp_[i]; }
  int& operator[](std::size_t i) { return exp_[i]; }
  const std::vector<int>& exponents() const { return exp_; }

  int degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& o) const;
  // this / o; caller must ensure o.divides(*this)
  Monomial operator/(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return exp_ == o.exp_; }
  bool operator!=(const Monomial& o) const { return exp_ != o.exp_; }

 private:
  std::vector<int> exp_;
};

// Total well-order compatible with multiplication.
// block-elimination: the first `block` variables of the priority list are
// compared by total degree first (deglex within), then graded-reverse-lex
// on the remaining variables.
class MonomialOrder {
 public:
  enum class Kind { GradedLex, GradedRevLex, BlockElimination };

  static MonomialOrder grlex(std::size_t nvars);
  static MonomialOrder grevlex(std::size_t nvars);
  // eliminates priority[0..block) first
  static MonomialOrder block_elimination(std::vector<int> priority, std::size_t block);

  Kind kind() const { return kind_; }
  std::size_t nvars() const { return priority_.size(); }
  const std::vector<int>& priority() const { return priority_; }

  // true iff a < b
  bool less(const Monomial& a, const Monomial& b) const;
  int compare(const Monomial& a, const Monomial& b) const;  // -1,0,1

 private:
  MonomialOrder(Kind k, std::vector<int> prio, std::size_t block)
      : kind_(k), priority_(std::move(prio)), block_(block) {}
  Kind kind_;
  std::vector<int> priority_;  // variable indices, highest first
  std::size_t block_ = 0;
};

}  // namespace folkit
