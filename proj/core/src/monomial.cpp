#include "folkit/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace folkit {

int Monomial::degree() const {
  return std::accumulate(exp_.begin(), exp_.end(), 0);
}

bool Monomial::is_one() const {
  return std::all_of(exp_.begin(), exp_.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  assert(nvars() == other.nvars());
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  assert(nvars() == o.nvars());
  Monomial r(*this);
  for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] += o.exp_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  assert(o.divides(*this));
  Monomial r(*this);
  for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] -= o.exp_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  assert(a.nvars() == b.nvars());
  Monomial r(a);
  for (std::size_t i = 0; i < r.exp_.size(); ++i)
    r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
  return r;
}

MonomialOrder MonomialOrder::grlex(std::size_t nvars) {
  std::vector<int> prio(nvars);
  std::iota(prio.begin(), prio.end(), 0);
  return MonomialOrder(Kind::GradedLex, std::move(prio), 0);
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
  std::vector<int> prio(nvars);
  std::iota(prio.begin(), prio.end(), 0);
  return MonomialOrder(Kind::GradedRevLex, std::move(prio), 0);
}

MonomialOrder MonomialOrder::block_elimination(std::vector<int> priority, std::size_t block) {
  assert(block <= priority.size());
  return MonomialOrder(Kind::BlockElimination, std::move(priority), block);
}

namespace {

int cmp_grlex(const Monomial& a, const Monomial& b, const std::vector<int>& prio,
              std::size_t lo, std::size_t hi) {
  int da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[prio[i]];
    db += b[prio[i]];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = lo; i < hi; ++i) {
    int ea = a[prio[i]], eb = b[prio[i]];
    if (ea != eb) return ea < eb ? -1 : 1;
  }
  return 0;
}

int cmp_grevlex(const Monomial& a, const Monomial& b, const std::vector<int>& prio,
                std::size_t lo, std::size_t hi) {
  int da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[prio[i]];
    db += b[prio[i]];
  }
  if (da != db) return da < db ? -1 : 1;
  // reverse-lex tie break: last variable with differing exponent, smaller wins
  for (std::size_t i = hi; i-- > lo;) {
    int ea = a[prio[i]], eb = b[prio[i]];
    if (ea != eb) return ea > eb ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::GradedLex:
      return cmp_grlex(a, b, priority_, 0, priority_.size());
    case Kind::GradedRevLex:
      return cmp_grevlex(a, b, priority_, 0, priority_.size());
    case Kind::BlockElimination: {
      int c = cmp_grlex(a, b, priority_, 0, block_);
      if (c != 0) return c;
      return cmp_grevlex(a, b, priority_, block_, priority_.size());
    }
  }
  return 0;
}

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
  return compare(a, b) < 0;
}

}  // namespace folkit
