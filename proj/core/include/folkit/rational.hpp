#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace folkit {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational_of(long num, unsigned long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// canonical "a" or "a/b" text
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// Residue num*den^{-1} mod p. Returns false when den ≡ 0 mod p.
inline bool mod_p(const Rational& r, uint64_t p, uint64_t& out) {
  Integer pz(static_cast<unsigned long>(p));
  Integer den_m = r.get_den() % pz;
  if (den_m == 0) return false;
  Integer num_m = r.get_num() % pz;
  if (num_m < 0) num_m += pz;
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), den_m.get_mpz_t(), pz.get_mpz_t()) == 0) return false;
  Integer res = (num_m * inv) % pz;
  out = res.get_ui();
  return true;
}

inline bool mod_p(const Integer& z, uint64_t p, uint64_t& out) {
  Integer pz(static_cast<unsigned long>(p));
  Integer m = z % pz;
  if (m < 0) m += pz;
  out = m.get_ui();
  return true;
}

}  // namespace folkit
