#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace wilf {

/// Arbitrary-precision signed integer.
using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigInt big(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

/// Value of `v` as uint64_t; `v` must be in range.
inline std::uint64_t to_u64(const BigInt& v) {
  std::uint64_t out = 0;
  if (sgn(v) == 0) return 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

inline bool fits_u64(const BigInt& v) {
  return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline BigInt factorial(std::uint64_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline BigInt pow(const BigInt& base, std::uint64_t e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Least nonnegative residue of `v` modulo `m` (m > 0).
inline std::uint64_t mod_u64(const BigInt& v, std::uint64_t m) {
  if (m <= ~0UL) return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(m));
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), big(m).get_mpz_t());
  return to_u64(r);
}

}  // namespace wilf
