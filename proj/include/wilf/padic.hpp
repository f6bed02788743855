#pragma once

// p-adic valuations and truncated sums of the series alpha_k = sum n^k n!.

#include <cstdint>

#include "wilf/bigint.hpp"
#include "wilf/report.hpp"

namespace wilf {

/// A p-adic number known modulo p^precision.
struct PadicTrunc {
  std::uint64_t p = 0;
  unsigned precision = 0;
  BigInt value;  ///< in [0, p^precision)

  BigInt modulus() const { return wilf::pow(big(p), precision); }
  /// Representative in (-p^t / 2, p^t / 2].
  BigInt symmetric() const;
};

/// Exponent of p in a; throws ZeroInput for a = 0 and NotPrime for bad p.
std::uint64_t vp(const BigInt& a, std::uint64_t p);

/// u_k = (-1)^k sum_{j=1}^{k+1} (-1)^j S(k+1, j) = (-1)^k f(k+1).
BigInt u_coeff(std::uint64_t k);

/// sum_{n=1}^{M} n^k n! mod p^t.
PadicTrunc partial_factorial_sum(std::uint64_t k, std::uint64_t M, std::uint64_t p, unsigned t);

/// sum_{n=0}^{m} n * n! == (m+1)! - 1 exactly for every m <= M.
CheckReport alpha1_identity_check(std::uint64_t M);

struct StabilizationOptions {
  std::uint64_t window = 50;
  /// Cap on M: cap_factor * t * p, plus the window.
  std::uint64_t cap_factor = 10;
};

/// Truncation of alpha_k + u_k alpha: the partial sums
/// sum_{n<=M} (n^k + u_k) n! mod p^t, once constant for `window` consecutive M.
/// Throws NoStabilization.
PadicTrunc alpha_k_stabilization(std::uint64_t k, std::uint64_t p, unsigned t,
                                 const StabilizationOptions& opts = {});

}  // namespace wilf
