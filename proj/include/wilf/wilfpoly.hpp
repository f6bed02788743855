#pragma once

// The polynomials P_0 = 1, P_n(X) = X P_{n-1}(X) - P_{n-1}(X+1), whose
// constant terms are f(n), and the shift coefficients a_{r,k}(X) defined by
// (X - Y)(X + 1 - Y)...(X + k - 1 - Y) = sum_r a_{r,k}(X) Y^r.

#include <cstdint>
#include <vector>

#include "wilf/bigint.hpp"
#include "wilf/intpoly.hpp"
#include "wilf/report.hpp"

namespace wilf {

IntPoly pn_poly(std::uint64_t n);

/// P_0 .. P_max_n; O(n^3) big-integer operations in total.
std::vector<IntPoly> pn_table(std::uint64_t max_n);

BigInt pn_eval(std::uint64_t n, const BigInt& x);

/// P_n(X) against sum_j binom(n, j) f(n-j) X^j, coefficient by coefficient.
CheckReport pn_coeff_identity_check(std::uint64_t n);

struct ShiftCoeffs {
  std::uint64_t k = 0;
  std::vector<IntPoly> coeffs;  ///< coeffs[r] = a_{r,k}(X), 0 <= r <= k
};

/// Expands the product directly, one linear factor at a time.
ShiftCoeffs shift_coeffs(std::uint64_t k);

/// a_{., k+1} from a_{., k} via a_{t,k+1}(X) = X a_{t,k}(X+1) - a_{t-1,k}(X+1).
ShiftCoeffs shift_coeffs_next(const ShiftCoeffs& prev);

/// P_n(X + k) == sum_r a_{r,k}(X) P_{n+r}(X) as polynomials.
CheckReport shift_identity_check(std::uint64_t n, std::uint64_t k);

/// f(n) == sum_{r=1}^{k} a_{r,k}(0) f(n+r) (mod k), with exact f.
CheckReport shift_congruence_check(std::uint64_t n, std::uint64_t k);

/// Batched forms of the two checks above, sharing the P_n and f tables.
CheckReport shift_identity_sweep(std::uint64_t max_n, std::uint64_t max_k);
CheckReport shift_congruence_sweep(std::uint64_t max_n, std::uint64_t max_k);

}  // namespace wilf
