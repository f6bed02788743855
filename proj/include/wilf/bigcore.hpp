#pragma once

// Exact Stirling numbers of the second kind, Bell numbers and the
// alternating Stirling sum f(n) = sum_j (-1)^j S(n, j).

#include <cstdint>
#include <vector>

#include "wilf/bigint.hpp"
#include "wilf/report.hpp"

namespace wilf {

/// Memoized rows of the Stirling triangle, S(n, k) for 0 <= n <= max_n.
class StirlingTable {
 public:
  explicit StirlingTable(std::uint64_t max_n);

  std::uint64_t max_n() const { return rows_.size() - 1; }

  /// S(n, k); zero for k > n. Throws InvalidArgument when n > max_n().
  const BigInt& operator()(std::uint64_t n, std::uint64_t k) const;

  /// entries[k] = S(n, k) for 0 <= k <= n.
  const std::vector<BigInt>& row(std::uint64_t n) const;

 private:
  std::vector<std::vector<BigInt>> rows_;
};

/// Row n of the triangle, computed with O(n) memory.
std::vector<BigInt> stirling_row(std::uint64_t n);

BigInt stirling2(std::uint64_t n, std::uint64_t k);
BigInt bell(std::uint64_t n);

/// f(n) by the alternating row sum.
BigInt f_alt_sum(std::uint64_t n);

/// values[n] = f(n) for n <= max_n.
struct FTable {
  std::vector<BigInt> values;

  std::uint64_t max_n() const { return values.size() - 1; }
  const BigInt& operator[](std::uint64_t n) const { return values.at(n); }
};

/// f(0..max_n) from f(0) = 1 and -f(n+1) = sum_j binom(n, j) f(n-j).
FTable f_table_recursive(std::uint64_t max_n);

/// f(0..max_n) from alternating sums of successive Stirling rows.
/// O(n^2) word-by-bignum operations; the cheaper route for large tables.
FTable f_table_alt(std::uint64_t max_n);

/// Bell numbers modulo m for 0 <= n <= max_n, via the Bell (Aitken) triangle.
std::vector<std::uint64_t> bell_mod(std::uint64_t max_n, std::uint64_t m);

/// Checks f(n) == B_n (mod 2) for all n <= max_n with exact values.
CheckReport check_bell_parity(std::uint64_t max_n);

/// Unordered factorizations of `m` into an even number of factors > 1, minus
/// those with an odd number of factors. For squarefree m with
/// r prime factors this equals f(r) when r >= 1.
BigInt signed_factorization_count(std::uint64_t m);

}  // namespace wilf
