#pragma once

// Dense polynomials over Z_m, the generating-function denominator D(x) and
// numerator Q(x) of f mod m, and certificates built on Z_m[x]/<D(x)>.

#include <cstdint>
#include <optional>
#include <vector>

#include "wilf/bigint.hpp"
#include "wilf/intpoly.hpp"

namespace wilf {

/// Polynomial over Z_m, m >= 2. coeffs()[i] is the coefficient of x^i in [0, m),
/// trailing zeros trimmed.
class ModPoly {
 public:
  explicit ModPoly(std::uint64_t m);
  ModPoly(std::uint64_t m, std::vector<std::uint64_t> coeffs);
  /// Coefficients may be negative; they are reduced mod m.
  ModPoly(std::uint64_t m, std::initializer_list<long long> coeffs);
  static ModPoly from_int(const IntPoly& p, std::uint64_t m);

  std::uint64_t modulus() const { return m_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t leading() const { return c_.back(); }

  ModPoly& operator+=(const ModPoly& o);
  ModPoly& operator-=(const ModPoly& o);
  ModPoly scaled(std::uint64_t s) const;
  friend ModPoly operator+(ModPoly a, const ModPoly& b) { return a += b; }
  friend ModPoly operator-(ModPoly a, const ModPoly& b) { return a -= b; }
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
  friend bool operator==(const ModPoly& a, const ModPoly& b) = default;

  /// Remainder modulo `d`, whose leading coefficient must be a unit mod m.
  ModPoly rem(const ModPoly& d) const;
  /// Quotient and remainder; same unit requirement.
  static std::pair<ModPoly, ModPoly> divmod(const ModPoly& n, const ModPoly& d);

 private:
  void trim();
  std::uint64_t m_;
  std::vector<std::uint64_t> c_;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
/// Inverse of a mod m, or nullopt when gcd(a, m) != 1.
std::optional<std::uint64_t> invmod(std::uint64_t a, std::uint64_t m);
bool is_prime_u64(std::uint64_t n);

/// Element of Z_m[x]/<reducer>, kept fully reduced.
class QuotientElement {
 public:
  QuotientElement(ModPoly reducer, ModPoly rep);
  static QuotientElement one(const ModPoly& reducer);

  const ModPoly& reducer() const { return reducer_; }
  const ModPoly& rep() const { return rep_; }
  bool is_one() const;

  friend QuotientElement operator*(const QuotientElement& a, const QuotientElement& b);
  friend bool operator==(const QuotientElement& a, const QuotientElement& b) = default;

 private:
  ModPoly reducer_;
  ModPoly rep_;
};

/// (1 - x)(1 - 2x)...(1 - (m-1)x) - (-1)^m x^m over Z_m.
ModPoly build_D(std::uint64_t m);

/// sum_{k<m} (-1)^k x^k prod_{j=k+1}^{m-1} (1 - jx) over Z_m.
ModPoly build_Q(std::uint64_t m);

/// First `count` coefficients of num/den as a power series over Z_m.
/// Throws NonInvertibleConstantTerm.
std::vector<std::uint64_t> series_expand(const ModPoly& num, const ModPoly& den, std::size_t count);

/// g = (1 - D)/x, the inverse of x modulo D. Throws MalformedD unless D(0) = 1.
QuotientElement inverse_of_x(const ModPoly& D);

/// x^e in Z_m[x]/<D>.
QuotientElement powmod_x(const ModPoly& D, const BigInt& e);

/// True iff x^N == 1 modulo (D(x), m), i.e. N is a period of f mod m.
bool verify_period_certificate(std::uint64_t m, const BigInt& N);

struct OrderResult {
  BigInt order;
  /// False when `multiple` kept a cofactor that trial division and a
  /// probable-prime test could not split; `order` is then only a multiple.
  bool complete = true;
};

inline constexpr std::uint64_t kDefaultTrialBound = 10'000'000;

/// Multiplicative order of x modulo (D, m), given a multiple with x^multiple = 1.
OrderResult order_of_x(const ModPoly& D, const BigInt& multiple,
                       std::uint64_t trial_bound = kDefaultTrialBound);

/// Distinct-degree test over F_p. Throws NotPrime.
bool is_irreducible_mod_p(const ModPoly& f);

/// Degrees of the irreducible factors of f over F_p, ascending, by
/// distinct-degree factorization. Empty when f is not squarefree mod p or
/// has degree < 1. Throws NotPrime.
std::vector<int> factor_degrees_mod_p(const ModPoly& f);

struct IrreducibilityVerdict {
  enum class Kind { Irreducible, Reducible, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::optional<std::uint64_t> prime;  ///< certificate prime when Irreducible
  /// Primes whose factor-degree patterns jointly rule out every proper
  /// factor degree; set when no single prime suffices.
  std::vector<std::uint64_t> degree_primes;
  std::optional<BigRational> root;     ///< rational root when Reducible
  std::size_t primes_tried = 0;
};

/// Rational roots of an integer polynomial (distinct, ascending).
std::vector<BigRational> rational_roots(const IntPoly& f);

/// Rational-root test, then a search over primes p <= prime_bound (not
/// dividing the leading coefficient). A prime modulo which f is irreducible
/// certifies directly; otherwise the possible degrees of a factor over Z are
/// intersected across the squarefree reductions until only 0 and deg f remain.
IrreducibilityVerdict certify_irreducible(const IntPoly& f, std::uint64_t prime_bound);

}  // namespace wilf
