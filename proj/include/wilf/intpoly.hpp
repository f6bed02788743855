#pragma once

// Dense univariate polynomials with exact integer or rational coefficients.

#include <string>
#include <utility>
#include <vector>

#include "wilf/bigint.hpp"

namespace wilf {

/// coeffs[i] is the coefficient of X^i; trailing zeros are trimmed, so the
/// zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, std::size_t degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  const BigInt& leading() const { return coeffs_.back(); }

  BigInt eval(const BigInt& x) const;

  /// P(X + c), by expanding each monomial with a row of Pascal's triangle.
  IntPoly shifted(const BigInt& c) const;

  IntPoly derivative() const;

  /// Multiplication by X^k.
  IntPoly times_x_power(std::size_t k) const;

  /// Exact division by X^k; the low k coefficients must vanish.
  IntPoly divided_by_x_power(std::size_t k) const;

  /// gcd of the coefficients, nonnegative.
  BigInt content() const;
  IntPoly primitive_part() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const BigInt& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const BigInt& c) { return a *= c; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form, highest degree first, e.g. "X^6 - 3X^4 + X^2".
  std::string to_string(const std::string& var = "X") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Polynomial over the rationals; used for exact Sturm sequences and gcds.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<BigRational> coeffs);
  explicit RationalPoly(const IntPoly& p);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }
  const BigRational& leading() const { return coeffs_.back(); }

  RationalPoly derivative() const;
  RationalPoly monic() const;
  RationalPoly operator-() const;

  /// Quotient and remainder of Euclidean division; `d` must be nonzero.
  static std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& n, const RationalPoly& d);
  static RationalPoly gcd(RationalPoly a, RationalPoly b);

  /// Primitive integer polynomial with the same roots and positive leading coefficient.
  IntPoly to_primitive_int() const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

/// p / gcd(p, p'), as a primitive integer polynomial.
IntPoly squarefree_part(const IntPoly& p);

}  // namespace wilf
