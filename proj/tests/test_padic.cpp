#include <doctest.h>

#include "oracles.hpp"
#include "wilf/bigcore.hpp"
#include "wilf/errors.hpp"
#include "wilf/padic.hpp"

using namespace wilf;

TEST_CASE("valuations") {
  CHECK(vp(12, 2) == 2);
  CHECK(vp(7, 3) == 0);
  CHECK(vp(-45, 3) == 2);
  CHECK_THROWS_AS(vp(0, 2), ZeroInput);
  CHECK_THROWS_AS(vp(8, 4), NotPrime);
  for (std::uint64_t n = 1; n <= 120; n += 7)
    for (std::uint64_t p : {2, 3, 5, 7}) CHECK(vp(factorial(n), p) == oracle::legendre(n, p));
}

TEST_CASE("u coefficients") {
  CHECK(u_coeff(0) == -1);
  CHECK(u_coeff(1) == 0);
  CHECK(u_coeff(5) == 9);
  const auto f = oracle::f_exact_table(61);
  for (unsigned k = 0; k <= 60; ++k) CHECK(u_coeff(k) == ((k % 2 == 0) ? f[k + 1] : BigInt(-f[k + 1])));
}

TEST_CASE("partial factorial sums") {
  CHECK(partial_factorial_sum(0, 3, 2, 4).value == 9);
  const BigInt q = wilf::pow(3, 5);
  BigInt expect = (factorial(11) - 1) % q;
  CHECK(partial_factorial_sum(1, 10, 3, 5).value == expect);
  CHECK_THROWS_AS(partial_factorial_sum(0, 0, 2, 4), InvalidArgument);
  // Direct sum oracle.
  for (std::uint64_t k : {2, 3}) {
    BigInt s = 0;
    for (unsigned n = 1; n <= 25; ++n) s += wilf::pow(n, k) * factorial(n);
    const auto r = partial_factorial_sum(k, 25, 5, 6);
    CHECK(r.value == s % r.modulus());
  }
}

TEST_CASE("alpha_1 identity") {
  CHECK(alpha1_identity_check(3).ok());
  CHECK(alpha1_identity_check(10).ok());
  CHECK(alpha1_identity_check(400).ok());
}

TEST_CASE("stabilization") {
  for (std::uint64_t p : {2, 3, 5}) {
    for (unsigned t : {1u, 5u, 30u}) {
      const auto one = alpha_k_stabilization(1, p, t);
      CHECK(one.value == one.modulus() - 1);
      if (one.modulus() > 2) CHECK(one.symmetric() == -1);
      CHECK(alpha_k_stabilization(0, p, t).value == 0);
    }
  }
  CHECK(alpha_k_stabilization(1, 3, 10).value == wilf::pow(3, 10) - 1);
  StabilizationOptions tight;
  tight.cap_factor = 0;
  CHECK_THROWS_AS(alpha_k_stabilization(2, 5, 10, tight), NoStabilization);
}
