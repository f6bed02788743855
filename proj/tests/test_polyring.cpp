#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wilf/errors.hpp"
#include "wilf/modseq.hpp"
#include "wilf/polyring.hpp"
#include "wilf/wilfpoly.hpp"

using namespace wilf;

TEST_CASE("ModPoly arithmetic") {
  const ModPoly a(5, {1, 2, 3});
  const ModPoly b(5, {4, -2});
  CHECK((a + b).coeffs() == std::vector<std::uint64_t>{0, 0, 3});
  CHECK((a - a).is_zero());
  CHECK((a * b).coeffs() == std::vector<std::uint64_t>{4, 1, 3, 4});
  const auto [q, r] = ModPoly::divmod(a * b + ModPoly(5, {1}), b);
  CHECK(q == a);
  CHECK(r == ModPoly(5, {1}));
  CHECK(a.scaled(5).is_zero());
  CHECK_THROWS_AS(ModPoly::divmod(a, ModPoly(6, {1, 2})), InvalidArgument);
}

TEST_CASE("number theory helpers") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(1000000007));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(561));
  CHECK(is_prime_u64(18446744073709551557ULL));
  CHECK(invmod(3, 7) == 5u);
  CHECK_FALSE(invmod(4, 8).has_value());
  CHECK(mulmod(~0ULL, ~0ULL, 1000000007) == 114944269u);
}

TEST_CASE("D and Q against direct expansion") {
  CHECK(build_D(2).coeffs() == std::vector<std::uint64_t>{1, 1, 1});
  CHECK(build_D(3) == ModPoly(3, {1, 0, -1, 1}));
  CHECK(build_D(5) == ModPoly(5, {1, 0, 0, 0, -1, 1}));
  CHECK(build_Q(2) == ModPoly(2, {1}));
  for (std::uint64_t m = 2; m <= 24; ++m) {
    CHECK(build_D(m).coeffs() == oracle::D_direct(m));
    CHECK(build_Q(m).coeffs() == oracle::Q_direct(m));
    CHECK(build_D(m).degree() == static_cast<int>(m));
    CHECK(build_Q(m).degree() <= static_cast<int>(m) - 1);
    CHECK(build_D(m).coeff(0) == 1);
  }
  for (std::uint64_t p : {7, 11, 13}) {
    std::vector<std::uint64_t> c(p + 1, 0);
    c[0] = 1;
    c[p - 1] = p - 1;
    c[p] = 1;
    CHECK(build_D(p).coeffs() == c);
  }
}

TEST_CASE("series expansion") {
  CHECK(series_expand(build_Q(2), build_D(2), 6) == std::vector<std::uint64_t>{1, 1, 0, 1, 1, 0});
  CHECK(series_expand(ModPoly(7, {1}), ModPoly(7, {1, -1}), 4) == std::vector<std::uint64_t>{1, 1, 1, 1});
  const auto s8 = series_expand(build_Q(8), build_D(8), 15);
  for (unsigned n = 0; n < 15; ++n) CHECK(s8[n] == mod_u64(BigInt(static_cast<long>(oracle::kFirstValues[n])), 8));
  for (std::uint64_t m = 2; m <= 16; ++m) {
    const auto st = stream_values(m, 300);
    const auto se = series_expand(build_Q(m), build_D(m), 300);
    CHECK(std::equal(st.begin(), st.end(), se.begin(), se.end()));
  }
  CHECK_THROWS_AS(series_expand(ModPoly(4, {1}), ModPoly(4, {2, 1}), 3), NonInvertibleConstantTerm);
}

TEST_CASE("inverse of x") {
  CHECK(inverse_of_x(build_D(2)).rep() == ModPoly(2, {1, 1}));
  CHECK(inverse_of_x(build_D(3)).rep() == ModPoly(3, {0, 1, -1}));
  CHECK_THROWS_AS(inverse_of_x(ModPoly(5, {2, 1})), MalformedD);
  for (std::uint64_t m = 2; m <= 12; ++m) {
    const auto D = build_D(m);
    const auto x = QuotientElement(D, ModPoly(m, {0, 1}));
    CHECK((inverse_of_x(D) * x).is_one());
  }
}

TEST_CASE("powers of x and period certificates") {
  CHECK(powmod_x(build_D(2), 3).is_one());
  CHECK(powmod_x(build_D(2), 0).is_one());
  CHECK(powmod_x(build_D(8), 48).is_one());
  CHECK_FALSE(powmod_x(build_D(8), 24).is_one());
  CHECK(verify_period_certificate(2, 3));
  CHECK_FALSE(verify_period_certificate(2, 2));
  CHECK(verify_period_certificate(3, 26));
  CHECK(verify_period_certificate(5, 1562));
  CHECK(verify_period_certificate(7, 274514));
  for (unsigned h = 1; h <= 8; ++h) {
    BigInt n = 3 * wilf::pow(4, h - 1);
    CHECK(verify_period_certificate(std::uint64_t{1} << h, n));
  }

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> e(0, 1'000'000);
  for (std::uint64_t m : {6, 9, 10}) {
    const auto D = build_D(m);
    for (int i = 0; i < 5; ++i) {
      const std::uint64_t a = e(rng), b = e(rng);
      CHECK(powmod_x(D, big(a + b)) == powmod_x(D, big(a)) * powmod_x(D, big(b)));
    }
  }
}

TEST_CASE("order of x") {
  CHECK(order_of_x(build_D(2), 3).order == 3);
  CHECK(order_of_x(build_D(4), 12).order == 12);
  // The ring order for m = 8 is 48: x^24 is not 1 modulo D(x) = (1-x)...(1-7x) + x^8.
  const auto o8 = order_of_x(build_D(8), 48);
  CHECK(o8.order == 48);
  CHECK(o8.complete);
  CHECK(order_of_x(build_D(5), 1562).order == 1562);
  CHECK(order_of_x(build_D(7), 274514).order == 274514);
  for (std::uint64_t m = 2; m <= 12; ++m) {
    if (m == 7 || m == 10 || m == 11) continue;
    CHECK(order_of_x(build_D(m), find_state_period(m)).order == find_state_period(m));
  }
}

TEST_CASE("irreducibility mod p") {
  CHECK(is_irreducible_mod_p(ModPoly(2, {1, 1, 1})));
  CHECK_FALSE(is_irreducible_mod_p(ModPoly(2, {1, 0, 1})));
  CHECK(is_irreducible_mod_p(ModPoly(3, {1, 2})));
  CHECK_FALSE(is_irreducible_mod_p(ModPoly(5, {3})));
  CHECK(is_irreducible_mod_p(ModPoly(2, {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1})) == false);
  CHECK(is_irreducible_mod_p(ModPoly(2, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1})));  // x^10 + x^3 + 1
  CHECK_THROWS_AS(is_irreducible_mod_p(ModPoly(4, {1, 1, 1})), NotPrime);

  // Counting monic irreducibles of degree 4 over F_3: (3^4 - 3^2) / 4 = 18.
  int count = 0;
  for (int a = 0; a < 81; ++a) {
    ModPoly f(3, {a % 3, (a / 3) % 3, (a / 9) % 3, a / 27, 1});
    if (is_irreducible_mod_p(f)) ++count;
  }
  CHECK(count == 18);
}

TEST_CASE("rational roots against the candidate oracle") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-4, 4), deg(1, 4);
  for (int i = 0; i < 60; ++i) {
    std::vector<std::pair<long long, long long>> linears;
    const int d = deg(rng);
    for (int j = 0; j < d; ++j) {
      long long b = coef(rng);
      if (b == 0) b = 1;
      linears.emplace_back(coef(rng), b);
    }
    std::vector<BigInt> extra{1, 0, 1};  // times X^2 + 1
    auto c = oracle::product_of_linears(linears);
    std::vector<BigInt> full(c.size() + 2, 0);
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = 0; b < 3; ++b) full[a + b] += c[a] * extra[b];
    auto expected = oracle::rational_roots_by_candidates(full);
    std::sort(expected.begin(), expected.end());
    CHECK(rational_roots(IntPoly(full)) == expected);
  }
}

TEST_CASE("certify_irreducible") {
  const auto lin = certify_irreducible(IntPoly{-1, 1}, 200);
  CHECK(lin.kind == IrreducibilityVerdict::Kind::Reducible);
  CHECK(*lin.root == 1);
  const auto p5 = pn_poly(5);
  CHECK(p5 == IntPoly{-2, 5, 10, 0, -5, 1});
  // 32 - 80 + 40 + 10 - 2 = 0.
  CHECK(rational_roots(p5) == std::vector<BigRational>{2});
  CHECK(certify_irreducible(p5, 200).kind == IrreducibilityVerdict::Kind::Reducible);
  const auto cyc = certify_irreducible(IntPoly{1, 1, 1}, 200);
  CHECK(cyc.kind == IrreducibilityVerdict::Kind::Irreducible);
  CHECK(*cyc.prime == 2);
  // (X^2 + 1)(X^2 + 2) has no rational root and no certificate prime.
  const auto prod = certify_irreducible(IntPoly{1, 0, 1} * IntPoly{2, 0, 1}, 200);
  CHECK(prod.kind == IrreducibilityVerdict::Kind::Inconclusive);
  const auto p7 = certify_irreducible(pn_poly(7), 200);
  CHECK(p7.kind == IrreducibilityVerdict::Kind::Irreducible);
  CHECK(is_irreducible_mod_p(ModPoly::from_int(pn_poly(7), *p7.prime)));
}

TEST_CASE("factor degree patterns") {
  CHECK(factor_degrees_mod_p(ModPoly(2, {1, 1}) * ModPoly(2, {1, 1, 1})) == std::vector<int>{1, 2});
  CHECK(factor_degrees_mod_p(ModPoly(3, {1, 0, 0, 0, 1})) == std::vector<int>{2, 2});
  CHECK(factor_degrees_mod_p(ModPoly(3, {1, 2, 1})).empty());
  CHECK(factor_degrees_mod_p(ModPoly(5, {3})).empty());
  CHECK(factor_degrees_mod_p(ModPoly(7, {3, 0, 0, 0, 0, 1})).size() >= 1);
  CHECK_THROWS_AS(factor_degrees_mod_p(ModPoly(9, {1, 1})), NotPrime);

  // Degrees always add up, and agree with the irreducibility test.
  std::mt19937_64 rng(5);
  for (std::uint64_t p : {2, 3, 5, 7}) {
    std::uniform_int_distribution<long long> c(0, static_cast<long long>(p) - 1);
    for (int i = 0; i < 30; ++i) {
      std::vector<std::uint64_t> co;
      for (int j = 0; j < 7; ++j) co.push_back(c(rng));
      co.push_back(1);
      const ModPoly f(p, co);
      const auto d = factor_degrees_mod_p(f);
      if (d.empty()) continue;
      int total = 0;
      for (int x : d) total += x;
      CHECK(total == 7);
      CHECK((d.size() == 1) == is_irreducible_mod_p(f));
    }
  }
}

TEST_CASE("products are never certified irreducible") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> coef(-6, 6);
  for (int i = 0; i < 40; ++i) {
    auto random_poly = [&](int degree) {
      std::vector<BigInt> c;
      for (int j = 0; j < degree; ++j) c.push_back(coef(rng));
      c.push_back(1);
      if (c[0] == 0) c[0] = 1;
      return IntPoly(std::move(c));
    };
    const IntPoly f = random_poly(2 + i % 3) * random_poly(3 + i % 4);
    CHECK(certify_irreducible(f, 300).kind != IrreducibilityVerdict::Kind::Irreducible);
  }
}

TEST_CASE("combined degree certificate") {
  // mu(T(4), X) / X^2 = X^6 - 6X^4 + 7X^2 - 1 factors mod every small prime.
  const IntPoly f{-1, 0, 7, 0, -6, 0, 1};
  const auto v = certify_irreducible(f, 200);
  CHECK(v.kind == IrreducibilityVerdict::Kind::Irreducible);
  CHECK_FALSE(v.prime.has_value());
  CHECK(v.degree_primes.size() >= 2);
}
