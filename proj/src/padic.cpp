#include "wilf/padic.hpp"

#include <string>

#include "wilf/bigcore.hpp"
#include "wilf/errors.hpp"
#include "wilf/polyring.hpp"

namespace wilf {

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime_u64(p)) throw NotPrime(std::to_string(p) + " is not prime");
}

}  // namespace

BigInt PadicTrunc::symmetric() const {
  const BigInt q = modulus();
  BigInt v = value;
  if (2 * v > q) v -= q;
  return v;
}

std::uint64_t vp(const BigInt& a, std::uint64_t p) {
  if (sgn(a) == 0) throw ZeroInput("vp: valuation of zero is infinite");
  require_prime(p);
  BigInt rest = abs(a);
  std::uint64_t v = 0;
  // mpz_remove strips every factor of p at once.
  BigInt pb = big(p);
  v = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), pb.get_mpz_t());
  return v;
}

BigInt u_coeff(std::uint64_t k) {
  const auto row = stirling_row(k + 1);
  BigInt s = 0;
  for (std::uint64_t j = 1; j <= k + 1; ++j) {
    if (j % 2 == 0) {
      s += row[j];
    } else {
      s -= row[j];
    }
  }
  return k % 2 == 0 ? s : BigInt(-s);
}

PadicTrunc partial_factorial_sum(std::uint64_t k, std::uint64_t M, std::uint64_t p, unsigned t) {
  if (M < 1 || t < 1) throw InvalidArgument("partial_factorial_sum: M and t must be >= 1");
  require_prime(p);
  PadicTrunc out{p, t, 0};
  const BigInt q = out.modulus();
  BigInt fact = 1;
  BigInt nk;
  for (std::uint64_t n = 1; n <= M; ++n) {
    fact = (fact * static_cast<unsigned long>(n)) % q;
    if (sgn(fact) == 0) break;  // every later term vanishes mod p^t
    mpz_powm_ui(nk.get_mpz_t(), big(n).get_mpz_t(), k, q.get_mpz_t());
    out.value = (out.value + nk * fact) % q;
  }
  return out;
}

CheckReport alpha1_identity_check(std::uint64_t M) {
  CheckReport report{"sum_{n<=m} n*n! == (m+1)! - 1", 0, {}};
  BigInt sum = 0;
  BigInt fact = 1;  // n!
  for (std::uint64_t m = 0; m <= M; ++m) {
    if (m > 0) fact *= static_cast<unsigned long>(m);
    sum += fact * static_cast<unsigned long>(m);
    const BigInt next_fact = fact * static_cast<unsigned long>(m + 1);
    ++report.cases;
    if (sum != next_fact - 1) report.fail("m=" + std::to_string(m));
  }
  return report;
}

PadicTrunc alpha_k_stabilization(std::uint64_t k, std::uint64_t p, unsigned t, const StabilizationOptions& opts) {
  if (t < 1) throw InvalidArgument("alpha_k_stabilization: precision must be >= 1");
  require_prime(p);
  PadicTrunc out{p, t, 0};
  const BigInt q = out.modulus();
  BigInt u = u_coeff(k) % q;
  if (sgn(u) < 0) u += q;
  // The window itself needs room after the terms vanish, so it is added to the cap.
  const std::uint64_t cap = opts.cap_factor * t * p + opts.window;
  BigInt fact = 1;
  BigInt nk;
  std::uint64_t unchanged = 0;
  for (std::uint64_t M = 1; M <= cap; ++M) {
    fact = (fact * static_cast<unsigned long>(M)) % q;
    mpz_powm_ui(nk.get_mpz_t(), big(M).get_mpz_t(), k, q.get_mpz_t());
    const BigInt next = (out.value + (nk + u) * fact) % q;
    if (next == out.value && M > 1) {
      if (++unchanged >= opts.window) return out;
    } else {
      unchanged = 0;
    }
    out.value = next;
  }
  throw NoStabilization("alpha_" + std::to_string(k) + " mod " + std::to_string(p) + "^" + std::to_string(t) +
                        " not constant over " + std::to_string(opts.window) + " terms by M=" + std::to_string(cap));
}

}  // namespace wilf
