#include "wilf/wilfpoly.hpp"

#include <string>

#include "wilf/bigcore.hpp"
#include "wilf/errors.hpp"

namespace wilf {

namespace {

const IntPoly kX{0, 1};

IntPoly next_pn(const IntPoly& prev) { return kX * prev - prev.shifted(1); }

std::string label(std::uint64_t n, std::uint64_t k) {
  return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
}

void check_shift_identity(const std::vector<IntPoly>& P, const ShiftCoeffs& a, std::uint64_t n,
                          CheckReport& report) {
  const IntPoly lhs = P[n].shifted(static_cast<unsigned long>(a.k));
  IntPoly rhs;
  for (std::uint64_t r = 0; r <= a.k; ++r) rhs += a.coeffs[r] * P[n + r];
  ++report.cases;
  if (!(lhs == rhs)) {
    report.fail(label(n, a.k) + ": " + lhs.to_string() + " != " + rhs.to_string());
  }
}

void check_shift_congruence(const FTable& f, const ShiftCoeffs& a, std::uint64_t n, CheckReport& report) {
  BigInt rhs = 0;
  for (std::uint64_t r = 1; r <= a.k; ++r) rhs += a.coeffs[r].coeff(0) * f[n + r];
  BigInt diff = f[n] - rhs;
  ++report.cases;
  if (!mpz_divisible_ui_p(diff.get_mpz_t(), a.k)) {
    report.fail(label(n, a.k) + ": f(n) - sum = " + diff.get_str());
  }
}

}  // namespace

IntPoly pn_poly(std::uint64_t n) {
  IntPoly p{1};
  for (std::uint64_t i = 0; i < n; ++i) p = next_pn(p);
  return p;
}

std::vector<IntPoly> pn_table(std::uint64_t max_n) {
  std::vector<IntPoly> out;
  out.reserve(max_n + 1);
  out.push_back(IntPoly{1});
  for (std::uint64_t i = 1; i <= max_n; ++i) out.push_back(next_pn(out.back()));
  return out;
}

BigInt pn_eval(std::uint64_t n, const BigInt& x) { return pn_poly(n).eval(x); }

CheckReport pn_coeff_identity_check(std::uint64_t n) {
  CheckReport report{"P_n(X) == sum_j binom(n,j) f(n-j) X^j", 0, {}};
  const IntPoly p = pn_poly(n);
  const FTable f = f_table_alt(n);
  for (std::uint64_t j = 0; j <= n; ++j) {
    const BigInt expected = binomial(n, j) * f[n - j];
    ++report.cases;
    if (p.coeff(j) != expected) {
      report.fail("n=" + std::to_string(n) + " j=" + std::to_string(j) + ": " + p.coeff(j).get_str() +
                  " != " + expected.get_str());
    }
  }
  if (p.degree() > static_cast<int>(n)) report.fail("n=" + std::to_string(n) + ": degree exceeds n");
  return report;
}

ShiftCoeffs shift_coeffs(std::uint64_t k) {
  if (k < 1) throw InvalidArgument("shift_coeffs: k must be >= 1");
  // Array indexed by Y-degree of polynomials in X; start from the empty product.
  std::vector<IntPoly> acc{IntPoly{1}};
  for (std::uint64_t i = 0; i < k; ++i) {
    // multiply by (X + i) - Y
    const IntPoly linear{static_cast<long>(i), 1};
    std::vector<IntPoly> next(acc.size() + 1);
    for (std::size_t r = 0; r < acc.size(); ++r) {
      next[r] += linear * acc[r];
      next[r + 1] -= acc[r];
    }
    acc = std::move(next);
  }
  return {k, std::move(acc)};
}

ShiftCoeffs shift_coeffs_next(const ShiftCoeffs& prev) {
  const std::uint64_t k = prev.k;
  std::vector<IntPoly> out(k + 2);
  for (std::uint64_t t = 0; t <= k + 1; ++t) {
    if (t <= k) out[t] += kX * prev.coeffs[t].shifted(1);
    if (t >= 1) out[t] -= prev.coeffs[t - 1].shifted(1);
  }
  return {k + 1, std::move(out)};
}

CheckReport shift_identity_check(std::uint64_t n, std::uint64_t k) {
  CheckReport report{"P_n(X+k) == sum_r a_{r,k}(X) P_{n+r}(X)", 0, {}};
  check_shift_identity(pn_table(n + k), shift_coeffs(k), n, report);
  return report;
}

CheckReport shift_congruence_check(std::uint64_t n, std::uint64_t k) {
  if (k < 2) throw InvalidArgument("shift_congruence_check: k must be >= 2");
  CheckReport report{"f(n) == sum_r a_{r,k}(0) f(n+r) mod k", 0, {}};
  check_shift_congruence(f_table_alt(n + k), shift_coeffs(k), n, report);
  return report;
}

CheckReport shift_identity_sweep(std::uint64_t max_n, std::uint64_t max_k) {
  CheckReport report{"P_n(X+k) == sum_r a_{r,k}(X) P_{n+r}(X)", 0, {}};
  const auto P = pn_table(max_n + max_k);
  for (std::uint64_t k = 1; k <= max_k; ++k) {
    const ShiftCoeffs a = shift_coeffs(k);
    for (std::uint64_t n = 0; n <= max_n; ++n) check_shift_identity(P, a, n, report);
  }
  return report;
}

CheckReport shift_congruence_sweep(std::uint64_t max_n, std::uint64_t max_k) {
  CheckReport report{"f(n) == sum_r a_{r,k}(0) f(n+r) mod k", 0, {}};
  const FTable f = f_table_alt(max_n + max_k);
  for (std::uint64_t k = 2; k <= max_k; ++k) {
    const ShiftCoeffs a = shift_coeffs(k);
    for (std::uint64_t n = 0; n <= max_n; ++n) check_shift_congruence(f, a, n, report);
  }
  return report;
}

}  // namespace wilf
