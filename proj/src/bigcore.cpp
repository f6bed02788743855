#include "wilf/bigcore.hpp"

#include <functional>
#include <string>

#include "wilf/errors.hpp"

namespace wilf {

namespace {

void next_stirling_row(std::vector<BigInt>& row) {
  // row holds S(n, 0..n); rewrite in place to S(n+1, 0..n+1).
  const std::size_t n = row.size() - 1;
  row.emplace_back(0);
  for (std::size_t k = n + 1; k >= 1; --k) {
    row[k] *= static_cast<unsigned long>(k);
    row[k] += row[k - 1];
  }
  row[0] = 0;
}

BigInt alternating_sum(const std::vector<BigInt>& row) {
  BigInt s = 0;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j % 2 == 0) {
      s += row[j];
    } else {
      s -= row[j];
    }
  }
  return s;
}

}  // namespace

StirlingTable::StirlingTable(std::uint64_t max_n) {
  rows_.reserve(max_n + 1);
  std::vector<BigInt> row{BigInt(1)};
  rows_.push_back(row);
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    next_stirling_row(row);
    rows_.push_back(row);
  }
}

const std::vector<BigInt>& StirlingTable::row(std::uint64_t n) const {
  if (n >= rows_.size()) {
    throw InvalidArgument("StirlingTable: row " + std::to_string(n) + " beyond bound " +
                          std::to_string(max_n()));
  }
  return rows_[n];
}

const BigInt& StirlingTable::operator()(std::uint64_t n, std::uint64_t k) const {
  static const BigInt kZero = 0;
  const auto& r = row(n);
  return k < r.size() ? r[k] : kZero;
}

std::vector<BigInt> stirling_row(std::uint64_t n) {
  std::vector<BigInt> row{BigInt(1)};
  row.reserve(n + 1);
  for (std::uint64_t i = 0; i < n; ++i) next_stirling_row(row);
  return row;
}

BigInt stirling2(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  return stirling_row(n)[k];
}

BigInt bell(std::uint64_t n) {
  BigInt s = 0;
  for (const auto& v : stirling_row(n)) s += v;
  return s;
}

BigInt f_alt_sum(std::uint64_t n) { return alternating_sum(stirling_row(n)); }

FTable f_table_recursive(std::uint64_t max_n) {
  FTable t;
  t.values.reserve(max_n + 1);
  t.values.emplace_back(1);
  std::vector<BigInt> pascal{BigInt(1)};  // binom(n, 0..n)
  for (std::uint64_t n = 0; n < max_n; ++n) {
    BigInt s = 0;
    for (std::uint64_t j = 0; j <= n; ++j) s += pascal[j] * t.values[n - j];
    t.values.push_back(-s);
    pascal.emplace_back(1);
    for (std::size_t j = pascal.size() - 2; j >= 1; --j) pascal[j] += pascal[j - 1];
  }
  return t;
}

FTable f_table_alt(std::uint64_t max_n) {
  FTable t;
  t.values.reserve(max_n + 1);
  std::vector<BigInt> row{BigInt(1)};
  row.reserve(max_n + 1);
  t.values.push_back(alternating_sum(row));
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    next_stirling_row(row);
    t.values.push_back(alternating_sum(row));
  }
  return t;
}

std::vector<std::uint64_t> bell_mod(std::uint64_t max_n, std::uint64_t m) {
  if (m == 0) throw InvalidModulus("bell_mod: modulus must be positive");
  // Row n of the Aitken array starts with B_n; each row begins with the last
  // entry of the previous one and adds its left neighbour to the entry above.
  std::vector<std::uint64_t> out{1 % m};
  std::vector<std::uint64_t> prev{1 % m};
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    std::vector<std::uint64_t> cur;
    cur.reserve(prev.size() + 1);
    cur.push_back(prev.back());
    for (std::size_t i = 0; i < prev.size(); ++i) {
      std::uint64_t v = cur.back() + prev[i];
      if (v >= m) v -= m;
      cur.push_back(v);
    }
    out.push_back(cur.front());
    prev = std::move(cur);
  }
  return out;
}

CheckReport check_bell_parity(std::uint64_t max_n) {
  CheckReport report{"f(n) == B_n mod 2", 0, {}};
  std::vector<BigInt> row{BigInt(1)};
  for (std::uint64_t n = 0; n <= max_n; ++n) {
    if (n > 0) next_stirling_row(row);
    BigInt b = 0;
    for (const auto& v : row) b += v;
    const BigInt f = alternating_sum(row);
    ++report.cases;
    if (mpz_odd_p(f.get_mpz_t()) != mpz_odd_p(b.get_mpz_t())) {
      report.fail("n=" + std::to_string(n) + ": f=" + f.get_str() + " B=" + b.get_str());
    }
  }
  return report;
}

BigInt signed_factorization_count(std::uint64_t m) {
  if (m == 0) throw InvalidArgument("signed_factorization_count: m must be positive");
  // Unordered factorizations into factors > 1 (multiplicative partitions):
  // choose factors in non-decreasing order; each factor flips the sign.
  std::function<BigInt(std::uint64_t, std::uint64_t)> count =
      [&](std::uint64_t rest, std::uint64_t min_factor) -> BigInt {
    if (rest == 1) return 1;
    // Either `rest` is the last factor, or a factor d with d <= rest / d.
    BigInt total = rest >= min_factor ? BigInt(-1) : BigInt(0);
    for (std::uint64_t d = min_factor; d * d <= rest; ++d) {
      if (rest % d == 0) total -= count(rest / d, d);
    }
    return total;
  };
  return count(m, 2);
}

}  // namespace wilf
