#include "wilf/intpoly.hpp"

#include "wilf/errors.hpp"

namespace wilf {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

IntPoly IntPoly::shifted(const BigInt& c) const {
  const std::size_t n = coeffs_.size();
  std::vector<BigInt> out(n);
  std::vector<BigInt> powers(n);  // c^0 .. c^(n-1)
  if (n > 0) powers[0] = 1;
  for (std::size_t i = 1; i < n; ++i) powers[i] = powers[i - 1] * c;
  std::vector<BigInt> pascal{BigInt(1)};
  for (std::size_t i = 0; i < n; ++i) {
    // a_i (X + c)^i = a_i sum_j binom(i, j) c^(i-j) X^j
    if (sgn(coeffs_[i]) != 0) {
      for (std::size_t j = 0; j <= i; ++j) out[j] += coeffs_[i] * pascal[j] * powers[i - j];
    }
    pascal.emplace_back(1);
    for (std::size_t j = pascal.size() - 2; j >= 1; --j) pascal[j] += pascal[j - 1];
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(out));
}

IntPoly IntPoly::times_x_power(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<BigInt> out(k);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(out));
}

IntPoly IntPoly::divided_by_x_power(std::size_t k) const {
  for (std::size_t i = 0; i < k && i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) throw InvalidArgument("divided_by_x_power: not divisible by X^k");
  }
  if (k >= coeffs_.size()) return {};
  return IntPoly(std::vector<BigInt>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (sgn(leading()) < 0) g = -g;
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const BigInt mag = abs(c);
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

RationalPoly::RationalPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPoly::RationalPoly(const IntPoly& p) {
  coeffs_.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) coeffs_.emplace_back(c);
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigRational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * BigRational(static_cast<unsigned long>(i));
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::monic() const {
  if (is_zero()) return {};
  RationalPoly r = *this;
  const BigRational lc = leading();
  for (auto& c : r.coeffs_) c /= lc;
  return r;
}

RationalPoly RationalPoly::operator-() const {
  RationalPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divmod(const RationalPoly& n, const RationalPoly& d) {
  if (d.is_zero()) throw InvalidArgument("RationalPoly::divmod: division by zero polynomial");
  std::vector<BigRational> rem = n.coeffs_;
  if (n.degree() < d.degree()) return {RationalPoly{}, n};
  const std::size_t dd = d.coeffs_.size() - 1;
  std::vector<BigRational> quot(rem.size() - dd);
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (sgn(rem[i]) == 0) continue;
    const BigRational q = rem[i] / d.coeffs_[dd];
    quot[i - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d.coeffs_[j];
  }
  rem.resize(dd);
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

RationalPoly RationalPoly::gcd(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r).monic();
  }
  return a.monic();
}

IntPoly RationalPoly::to_primitive_int() const {
  BigInt lcm_den = 1;
  for (const auto& c : coeffs_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i] = coeffs_[i].get_num() * (lcm_den / coeffs_[i].get_den());
  }
  return IntPoly(std::move(out)).primitive_part();
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() <= 0) return p.primitive_part();
  const RationalPoly rp(p);
  const RationalPoly g = RationalPoly::gcd(rp, rp.derivative());
  return RationalPoly::divmod(rp, g).first.to_primitive_int();
}

}  // namespace wilf
