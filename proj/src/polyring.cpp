#include "wilf/polyring.hpp"

#include <algorithm>
#include <string>

#include "wilf/errors.hpp"

namespace wilf {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

namespace {

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= m - b ? a - (m - b) : a + b;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return a >= b ? a - b : a + (m - b); }

std::uint64_t negmod(std::uint64_t a, std::uint64_t m) { return a == 0 ? 0 : m - a; }

std::uint64_t reduce_signed(long long v, std::uint64_t m) {
  if (v >= 0) return static_cast<std::uint64_t>(v) % m;
  const std::uint64_t r = (static_cast<std::uint64_t>(-(v + 1)) + 1) % m;
  return negmod(r, m);
}

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

ModPoly x_poly(std::uint64_t m) { return ModPoly(m, std::vector<std::uint64_t>{0, 1}); }

ModPoly pow_mod_poly(ModPoly base, const BigInt& e, const ModPoly& modulus) {
  ModPoly result(modulus.modulus(), std::vector<std::uint64_t>{1});
  result = result.rem(modulus);
  base = base.rem(modulus);
  const std::size_t bits = sgn(e) == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result).rem(modulus);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * base).rem(modulus);
  }
  return result;
}

ModPoly monic_field(const ModPoly& f) {
  const auto inv = invmod(f.leading(), f.modulus());
  return f.scaled(*inv);
}

ModPoly gcd_field(ModPoly a, ModPoly b) {
  while (!b.is_zero()) {
    ModPoly r = a.rem(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : monic_field(a);
}

}  // namespace

std::optional<std::uint64_t> invmod(std::uint64_t a, std::uint64_t m) {
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    const __int128 q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (r != 1) return std::nullopt;
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit inputs.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

ModPoly::ModPoly(std::uint64_t m) : m_(m) {
  if (m < 2) throw InvalidModulus("ModPoly: modulus must be >= 2");
}

ModPoly::ModPoly(std::uint64_t m, std::vector<std::uint64_t> coeffs) : m_(m), c_(std::move(coeffs)) {
  if (m < 2) throw InvalidModulus("ModPoly: modulus must be >= 2");
  for (auto& c : c_) c %= m;
  trim();
}

ModPoly::ModPoly(std::uint64_t m, std::initializer_list<long long> coeffs) : m_(m) {
  if (m < 2) throw InvalidModulus("ModPoly: modulus must be >= 2");
  for (long long c : coeffs) c_.push_back(reduce_signed(c, m));
  trim();
}

ModPoly ModPoly::from_int(const IntPoly& p, std::uint64_t m) {
  std::vector<std::uint64_t> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(mod_u64(v, m));
  return ModPoly(m, std::move(c));
}

void ModPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly& ModPoly::operator+=(const ModPoly& o) {
  if (o.m_ != m_) throw InvalidArgument("ModPoly: modulus mismatch");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = addmod(c_[i], o.c_[i], m_);
  trim();
  return *this;
}

ModPoly& ModPoly::operator-=(const ModPoly& o) {
  if (o.m_ != m_) throw InvalidArgument("ModPoly: modulus mismatch");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = submod(c_[i], o.c_[i], m_);
  trim();
  return *this;
}

ModPoly ModPoly::scaled(std::uint64_t s) const {
  ModPoly r = *this;
  for (auto& c : r.c_) c = mulmod(c, s % m_, m_);
  r.trim();
  return r;
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  if (a.m_ != b.m_) throw InvalidArgument("ModPoly: modulus mismatch");
  if (a.is_zero() || b.is_zero()) return ModPoly(a.m_);
  const std::uint64_t m = a.m_;
  std::vector<std::uint64_t> out(a.c_.size() + b.c_.size() - 1, 0);
  if (m <= (std::uint64_t{1} << 31)) {
    // Products stay below 2^62, so accumulate a few before reducing.
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      const std::uint64_t ai = a.c_[i];
      if (ai == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = (out[i + j] + ai * b.c_[j]) % m;
    }
  } else {
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = addmod(out[i + j], mulmod(a.c_[i], b.c_[j], m), m);
    }
  }
  return ModPoly(m, std::move(out));
}

std::pair<ModPoly, ModPoly> ModPoly::divmod(const ModPoly& n, const ModPoly& d) {
  if (n.m_ != d.m_) throw InvalidArgument("ModPoly: modulus mismatch");
  if (d.is_zero()) throw InvalidArgument("ModPoly: division by zero polynomial");
  const std::uint64_t m = n.m_;
  const auto inv = invmod(d.leading(), m);
  if (!inv) throw InvalidArgument("ModPoly: leading coefficient of divisor is not a unit");
  if (n.degree() < d.degree()) return {ModPoly(m), n};
  std::vector<std::uint64_t> r = n.c_;
  const std::size_t dd = d.c_.size() - 1;
  std::vector<std::uint64_t> q(r.size() - dd, 0);
  for (std::size_t i = r.size(); i-- > dd;) {
    if (r[i] == 0) continue;
    const std::uint64_t factor = mulmod(r[i], *inv, m);
    q[i - dd] = factor;
    for (std::size_t j = 0; j <= dd; ++j) r[i - dd + j] = submod(r[i - dd + j], mulmod(factor, d.c_[j], m), m);
  }
  r.resize(dd);
  return {ModPoly(m, std::move(q)), ModPoly(m, std::move(r))};
}

ModPoly ModPoly::rem(const ModPoly& d) const { return divmod(*this, d).second; }

QuotientElement::QuotientElement(ModPoly reducer, ModPoly rep)
    : reducer_(std::move(reducer)), rep_(std::move(rep)) {
  if (reducer_.degree() < 1) throw InvalidArgument("QuotientElement: reducer must have degree >= 1");
  rep_ = rep_.rem(reducer_);
}

QuotientElement QuotientElement::one(const ModPoly& reducer) {
  return QuotientElement(reducer, ModPoly(reducer.modulus(), std::vector<std::uint64_t>{1}));
}

bool QuotientElement::is_one() const { return rep_.degree() == 0 && rep_.coeff(0) == 1; }

QuotientElement operator*(const QuotientElement& a, const QuotientElement& b) {
  if (!(a.reducer_ == b.reducer_)) throw InvalidArgument("QuotientElement: different rings");
  return QuotientElement(a.reducer_, a.rep_ * b.rep_);
}

ModPoly build_D(std::uint64_t m) {
  if (m < 2) throw InvalidModulus("build_D: modulus must be >= 2");
  std::vector<std::uint64_t> c{1};
  c.reserve(m + 1);
  for (std::uint64_t j = 1; j < m; ++j) {
    // multiply by (1 - j x)
    c.push_back(0);
    for (std::size_t i = c.size() - 1; i >= 1; --i) c[i] = submod(c[i], mulmod(j, c[i - 1], m), m);
  }
  c.resize(m + 1, 0);
  // - (-1)^m x^m
  c[m] = (m % 2 == 0) ? submod(c[m], 1, m) : addmod(c[m], 1, m);
  return ModPoly(m, std::move(c));
}

ModPoly build_Q(std::uint64_t m) {
  if (m < 2) throw InvalidModulus("build_Q: modulus must be >= 2");
  // suffix = prod_{j=k+1}^{m-1} (1 - j x), built for k = m-1 down to 0.
  std::vector<std::uint64_t> suffix{1};
  std::vector<std::uint64_t> q(m, 0);
  for (std::uint64_t k = m; k-- > 0;) {
    if (k + 1 < m) {
      const std::uint64_t j = k + 1;
      suffix.push_back(0);
      for (std::size_t i = suffix.size() - 1; i >= 1; --i) suffix[i] = submod(suffix[i], mulmod(j, suffix[i - 1], m), m);
    }
    const bool negative = k % 2 == 1;
    for (std::size_t i = 0; i < suffix.size(); ++i) {
      const std::uint64_t term = negative ? negmod(suffix[i], m) : suffix[i];
      q[k + i] = addmod(q[k + i], term, m);
    }
  }
  return ModPoly(m, std::move(q));
}

std::vector<std::uint64_t> series_expand(const ModPoly& num, const ModPoly& den, std::size_t count) {
  if (num.modulus() != den.modulus()) throw InvalidArgument("series_expand: modulus mismatch");
  const std::uint64_t m = den.modulus();
  const auto inv0 = invmod(den.coeff(0), m);
  if (!inv0) throw NonInvertibleConstantTerm("series_expand: denominator constant term not invertible mod " + std::to_string(m));
  std::vector<std::uint64_t> out;
  out.reserve(count);
  const std::size_t dd = den.is_zero() ? 0 : static_cast<std::size_t>(den.degree());
  for (std::size_t n = 0; n < count; ++n) {
    std::uint64_t acc = num.coeff(n);
    for (std::size_t i = 1; i <= std::min(n, dd); ++i) acc = submod(acc, mulmod(den.coeff(i), out[n - i], m), m);
    out.push_back(mulmod(acc, *inv0, m));
  }
  return out;
}

QuotientElement inverse_of_x(const ModPoly& D) {
  if (D.degree() < 1 || D.coeff(0) != 1) throw MalformedD("inverse_of_x: D(0) must be 1");
  const std::uint64_t m = D.modulus();
  std::vector<std::uint64_t> g(D.coeffs().size() - 1);
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = negmod(D.coeff(i + 1), m);
  QuotientElement inv(D, ModPoly(m, std::move(g)));
  if (!(inv * QuotientElement(D, x_poly(m))).is_one()) {
    throw MalformedD("inverse_of_x: x * g does not reduce to 1");
  }
  return inv;
}

QuotientElement powmod_x(const ModPoly& D, const BigInt& e) {
  if (D.degree() < 1) throw InvalidArgument("powmod_x: D must have degree >= 1");
  if (sgn(e) < 0) throw InvalidArgument("powmod_x: negative exponent");
  return QuotientElement(D, pow_mod_poly(x_poly(D.modulus()), e, D));
}

bool verify_period_certificate(std::uint64_t m, const BigInt& N) {
  if (sgn(N) <= 0) throw InvalidArgument("verify_period_certificate: N must be >= 1");
  return powmod_x(build_D(m), N).is_one();
}

OrderResult order_of_x(const ModPoly& D, const BigInt& multiple, std::uint64_t trial_bound) {
  if (sgn(multiple) <= 0 || !powmod_x(D, multiple).is_one()) {
    throw InvalidArgument("order_of_x: x^multiple is not 1 modulo D");
  }
  std::vector<std::pair<BigInt, unsigned>> factors;
  BigInt rest = multiple;
  for (std::uint64_t d = 2; d <= trial_bound; d += (d == 2 ? 1 : 2)) {
    if (BigInt(static_cast<unsigned long>(d)) * static_cast<unsigned long>(d) > rest) break;
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), d)) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
      ++e;
    }
    factors.emplace_back(BigInt(static_cast<unsigned long>(d)), e);
  }
  OrderResult out{multiple, true};
  if (rest > 1) {
    const BigInt bound_sq = BigInt(static_cast<unsigned long>(trial_bound)) * static_cast<unsigned long>(trial_bound);
    const bool prime = rest <= bound_sq || mpz_probab_prime_p(rest.get_mpz_t(), 40) > 0;
    if (!prime) out.complete = false;
    factors.emplace_back(rest, 1);
  }
  for (const auto& [q, e] : factors) {
    for (unsigned i = 0; i < e; ++i) {
      const BigInt candidate = out.order / q;
      if (!powmod_x(D, candidate).is_one()) break;
      out.order = candidate;
    }
  }
  return out;
}

bool is_irreducible_mod_p(const ModPoly& f) {
  const std::uint64_t p = f.modulus();
  if (!is_prime_u64(p)) throw NotPrime("is_irreducible_mod_p: " + std::to_string(p) + " is not prime");
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const ModPoly g = monic_field(f);
  const ModPoly x = x_poly(p);
  ModPoly h = x.rem(g);
  const BigInt pb = big(p);
  for (int d = 1; 2 * d <= g.degree(); ++d) {
    h = pow_mod_poly(h, pb, g);
    if (gcd_field(h - x, g).degree() >= 1) return false;
  }
  return true;
}

std::vector<int> factor_degrees_mod_p(const ModPoly& f) {
  const std::uint64_t p = f.modulus();
  if (!is_prime_u64(p)) throw NotPrime("factor_degrees_mod_p: " + std::to_string(p) + " is not prime");
  std::vector<int> degrees;
  if (f.degree() < 1) return degrees;
  ModPoly g = monic_field(f);
  std::vector<std::uint64_t> dc;
  for (int i = 1; i <= g.degree(); ++i) dc.push_back(mulmod(g.coeff(i), static_cast<std::uint64_t>(i) % p, p));
  if (gcd_field(g, ModPoly(p, std::move(dc))).degree() != 0) return degrees;

  const ModPoly x = x_poly(p);
  const BigInt pb = big(p);
  ModPoly h = x.rem(g);
  for (int d = 1; 2 * d <= g.degree(); ++d) {
    h = pow_mod_poly(h, pb, g);
    const ModPoly part = gcd_field(h - x, g);
    if (part.degree() >= 1) {
      for (int k = 0; k < part.degree() / d; ++k) degrees.push_back(d);
      g = ModPoly::divmod(g, part).first;
      h = h.rem(g);
    }
  }
  if (g.degree() >= 1) degrees.push_back(g.degree());
  return degrees;
}

std::vector<BigRational> rational_roots(const IntPoly& input) {
  std::vector<BigRational> roots;
  if (input.degree() < 1) return roots;
  IntPoly f = input.primitive_part();
  // Zero roots first, so the remaining constant term is nonzero.
  std::size_t zeros = 0;
  while (sgn(f.coeff(zeros)) == 0) ++zeros;
  if (zeros > 0) {
    roots.emplace_back(0);
    f = f.divided_by_x_power(zeros);
  }
  if (f.degree() < 1) return roots;

  for (int attempt = 0; attempt < 2; ++attempt) {
    if (attempt == 1) f = squarefree_part(f);
    const auto d = static_cast<std::size_t>(f.degree());
    const BigInt lc = f.leading();
    // g(y) = lc^(d-1) f(y / lc) is monic with integer coefficients; its
    // integer roots are lc times the rational roots of f.
    std::vector<BigInt> gc(d + 1);
    BigInt scale = 1;
    for (std::size_t i = d + 1; i-- > 0;) {
      if (i == d) {
        gc[i] = 1;
        continue;
      }
      gc[i] = f.coeff(i) * scale;
      scale *= lc;
    }
    const IntPoly g(std::move(gc));
    const IntPoly dg = g.derivative();
    BigInt bound = 0;
    for (const auto& c : g.coeffs()) bound = std::max(bound, BigInt(abs(c)));
    bound += 1;

    std::uint64_t p = 0;
    for (std::uint64_t cand = 3; cand < 20000; cand += 2) {
      if (!is_prime_u64(cand)) continue;
      const ModPoly gp = ModPoly::from_int(g, cand);
      if (gcd_field(gp, ModPoly::from_int(dg, cand)).degree() == 0) {
        p = cand;
        break;
      }
    }
    if (p == 0) continue;  // not squarefree; retry on the squarefree part

    std::vector<BigRational> found;
    const BigInt pb = big(p);
    for (std::uint64_t r0 = 0; r0 < p; ++r0) {
      if (mod_u64(g.eval(big(r0)), p) != 0) continue;
      BigInt r = big(r0);
      BigInt q = pb;
      while (q <= 2 * bound) {
        q *= q;
        BigInt deriv = dg.eval(r);
        BigInt inv;
        mpz_invert(inv.get_mpz_t(), deriv.get_mpz_t(), q.get_mpz_t());
        r = r - g.eval(r) * inv;
        mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t());
      }
      if (2 * r > q) r -= q;
      if (sgn(g.eval(r)) == 0) {
        BigRational root(r, lc);
        root.canonicalize();
        found.push_back(root);
      }
    }
    roots.insert(roots.end(), found.begin(), found.end());
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  throw Error("rational_roots: no prime below 20000 keeps the polynomial squarefree");
}

IrreducibilityVerdict certify_irreducible(const IntPoly& input, std::uint64_t prime_bound) {
  if (input.degree() < 1) throw InvalidArgument("certify_irreducible: polynomial must be nonconstant");
  const IntPoly f = input.primitive_part();
  IrreducibilityVerdict verdict;
  if (auto roots = rational_roots(f); !roots.empty()) {
    verdict.kind = IrreducibilityVerdict::Kind::Reducible;
    verdict.root = roots.front();
    return verdict;
  }
  // A factor over Z of degree k reduces to a product of factors mod p whose
  // degrees sum to k, for every p not dividing the leading coefficient.
  const auto n = static_cast<std::size_t>(f.degree());
  std::vector<bool> possible(n + 1, true);
  std::vector<std::uint64_t> used;
  for (std::uint64_t p = 2; p <= prime_bound; ++p) {
    if (!is_prime_u64(p) || mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) continue;
    ++verdict.primes_tried;
    const auto degrees = factor_degrees_mod_p(ModPoly::from_int(f, p));
    if (degrees.empty()) continue;
    if (degrees.size() == 1) {
      verdict.kind = IrreducibilityVerdict::Kind::Irreducible;
      verdict.prime = p;
      verdict.degree_primes.clear();
      return verdict;
    }
    std::vector<bool> sums(n + 1, false);
    sums[0] = true;
    for (int d : degrees)
      for (std::size_t k = n; k >= static_cast<std::size_t>(d); --k) sums[k] = sums[k] || sums[k - d];
    bool narrowed = false;
    for (std::size_t k = 1; k < n; ++k) {
      if (possible[k] && !sums[k]) {
        possible[k] = false;
        narrowed = true;
      }
    }
    if (narrowed) used.push_back(p);
    if (std::none_of(possible.begin() + 1, possible.end() - 1, [](bool b) { return b; })) {
      verdict.kind = IrreducibilityVerdict::Kind::Irreducible;
      verdict.degree_primes = used;
      return verdict;
    }
  }
  return verdict;
}

}  // namespace wilf
