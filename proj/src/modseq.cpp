#include "wilf/modseq.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "wilf/errors.hpp"

namespace wilf {

namespace {

struct MaskReduce {
  std::uint32_t mask;
};

struct BarrettReduce {
  std::uint64_t m;
  std::uint64_t inv;  // floor((2^64 - 1) / m)

  explicit BarrettReduce(std::uint64_t modulus) : m(modulus), inv(~std::uint64_t{0} / modulus) {}

  std::uint64_t operator()(std::uint64_t x) const {
    const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * inv) >> 64);
    std::uint64_t r = x - q * m;
    return r >= m ? r - m : r;
  }
};

// Power-of-two moduli: 32-bit wraparound is harmless because the mask keeps
// only the low h bits, so the loop stays in 32-bit lanes and vectorizes.
ModStreamState::Advance advance(const std::uint32_t* cur, std::uint32_t* next, std::uint64_t m,
                                MaskReduce red) {
  const auto m32 = static_cast<std::uint32_t>(m);
  std::uint32_t sum = 0;
  std::uint32_t any = 0;
  for (std::uint32_t j = 1; j < m32; ++j) {
    const std::uint32_t v = (j * cur[j] + m32 - cur[j - 1]) & red.mask;
    next[j] = v;
    sum += v;
    any |= v;
  }
  const std::uint32_t head = (m32 - cur[m32 - 1]) & red.mask;
  next[0] = head;
  return {(sum + head) & red.mask, any == 0 && head == 1};
}

ModStreamState::Advance advance(const std::uint32_t* cur, std::uint32_t* next, std::uint64_t m,
                                const BarrettReduce& red) {
  std::uint64_t sum = 0;
  std::uint32_t any = 0;
  for (std::uint64_t j = 1; j < m; ++j) {
    const auto v = static_cast<std::uint32_t>(red(j * cur[j] + m - cur[j - 1]));
    next[j] = v;
    sum += v;
    any |= v;
  }
  const std::uint32_t head = cur[m - 1] == 0 ? 0 : static_cast<std::uint32_t>(m - cur[m - 1]);
  next[0] = head;
  return {(sum + head) % m, any == 0 && head == 1};
}

void check_modulus(std::uint64_t m) {
  if (m < 2 || m >= kMaxStreamModulus) {
    throw InvalidModulus("modulus " + std::to_string(m) + " outside [2, 2^31)");
  }
}

bool checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t& out) {
  return !__builtin_mul_overflow(a, b, &out);
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::optional<std::uint64_t> prime_power_bound(std::uint64_t p, unsigned h) {
  std::uint64_t out = 0;
  if (p == 2) {
    // 3 * 4^(h-1)
    if (2 * (h - 1) > 61) return std::nullopt;
    return std::uint64_t{3} << (2 * (h - 1));
  }
  // 2 p^(2h-2) (p^p - 1) / (p - 1) = 2 p^(2h-2) (1 + p + ... + p^(p-1))
  std::uint64_t geometric = 0;
  std::uint64_t term = 1;
  for (std::uint64_t i = 0; i < p; ++i) {
    if (__builtin_add_overflow(geometric, term, &geometric)) return std::nullopt;
    if (i + 1 < p && !checked_mul(term, p, term)) return std::nullopt;
  }
  out = 2;
  for (unsigned i = 0; i < 2 * (h - 1); ++i) {
    if (!checked_mul(out, p, out)) return std::nullopt;
  }
  if (!checked_mul(out, geometric, out)) return std::nullopt;
  return out;
}

ScanResult run_scan(std::uint64_t m, std::uint64_t limit, bool stop_on_return, bool record_zeros,
                    const CheckpointPolicy& policy) {
  ScanResult result{{}, ModStreamState(m), false, std::nullopt};
  const bool persist_enabled = !policy.path.empty();
  if (persist_enabled && policy.every == 0) {
    throw InvalidArgument("checkpoint cadence must be positive");
  }
  if (policy.resume && persist_enabled && std::filesystem::exists(policy.path)) {
    Checkpoint saved = load_checkpoint(policy.path);
    if (saved.m != m) {
      throw CheckpointIOError("checkpoint " + policy.path.string() + " is for modulus " +
                              std::to_string(saved.m) + ", not " + std::to_string(m));
    }
    result.final_state = saved.state();
    result.zeros = std::move(saved.zeros_found);
  }

  ModStreamState& state = result.final_state;
  const std::uint64_t start_n = state.step_index();
  auto persist = [&] {
    Checkpoint c{m, state.step_index(),
                 std::vector<std::uint32_t>(state.slots().begin(), state.slots().end()),
                 result.zeros, {}};
    save_checkpoint(c, policy.path);
  };

  std::uint64_t value = state.value();
  while (state.step_index() < limit) {
    const std::uint64_t n = state.step_index();
    if (policy.halt_at && n == *policy.halt_at) {
      if (persist_enabled) persist();
      result.halted = true;
      return result;
    }
    if (persist_enabled && n != start_n && n % policy.every == 0) persist();
    if (record_zeros && value == 0) result.zeros.push_back(n);
    const auto adv = state.step();
    value = adv.value;
    if (stop_on_return && adv.at_start) {
      result.period = state.step_index();
      break;
    }
  }
  if (persist_enabled) persist();
  return result;
}

}  // namespace

ModStreamState::ModStreamState(std::uint64_t m) : m_(m) {
  check_modulus(m);
  slots_.assign(m, 0);
  slots_[0] = 1;
  scratch_.assign(m, 0);
}

ModStreamState::ModStreamState(std::uint64_t m, std::uint64_t n, std::vector<std::uint32_t> slots)
    : m_(m), n_(n), slots_(std::move(slots)) {
  check_modulus(m);
  if (slots_.size() != m) {
    throw InvalidArgument("stream state: expected " + std::to_string(m) + " slots, got " +
                          std::to_string(slots_.size()));
  }
  for (auto s : slots_) {
    if (s >= m) throw InvalidArgument("stream state: residue " + std::to_string(s) + " >= modulus");
  }
  scratch_.assign(m, 0);
}

std::uint64_t ModStreamState::value() const {
  std::uint64_t sum = 0;
  for (auto s : slots_) sum += s;
  return sum % m_;
}

bool ModStreamState::at_start() const {
  return slots_[0] == 1 && std::all_of(slots_.begin() + 1, slots_.end(), [](auto s) { return s == 0; });
}

ModStreamState::Advance ModStreamState::step() {
  Advance adv;
  if (std::has_single_bit(m_)) {
    adv = advance(slots_.data(), scratch_.data(), m_, MaskReduce{static_cast<std::uint32_t>(m_ - 1)});
  } else {
    adv = advance(slots_.data(), scratch_.data(), m_, BarrettReduce(m_));
  }
  slots_.swap(scratch_);
  ++n_;
  return adv;
}

std::vector<std::uint32_t> stream_values(std::uint64_t m, std::uint64_t count) {
  std::vector<std::uint32_t> out;
  out.reserve(count);
  ModStreamState s(m);
  if (count == 0) return out;
  out.push_back(static_cast<std::uint32_t>(s.value()));
  while (out.size() < count) out.push_back(static_cast<std::uint32_t>(s.step().value));
  return out;
}

std::string to_string(const ResiduePattern& p) {
  std::string out;
  for (std::size_t i = 0; i < p.residues.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(p.residues[i]);
  }
  if (p.residues.empty()) out = "(none)";
  return out + " mod " + std::to_string(p.modulus);
}

ScanResult scan_zeros(std::uint64_t m, std::uint64_t limit, const CheckpointPolicy& policy) {
  if (limit < 1) throw InvalidArgument("scan_zeros: limit must be >= 1");
  return run_scan(m, limit, false, true, policy);
}

ScanResult scan_one_period(std::uint64_t m, std::uint64_t cap, const CheckpointPolicy& policy) {
  if (cap < 1) throw InvalidArgument("period search: cap must be >= 1");
  ScanResult r = run_scan(m, cap, true, true, policy);
  if (!r.period && !r.halted) {
    throw PeriodNotFound("no return to the start state mod " + std::to_string(m) + " within " +
                         std::to_string(cap) + " steps");
  }
  return r;
}

std::uint64_t default_period_cap(std::uint64_t m) {
  check_modulus(m);
  if (factor_u64(m).size() == 1) {
    if (auto b = known_period_bound(m); b && *b <= kCompositePeriodCap) return 2 * *b;
  }
  return kCompositePeriodCap;
}

std::uint64_t find_state_period(std::uint64_t m, std::uint64_t cap) {
  if (cap < 1) throw InvalidArgument("find_state_period: cap must be >= 1");
  ScanResult r = run_scan(m, cap, true, false, {});
  if (!r.period) {
    throw PeriodNotFound("no return to the start state mod " + std::to_string(m) + " within " +
                         std::to_string(cap) + " steps");
  }
  return *r.period;
}

std::uint64_t find_state_period(std::uint64_t m) { return find_state_period(m, default_period_cap(m)); }

std::uint64_t minimal_sequence_period(std::uint64_t m, std::uint64_t state_period) {
  if (state_period < 1) throw InvalidArgument("minimal_sequence_period: period must be >= 1");
  const auto vals = stream_values(m, state_period);
  for (std::uint64_t d : divisors(state_period)) {
    bool periodic = true;
    for (std::uint64_t n = 0; n < state_period && periodic; ++n) {
      std::uint64_t shifted = n + d;
      if (shifted >= state_period) shifted -= state_period;
      periodic = vals[n] == vals[shifted];
    }
    if (periodic) return d;
  }
  return state_period;
}

std::optional<std::uint64_t> known_period_bound(std::uint64_t m) {
  if (m < 2) throw InvalidModulus("known_period_bound: modulus must be >= 2");
  std::uint64_t acc = 1;
  for (auto [p, h] : factor_u64(m)) {
    auto b = prime_power_bound(p, h);
    if (!b) return std::nullopt;
    const std::uint64_t g = std::gcd(acc, *b);
    if (!checked_mul(acc / g, *b, acc)) return std::nullopt;
  }
  return acc;
}

ResiduePattern reduce_residue_pattern(std::span<const std::uint64_t> zeros, std::uint64_t period) {
  if (period < 1) throw InvalidArgument("reduce_residue_pattern: period must be >= 1");
  std::vector<std::uint64_t> sorted(zeros.begin(), zeros.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (!sorted.empty() && sorted.back() >= period) {
    throw InvalidArgument("reduce_residue_pattern: zero " + std::to_string(sorted.back()) +
                          " outside [0, period)");
  }
  for (std::uint64_t modulus : divisors(period)) {
    std::vector<std::uint64_t> residues;
    residues.reserve(sorted.size());
    for (auto z : sorted) residues.push_back(z % modulus);
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
    // The zeros are a subset of the tiling, so equal sizes mean equal sets.
    if (residues.size() * (period / modulus) == sorted.size()) return {modulus, residues};
  }
  return {period, sorted};
}

OpenCases open_cases(unsigned h, const CheckpointPolicy& policy) {
  if (h < 1 || h > 30) throw InvalidArgument("open_cases: h must be in [1, 30]");
  const std::uint64_t m = std::uint64_t{1} << h;
  const std::uint64_t cap = std::uint64_t{3} << (2 * (h - 1));
  ScanResult r = scan_one_period(m, cap, policy);
  if (r.halted) throw InvalidArgument("open_cases: scan halted before completing a period");
  OpenCases out;
  out.state_period = *r.period;
  out.pattern = reduce_residue_pattern(r.zeros, out.state_period);
  out.zeros = std::move(r.zeros);
  return out;
}

CheckReport verify_congruence(std::uint64_t m, std::uint64_t shift, std::uint64_t window) {
  if (window < 1) throw InvalidArgument("verify_congruence: window must be >= 1");
  CheckReport report{"f(n) == f(n+" + std::to_string(shift) + ") mod " + std::to_string(m), 0, {}};
  const auto vals = stream_values(m, window + shift);
  for (std::uint64_t n = 0; n < window; ++n) {
    ++report.cases;
    if (vals[n] != vals[n + shift]) {
      if (report.violations.size() < 32) {
        report.fail("n=" + std::to_string(n) + ": " + std::to_string(vals[n]) +
                    " != " + std::to_string(vals[n + shift]));
      }
    }
  }
  return report;
}

}  // namespace wilf
