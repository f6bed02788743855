#pragma once

// Streaming f(n) mod m with O(m) state per step.
//
// Slot j (0-based) holds (-1)^j S(n, j) reduced mod m, with the k >= m tail of
// the Stirling row folded back onto k - m. One step is
//   slot'[j] = j * slot[j] - slot[j-1]   (1 <= j < m)
//   slot'[0] = -slot[m-1]
// and f(n) mod m is the sum of all slots.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wilf/report.hpp"

namespace wilf {

/// Largest modulus accepted by the stream (exclusive).
inline constexpr std::uint64_t kMaxStreamModulus = std::uint64_t{1} << 31;

class ModStreamState {
 public:
  /// Initial state: n = 0, slots = (1, 0, ..., 0). Throws InvalidModulus.
  explicit ModStreamState(std::uint64_t m);

  /// Restores a saved state. Throws InvalidModulus or InvalidArgument when
  /// the slot vector has the wrong length or holds out-of-range residues.
  ModStreamState(std::uint64_t m, std::uint64_t n, std::vector<std::uint32_t> slots);

  std::uint64_t modulus() const { return m_; }
  std::uint64_t step_index() const { return n_; }
  std::span<const std::uint32_t> slots() const { return slots_; }

  /// f(n) mod m for the current n.
  std::uint64_t value() const;

  /// True when the slots equal the initial vector.
  bool at_start() const;

  struct Advance {
    std::uint64_t value;  ///< f(n) mod m after the step
    bool at_start;        ///< slots returned to (1, 0, ..., 0)
  };

  /// Advances n by one.
  Advance step();

  friend bool operator==(const ModStreamState& a, const ModStreamState& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.slots_ == b.slots_;
  }

 private:
  std::uint64_t m_;
  std::uint64_t n_ = 0;
  std::vector<std::uint32_t> slots_;
  std::vector<std::uint32_t> scratch_;
};

/// f(n) mod m for 0 <= n < count, read off the stream.
std::vector<std::uint32_t> stream_values(std::uint64_t m, std::uint64_t count);

/// Residue classes mod `modulus`.
struct ResiduePattern {
  std::uint64_t modulus = 1;
  std::vector<std::uint64_t> residues;  ///< strictly increasing, each < modulus

  friend bool operator==(const ResiduePattern&, const ResiduePattern&) = default;
};

std::string to_string(const ResiduePattern& p);

/// Serialized scanner state.
struct Checkpoint {
  static constexpr int kFormatVersion = 1;

  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::vector<std::uint32_t> slots;
  std::vector<std::uint64_t> zeros_found;
  std::string wall_time_stamp;

  ModStreamState state() const { return ModStreamState(m, n, slots); }
};

std::string checkpoint_to_json(const Checkpoint& c);
Checkpoint checkpoint_from_json(const std::string& text);

/// Writes to a sibling temp file and renames over `path`. Throws CheckpointIOError.
void save_checkpoint(const Checkpoint& c, const std::filesystem::path& path);
Checkpoint load_checkpoint(const std::filesystem::path& path);

struct CheckpointPolicy {
  std::filesystem::path path;              ///< empty: never persist
  std::uint64_t every = 10'000'000;        ///< steps between writes
  bool resume = false;                     ///< continue from `path` if it exists
  std::optional<std::uint64_t> halt_at;    ///< persist and stop at this step index
};

struct ScanResult {
  std::vector<std::uint64_t> zeros;      ///< increasing indices with f(n) == 0 mod m
  ModStreamState final_state;
  bool halted = false;                   ///< stopped by CheckpointPolicy::halt_at
  std::optional<std::uint64_t> period;   ///< set when a return-to-start scan finished
};

/// All n in [0, limit) with f(n) == 0 (mod m).
ScanResult scan_zeros(std::uint64_t m, std::uint64_t limit, const CheckpointPolicy& policy = {});

/// Zeros in [0, P) where P is the state period, searching at most `cap` steps.
/// Throws PeriodNotFound.
ScanResult scan_one_period(std::uint64_t m, std::uint64_t cap, const CheckpointPolicy& policy = {});

/// Default step cap for period searches: twice the proven bound for prime
/// powers, otherwise kCompositePeriodCap.
inline constexpr std::uint64_t kCompositePeriodCap = 100'000'000'000ULL;
std::uint64_t default_period_cap(std::uint64_t m);

/// Smallest t >= 1 returning the slots to (1, 0, ..., 0). Throws PeriodNotFound.
std::uint64_t find_state_period(std::uint64_t m, std::uint64_t cap);
std::uint64_t find_state_period(std::uint64_t m);

/// Smallest divisor d of `state_period` with f(n) == f(n+d) mod m for all n.
std::uint64_t minimal_sequence_period(std::uint64_t m, std::uint64_t state_period);

/// Proven period of f mod m from the prime-power congruences; nullopt on overflow.
std::optional<std::uint64_t> known_period_bound(std::uint64_t m);

/// Smallest modulus M dividing `period` whose residue classes tile `zeros`.
ResiduePattern reduce_residue_pattern(std::span<const std::uint64_t> zeros, std::uint64_t period);

struct OpenCases {
  ResiduePattern pattern;
  std::uint64_t state_period = 0;
  std::vector<std::uint64_t> zeros;
};

/// Residue classes on which f vanishes mod 2^h over a full period.
OpenCases open_cases(unsigned h, const CheckpointPolicy& policy = {});

/// Checks f(n) == f(n + shift) mod m for 0 <= n < window.
CheckReport verify_congruence(std::uint64_t m, std::uint64_t shift, std::uint64_t window);

}  // namespace wilf
