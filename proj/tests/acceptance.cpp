// Acceptance gate: one PASS/FAIL line per criterion.
//   acceptance            run all criteria
//   acceptance --only N   run criterion N
//   acceptance --long     also run the multi-minute extras
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <unistd.h>

#include "oracles.hpp"
#include "wilf/bigcore.hpp"
#include "wilf/graphmatch.hpp"
#include "wilf/modseq.hpp"
#include "wilf/padic.hpp"
#include "wilf/polyring.hpp"
#include "wilf/wilfpoly.hpp"

using namespace wilf;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (pass) detail = what;
    pass = false;
  }
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;
  std::function<Outcome(bool)> body;
};

template <class T>
std::string vec_str(const std::vector<T>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  return s.str();
}

Outcome ac1(bool) {
  Outcome o;
  const auto t = f_table_recursive(14);
  for (unsigned n = 0; n <= 14; ++n) {
    o.require(t[n] == BigInt(static_cast<long>(oracle::kFirstValues[n])), "f(" + std::to_string(n) + ") mismatch");
    o.require(f_alt_sum(n) == t[n], "alternating sum f(" + std::to_string(n) + ") mismatch");
  }
  o.detail = o.pass ? "f(0..14) = 1, -1, 0, ..., -50533, 110176" : o.detail;
  return o;
}

Outcome ac2(bool) {
  Outcome o;
  const auto alt = f_table_alt(300);
  const auto rec = f_table_recursive(300);
  std::size_t bad = 0;
  for (unsigned n = 0; n <= 300; ++n) bad += alt[n] != rec[n];
  o.require(bad == 0, std::to_string(bad) + " mismatches");
  if (o.pass) o.detail = "301 values agree, f(300) has " + std::to_string(rec[300].get_str().size()) + " digits";
  return o;
}

Outcome ac3(bool) {
  Outcome o;
  constexpr std::uint64_t kN = 3000;
  const auto f2 = stream_values(2, kN);
  const auto b2 = bell_mod(kN - 1, 2);
  std::size_t zeros = 0;
  for (std::uint64_t n = 0; n < kN; ++n) {
    o.require((f2[n] == 0) == (n % 3 == 2), "zero pattern breaks at n=" + std::to_string(n));
    o.require(f2[n] == b2[n], "parity of f and B differ at n=" + std::to_string(n));
    zeros += f2[n] == 0;
  }
  o.require(check_bell_parity(200).ok(), "exact parity check failed below 200");
  if (o.pass) o.detail = std::to_string(zeros) + " zeros, all n == 2 mod 3; f == B mod 2 on n < 3000";
  return o;
}

Outcome ac4(bool) {
  Outcome o;
  constexpr unsigned kN = 2000;
  const auto exact = f_table_alt(kN);
  std::size_t mismatches = 0;
  for (std::uint64_t m = 2; m <= 64; ++m) {
    const auto s = stream_values(m, kN + 1);
    for (unsigned n = 0; n <= kN; ++n) mismatches += s[n] != mod_u64(exact[n], m);
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  if (o.pass) o.detail = "63 moduli x 2001 indices, 0 mismatches";
  return o;
}

Outcome ac5(bool) {
  Outcome o;
  std::size_t mismatches = 0;
  for (std::uint64_t m = 2; m <= 16; ++m) {
    const auto st = stream_values(m, 501);
    const auto se = series_expand(build_Q(m), build_D(m), 501);
    for (std::size_t n = 0; n <= 500; ++n) mismatches += st[n] != se[n];
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  if (o.pass) o.detail = "m = 2..16, n <= 500, 0 mismatches";
  return o;
}

Outcome ac6(bool long_run) {
  struct Row {
    unsigned h;
    std::vector<std::uint64_t> residues;
    std::uint64_t modulus;
  };
  std::vector<Row> rows{{1, {2}, 3},        {2, {2, 11}, 12},   {3, {2}, 12},        {4, {2}, 12},
                        {5, {2}, 12},       {6, {2, 38}, 48},   {7, {2, 38}, 96},    {8, {2, 134}, 192},
                        {9, {2, 326}, 384}, {10, {2, 326}, 768}};
  if (long_run) {
    rows.push_back({11, {2, 326}, 1536});
    rows.push_back({12, {2, 1862}, 3072});
  }
  Outcome o;
  for (const auto& r : rows) {
    const auto oc = open_cases(r.h);
    const ResiduePattern want{r.modulus, r.residues};
    o.require(oc.pattern == want,
              "h=" + std::to_string(r.h) + ": got " + to_string(oc.pattern) + ", want " + to_string(want));
  }
  if (o.pass) o.detail = "h = 1.." + std::to_string(rows.back().h) + " rows reproduced (h=10: 2, 326 mod 768)";
  return o;
}

Outcome ac7(bool long_run) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> table{{2, 3},      {3, 26},  {4, 12},     {5, 1562},
                                                             {6, 390},    {7, 274514}, {8, 24}, {9, 234},
                                                             {10, 398310}, {12, 1560}, {16, 192}};
  if (long_run) table.emplace_back(14, 17294382);
  Outcome o;
  std::string fails;
  for (auto [m, want] : table) {
    const std::uint64_t got = find_state_period(m);
    const bool ok = got == want;
    std::cout << "    m=" << m << ": state period " << got << ", expected " << want << (ok ? "  ok" : "  MISMATCH")
              << "\n";
    if (!ok) {
      o.pass = false;
      fails += (fails.empty() ? "" : "; ") + ("m=" + std::to_string(m) + " got " + std::to_string(got) +
                                               " (minimal sequence period " +
                                               std::to_string(minimal_sequence_period(m, got)) + ")");
    }
  }
  o.detail = o.pass ? "all listed moduli match" : fails;
  return o;
}

Outcome ac8(bool) {
  Outcome o;
  double worst = 0;
  auto timed = [&](std::uint64_t m, const BigInt& n) {
    const auto t0 = std::chrono::steady_clock::now();
    const bool ok = verify_period_certificate(m, n);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    worst = std::max(worst, s);
    o.require(ok, "certificate fails for m=" + std::to_string(m) + ", N=" + n.get_str());
    o.require(s < 1.0, "certificate for m=" + std::to_string(m) + " took " + std::to_string(s) + " s");
  };
  for (unsigned h = 1; h <= 8; ++h) timed(std::uint64_t{1} << h, 3 * wilf::pow(4, h - 1));
  for (std::uint64_t p : {3, 5, 7}) timed(p, 2 * (wilf::pow(p, p) - 1) / (p - 1));
  if (o.pass) o.detail = "11 certificates, slowest " + std::to_string(worst) + " s";
  return o;
}

Outcome ac9(bool) {
  Outcome o;
  o.require(verify_congruence(8, 24, 10000).ok(), "24 is not a period of f mod 8");
  for (std::uint64_t d : {1, 2, 3, 4, 6, 8, 12})
    o.require(!verify_congruence(8, d, 10000).ok(), std::to_string(d) + " is a period of f mod 8");
  o.require(verify_period_certificate(8, 48), "48 is not certified");
  o.require(verify_congruence(8, 48, 10000).ok(), "48 is not a period");
  o.require(minimal_sequence_period(8, 48) == 24, "minimal period below 48 is not 24");
  if (o.pass) o.detail = "24 minimal (proper divisors fail), 48 certified but not minimal";
  return o;
}

Outcome ac10(bool) {
  Outcome o;
  o.require(pn_poly(0) == IntPoly{1} && pn_poly(1) == IntPoly{-1, 1} && pn_poly(2) == IntPoly{0, -2, 1} &&
                pn_poly(3) == IntPoly{1, 0, -3, 1} && pn_poly(4) == IntPoly{1, 4, 0, -4, 1} &&
                pn_poly(5) == IntPoly{-2, 5, 10, 0, -5, 1},
            "P_0..P_5 differ from the worked examples");
  const auto f = oracle::f_exact_table(201);
  const auto table = pn_table(200);
  for (unsigned n = 0; n <= 200; ++n) {
    o.require(table[n].eval(0) == f[n], "P_" + std::to_string(n) + "(0) != f(n)");
    o.require(table[n].eval(1) == -f[n + 1], "P_" + std::to_string(n) + "(1) != -f(n+1)");
  }
  const auto shift = shift_identity_sweep(50, 8);
  o.require(shift.ok(), "shift identity: " + (shift.ok() ? std::string() : shift.violations.front()));
  const auto cong = shift_congruence_sweep(200, 16);
  o.require(cong.ok(), "congruence: " + (cong.ok() ? std::string() : cong.violations.front()));
  if (o.pass)
    o.detail = "examples, 201 evaluations, " + std::to_string(shift.cases) + " shift identities, " +
               std::to_string(cong.cases) + " congruences";
  return o;
}

Outcome ac11(bool) {
  Outcome o;
  o.require(count_matchings(t_graph(3)).counts == std::vector<BigInt>{1, 3, 1, 0}, "p(T(3), k) != (1,3,1,0)");
  std::size_t graphs = 0;
  for (auto kind : {GraphFamily::Null, GraphFamily::Complete, GraphFamily::CompleteBipartite, GraphFamily::T}) {
    for (std::uint32_t n = 1; n <= 8; ++n) {
      const auto g = family_graph(kind, n);
      const auto closed = mu_closed_form(kind, n);
      o.require(count_matchings(g) == closed, "enumeration differs from closed form, n=" + std::to_string(n));
      if (g.edges().size() <= 20)
        o.require(oracle::matchings_by_subsets(g.vertex_count(), g.edges()) == closed.counts,
                  "subset enumeration differs, n=" + std::to_string(n));
      ++graphs;
    }
  }
  const auto f = oracle::f_exact_table(100);
  for (std::uint32_t n = 1; n <= 100; ++n)
    o.require(mu_t_at_one(n) == ((n % 2 == 0) ? f[n] : BigInt(-f[n])), "mu(T(n),1) wrong at n=" + std::to_string(n));
  const IntPoly product = IntPoly{0, 0, 1} * IntPoly{-1, -1, 1} * IntPoly{-1, 1, 1};
  o.require(mu_closed_form(GraphFamily::T, 3).polynomial() == product, "mu(T(3),X) != X^2(X^2-X-1)(X^2+X-1)");
  o.require(count_matchings(t_graph(3)).polynomial() == product, "enumerated mu(T(3),X) != factored form");
  if (o.pass) o.detail = std::to_string(graphs) + " family graphs, 100 values at X=1, T(3) factorization";
  return o;
}

Outcome ac12(bool) {
  Outcome o;
  constexpr std::uint64_t kPrimeBound = 200;
  const auto P = pn_table(60);
  std::size_t certified = 0, inconclusive = 0, total = 0;
  auto probe = [&](const IntPoly& f, const std::string& name) {
    ++total;
    o.require(rational_roots(f).empty(), name + " has a rational root");
    const auto v = certify_irreducible(f, kPrimeBound);
    o.require(v.kind != IrreducibilityVerdict::Kind::Reducible, name + " reported reducible");
    certified += v.kind == IrreducibilityVerdict::Kind::Irreducible;
    inconclusive += v.kind == IrreducibilityVerdict::Kind::Inconclusive;
  };
  for (std::uint64_t n = 6; n <= 60; ++n) probe(P[n], "P_" + std::to_string(n));
  const std::size_t pn_cert = certified, pn_total = total;
  for (std::uint32_t n = 4; n <= 40; ++n)
    probe(mu_closed_form(GraphFamily::T, n).polynomial().divided_by_x_power(2), "mu(T(" + std::to_string(n) + "))/X^2");
  std::cout << "    coverage P_n (5 < n <= 60): " << pn_cert << "/" << pn_total << " certified\n";
  std::cout << "    coverage mu(T(n),X)/X^2 (3 < n <= 40): " << certified - pn_cert << "/" << total - pn_total
            << " certified\n";
  if (o.pass)
    o.detail = "no rational roots, no reducible verdicts; " + std::to_string(certified) + " certified, " +
               std::to_string(inconclusive) + " inconclusive (p <= 200)";
  return o;
}

Outcome ac13(bool) {
  Outcome o;
  o.require(alpha1_identity_check(400).ok(), "alpha_1 identity fails");
  for (std::uint64_t p : {2, 3, 5}) {
    for (unsigned t = 1; t <= 30; ++t) {
      const auto one = alpha_k_stabilization(1, p, t);
      o.require(one.value == one.modulus() - 1, "k=1 not -1 at p=" + std::to_string(p) + ", t=" + std::to_string(t));
      o.require(alpha_k_stabilization(0, p, t).value == 0,
                "k=0 not 0 at p=" + std::to_string(p) + ", t=" + std::to_string(t));
    }
  }
  const auto f = oracle::f_exact_table(101);
  for (unsigned k = 0; k <= 100; ++k)
    o.require(u_coeff(k) == ((k % 2 == 0) ? f[k + 1] : BigInt(-f[k + 1])), "u_" + std::to_string(k) + " wrong");
  if (o.pass) o.detail = "identity to M=400, 180 stabilizations, u_0..u_100";
  return o;
}

Outcome ac14(bool) {
  namespace fs = std::filesystem;
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / ("wilf_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path ck = dir / "scan256.json";

  const auto full = scan_zeros(256, 1'000'000);

  CheckpointPolicy halt;
  halt.path = ck;
  halt.every = 100'000;
  halt.halt_at = 500'000;
  const auto first = scan_zeros(256, 1'000'000, halt);
  o.require(first.halted && first.final_state.step_index() == 500'000, "scan did not halt at 5e5");

  CheckpointPolicy resume = halt;
  resume.halt_at.reset();
  resume.resume = true;
  const auto second = scan_zeros(256, 1'000'000, resume);

  auto serialize = [](const ScanResult& r) {
    Checkpoint c{r.final_state.modulus(), r.final_state.step_index(),
                 std::vector<std::uint32_t>(r.final_state.slots().begin(), r.final_state.slots().end()), r.zeros,
                 "fixed"};
    return checkpoint_to_json(c);
  };
  o.require(serialize(second) == serialize(full), "resumed output differs from the uninterrupted run");
  fs::remove_all(dir);
  if (o.pass) o.detail = std::to_string(full.zeros.size()) + " zeros, final state at n=1e6 identical";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  bool long_run = false;
  app.add_option("--only", only, "Run a single criterion")->check(CLI::Range(1, 14));
  app.add_flag("--long", long_run, "Include the long extras (h = 11, 12; m = 14)");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "sequence fidelity", 1, ac1},
      {2, "route equivalence n <= 300", 10, ac2},
      {3, "zeros mod 2 and Bell parity, n < 3000", 10, ac3},
      {4, "stream vs exact, m in [2,64], n <= 2000", 60, ac4},
      {5, "Q/D expansion vs stream, m <= 16, n <= 500", 60, ac5},
      {6, "open-case table", long_run ? 3600.0 : 600.0, ac6},
      {7, "state period table", long_run ? 3600.0 : 600.0, ac7},
      {8, "period certificates", 11, ac8},
      {9, "period 24 mod 8", 60, ac9},
      {10, "P_n suite", 120, ac10},
      {11, "graph suite", 120, ac11},
      {12, "irreducibility probes", 300, ac12},
      {13, "p-adic suite", 60, ac13},
      {14, "checkpoint determinism", 120, ac14},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body(long_run);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.time_limit_s) {
      o.pass = false;
      o.detail += " [over time limit " + std::to_string(c.time_limit_s) + " s]";
    }
    failed += !o.pass;
    std::cout << "AC" << c.id << " " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << "  (" << std::fixed
              << std::setprecision(2) << secs << " s, limit " << std::setprecision(0) << c.time_limit_s
              << " s)  " << o.detail << std::endl;
    std::cout.unsetf(std::ios::fixed);
  }
  return failed == 0 ? 0 : 1;
}
