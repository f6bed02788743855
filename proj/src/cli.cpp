#include "wilf/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wilf/bigcore.hpp"
#include "wilf/errors.hpp"
#include "wilf/graphmatch.hpp"
#include "wilf/modseq.hpp"
#include "wilf/padic.hpp"
#include "wilf/polyring.hpp"
#include "wilf/wilfpoly.hpp"

namespace wilf::cli {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;
constexpr std::uint64_t kWarnSteps = 1'000'000'000;

enum class Format { Text, Csv, Json };

/// Parsed command line; each subcommand reads the fields it needs.
struct RunConfig {
  std::string command;
  Format format = Format::Text;

  std::uint64_t max_n = 0;
  std::vector<unsigned> h;
  std::vector<std::uint64_t> m;
  std::uint64_t limit = 0;
  std::uint64_t cap = 0;
  bool refine = false;

  std::string checkpoint_path;
  std::string checkpoint_dir;
  std::uint64_t checkpoint_every = 10'000'000;
  bool resume = false;
  std::uint64_t stop_at = 0;

  std::string target = "pn";
  std::uint64_t n = 0;
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  std::uint64_t prime_bound = 200;

  std::uint64_t p = 0;
  std::uint64_t k = 0;
  unsigned precision = 0;

  std::string graph;
  std::string edges_file;
  bool brute_force = false;

  std::uint64_t terms = 0;
  bool show_polys = false;

  std::uint64_t shift = 0;
  std::uint64_t window = 0;
};

json header(const std::string& command) { return json{{"schema", kSchemaVersion}, {"command", command}}; }

std::string str(std::uint64_t v) { return std::to_string(v); }

template <class Range>
json string_array(const Range& r) {
  json a = json::array();
  for (const auto& v : r) a.push_back(std::to_string(v));
  return a;
}

template <class Range>
std::string join(const Range& r, const std::string& sep) {
  std::string out;
  bool first = true;
  for (const auto& v : r) {
    if (!first) out += sep;
    out += std::to_string(v);
    first = false;
  }
  return out;
}

std::string modpoly_string(const ModPoly& p) {
  std::vector<BigInt> c;
  for (auto v : p.coeffs()) c.push_back(big(v));
  return IntPoly(std::move(c)).to_string("x");
}

CheckpointPolicy policy_for(const RunConfig& cfg, const std::string& stem) {
  CheckpointPolicy policy;
  policy.every = cfg.checkpoint_every;
  policy.resume = cfg.resume;
  if (cfg.stop_at > 0) policy.halt_at = cfg.stop_at;
  if (!cfg.checkpoint_path.empty()) {
    policy.path = cfg.checkpoint_path;
    return policy;
  }
  std::string dir = cfg.checkpoint_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv(kCheckpointDirEnv)) dir = env;
  }
  if (!dir.empty()) policy.path = std::filesystem::path(dir) / (stem + ".ckpt.json");
  return policy;
}

bool is_prime_power(std::uint64_t m) {
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    return m == 1;
  }
  return true;
}

int cmd_seq(const RunConfig& cfg, std::ostream& out) {
  const FTable t = f_table_recursive(cfg.max_n);
  switch (cfg.format) {
    case Format::Text:
      for (std::uint64_t n = 0; n <= cfg.max_n; ++n) out << n << ", " << t[n].get_str() << "\n";
      break;
    case Format::Csv:
      out << "n,f\n";
      for (std::uint64_t n = 0; n <= cfg.max_n; ++n) out << n << "," << t[n].get_str() << "\n";
      break;
    case Format::Json: {
      json j = header("seq");
      j["max_n"] = str(cfg.max_n);
      j["values"] = json::array();
      for (std::uint64_t n = 0; n <= cfg.max_n; ++n) j["values"].push_back({{"n", str(n)}, {"f", t[n].get_str()}});
      out << j.dump() << "\n";
      break;
    }
  }
  return kOk;
}

int cmd_opencases(const RunConfig& cfg, std::ostream& out) {
  json rows = json::array();
  for (unsigned h : cfg.h) {
    if (h < 1 || h > 30) throw InvalidArgument("--h must be in [1, 30]");
    const auto policy = policy_for(cfg, "opencases-m" + str(std::uint64_t{1} << h));
    const OpenCases oc = open_cases(h, policy);
    switch (cfg.format) {
      case Format::Text:
        if (cfg.h.size() > 1) out << "h=" << h << ": ";
        out << to_string(oc.pattern) << "\n";
        out << "state period: " << oc.state_period << "\n";
        break;
      case Format::Csv:
        if (rows.empty()) out << "h,residues,modulus,state_period\n";
        out << h << ",\"" << join(oc.pattern.residues, " ") << "\"," << oc.pattern.modulus << "," << oc.state_period
            << "\n";
        rows.push_back(h);
        break;
      case Format::Json:
        rows.push_back({{"h", str(h)},
                        {"residues", string_array(oc.pattern.residues)},
                        {"modulus", str(oc.pattern.modulus)},
                        {"state_period", str(oc.state_period)},
                        {"zero_count", str(oc.zeros.size())}});
        break;
    }
  }
  if (cfg.format == Format::Json) {
    json j = header("opencases");
    j["results"] = rows;
    out << j.dump() << "\n";
  }
  return kOk;
}

int cmd_period(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  json rows = json::array();
  for (std::uint64_t m : cfg.m) {
    const std::uint64_t cap = cfg.cap > 0 ? cfg.cap : default_period_cap(m);
    if (is_prime_power(m)) {
      if (auto bound = known_period_bound(m); !bound || *bound > kWarnSteps) {
        err << "warning: m=" << m << " has a projected period of "
            << (bound ? str(*bound) : std::string("more than 2^64")) << " steps (each O(m)); this may take very long\n";
      }
    } else if (cap > kWarnSteps) {
      err << "warning: no a-priori bound on the state period for composite m=" << m << "; the search may run up to "
          << cap << " steps (each O(m))\n";
    }
    const std::uint64_t state = find_state_period(m, cap);
    std::uint64_t minimal = 0;
    if (cfg.refine) minimal = minimal_sequence_period(m, state);
    switch (cfg.format) {
      case Format::Text:
        if (cfg.m.size() > 1) out << "m=" << m << ": ";
        out << state << "\n";
        if (cfg.refine) {
          out << "minimal sequence period: " << minimal << "\n";
          out << "state and sequence periods differ: " << (minimal != state ? "yes" : "no") << "\n";
        }
        break;
      case Format::Csv:
        if (rows.empty()) out << (cfg.refine ? "m,state_period,minimal_sequence_period\n" : "m,state_period\n");
        out << m << "," << state;
        if (cfg.refine) out << "," << minimal;
        out << "\n";
        rows.push_back(m);
        break;
      case Format::Json: {
        json row{{"m", str(m)}, {"state_period", str(state)}};
        if (cfg.refine) row["minimal_sequence_period"] = str(minimal);
        rows.push_back(row);
        break;
      }
    }
  }
  if (cfg.format == Format::Json) {
    json j = header("period");
    j["results"] = rows;
    out << j.dump() << "\n";
  }
  return kOk;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
  if (cfg.m.size() != 1) throw InvalidArgument("scan takes exactly one --m");
  const std::uint64_t m = cfg.m.front();
  const auto policy = policy_for(cfg, "scan-m" + str(m));
  const ScanResult r = scan_zeros(m, cfg.limit, policy);
  const auto slots = r.final_state.slots();
  switch (cfg.format) {
    case Format::Text:
      out << "m: " << m << "\n";
      out << (r.halted ? "halted at n: " : "n: ") << r.final_state.step_index() << "\n";
      out << "zeros: " << join(r.zeros, ", ") << "\n";
      out << "final slots: " << join(slots, " ") << "\n";
      break;
    case Format::Csv:
      out << "n\n";
      for (auto z : r.zeros) out << z << "\n";
      break;
    case Format::Json: {
      json j = header("scan");
      j["m"] = str(m);
      j["limit"] = str(cfg.limit);
      j["status"] = r.halted ? "halted" : "complete";
      j["zeros"] = string_array(r.zeros);
      j["final_state"] = {{"n", str(r.final_state.step_index())}, {"slots", string_array(slots)}};
      out << j.dump() << "\n";
      break;
    }
  }
  return kOk;
}

int cmd_certify(const RunConfig& cfg, std::ostream& out) {
  std::uint64_t lo = cfg.n, hi = cfg.n;
  if (cfg.to > 0) {
    lo = cfg.from;
    hi = cfg.to;
  }
  if (lo > hi) throw InvalidArgument("--from must not exceed --to");
  const bool mu = cfg.target == "mu-t";
  if (mu && lo < 2) throw InvalidArgument("mu-t needs n >= 2");
  if (!mu && lo < 1) throw InvalidArgument("pn needs n >= 1");

  std::size_t certified = 0, inconclusive = 0, reducible = 0;
  json rows = json::array();
  const auto P = mu ? std::vector<IntPoly>{} : pn_table(hi);
  for (std::uint64_t n = lo; n <= hi; ++n) {
    const IntPoly f = mu ? mu_closed_form(GraphFamily::T, static_cast<std::uint32_t>(n)).polynomial().divided_by_x_power(2)
                         : P[n];
    const auto v = certify_irreducible(f, cfg.prime_bound);
    std::string verdict;
    json row{{"n", str(n)}};
    switch (v.kind) {
      case IrreducibilityVerdict::Kind::Irreducible:
        ++certified;
        row["verdict"] = "irreducible";
        if (v.prime) {
          verdict = "irreducible (mod " + str(*v.prime) + ")";
          row["prime"] = str(*v.prime);
        } else {
          verdict = "irreducible (factor degrees mod " + join(v.degree_primes, ", ") + ")";
          row["degree_primes"] = string_array(v.degree_primes);
        }
        break;
      case IrreducibilityVerdict::Kind::Reducible:
        ++reducible;
        verdict = "reducible (root " + v.root->get_str() + ")";
        row["verdict"] = "reducible";
        row["root"] = v.root->get_str();
        break;
      case IrreducibilityVerdict::Kind::Inconclusive:
        ++inconclusive;
        verdict = "inconclusive (" + str(v.primes_tried) + " primes tried)";
        row["verdict"] = "inconclusive";
        break;
    }
    row["primes_tried"] = str(v.primes_tried);
    const std::string name = mu ? "mu(T(" + str(n) + "),X)/X^2" : "P_" + str(n);
    if (cfg.format == Format::Text) {
      out << name << ": " << verdict << "\n";
    } else if (cfg.format == Format::Csv) {
      if (rows.empty()) out << "n,verdict,prime,degree_primes,root,primes_tried\n";
      out << n << "," << row["verdict"].get<std::string>() << "," << (v.prime ? str(*v.prime) : "") << ",\""
          << join(v.degree_primes, " ") << "\"," << (v.root ? v.root->get_str() : "") << "," << v.primes_tried << "\n";
    }
    rows.push_back(row);
  }
  if (cfg.format == Format::Text && hi > lo) {
    out << "coverage: " << certified << "/" << (hi - lo + 1) << " certified, " << inconclusive << " inconclusive, "
        << reducible << " reducible\n";
  }
  if (cfg.format == Format::Json) {
    json j = header("certify");
    j["target"] = cfg.target;
    j["prime_bound"] = str(cfg.prime_bound);
    j["results"] = rows;
    j["coverage"] = {{"certified", str(certified)}, {"inconclusive", str(inconclusive)}, {"reducible", str(reducible)}};
    out << j.dump() << "\n";
  }
  if (reducible > 0 || inconclusive == 0) return kOk;
  return kInconclusive;
}

int cmd_padic(const RunConfig& cfg, std::ostream& out) {
  const PadicTrunc v = alpha_k_stabilization(cfg.k, cfg.p, cfg.precision);
  const BigInt u = u_coeff(cfg.k);
  switch (cfg.format) {
    case Format::Text:
    case Format::Csv:
      out << "u_" << cfg.k << " = " << u.get_str() << "\n";
      out << "value: " << v.value.get_str() << " mod " << cfg.p << "^" << cfg.precision << "\n";
      out << "symmetric: " << v.symmetric().get_str() << "\n";
      break;
    case Format::Json: {
      json j = header("padic");
      j["p"] = str(cfg.p);
      j["k"] = str(cfg.k);
      j["precision"] = str(cfg.precision);
      j["u_k"] = u.get_str();
      j["value"] = v.value.get_str();
      j["symmetric"] = v.symmetric().get_str();
      out << j.dump() << "\n";
      break;
    }
  }
  return kOk;
}

GraphFamily parse_family(const std::string& name) {
  if (name == "null") return GraphFamily::Null;
  if (name == "complete") return GraphFamily::Complete;
  if (name == "bipartite") return GraphFamily::CompleteBipartite;
  if (name == "t") return GraphFamily::T;
  throw InvalidArgument("unknown graph family '" + name + "'");
}

int cmd_matchpoly(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  MatchPoly mp;
  bool mismatch = false;
  if (!cfg.edges_file.empty()) {
    std::ifstream in(cfg.edges_file);
    if (!in) {
      err << "error: cannot open " << cfg.edges_file << "\n";
      return kIoError;
    }
    mp = count_matchings(SimpleGraph::parse_edge_list(in));
  } else {
    if (cfg.graph.empty()) throw InvalidArgument("matchpoly needs --graph or --edges");
    const GraphFamily kind = parse_family(cfg.graph);
    mp = mu_closed_form(kind, static_cast<std::uint32_t>(cfg.n));
    if (cfg.brute_force) {
      const MatchPoly brute = count_matchings(family_graph(kind, static_cast<std::uint32_t>(cfg.n)));
      if (!(brute == mp)) {
        err << "error: enumeration disagrees with the closed form: " << brute.polynomial().to_string() << "\n";
        mismatch = true;
      }
    }
  }
  if (!symmetry_check(mp)) {
    err << "error: matching polynomial is not symmetric\n";
    mismatch = true;
  }
  switch (cfg.format) {
    case Format::Text:
      out << mp.polynomial().to_string() << "\n";
      break;
    case Format::Csv:
      out << "k,count\n";
      for (std::size_t k = 0; k < mp.counts.size(); ++k) out << k << "," << mp.counts[k].get_str() << "\n";
      break;
    case Format::Json: {
      json j = header("matchpoly");
      j["vertex_count"] = str(mp.vertex_count);
      j["counts"] = json::array();
      for (const auto& c : mp.counts) j["counts"].push_back(c.get_str());
      j["polynomial"] = mp.polynomial().to_string();
      out << j.dump() << "\n";
      break;
    }
  }
  return mismatch ? kInvariantViolation : kOk;
}

int cmd_dq(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::uint64_t m = cfg.m.front();
  const ModPoly D = build_D(m);
  const ModPoly Q = build_Q(m);
  const auto series = series_expand(Q, D, cfg.terms);
  if (m < kMaxStreamModulus) {
    const auto stream = stream_values(m, cfg.terms);
    for (std::size_t i = 0; i < series.size(); ++i) {
      if (series[i] != stream[i]) {
        err << "error: Q/D expansion disagrees with the stream at n=" << i << "\n";
        return kInvariantViolation;
      }
    }
  }
  switch (cfg.format) {
    case Format::Text:
      if (cfg.show_polys) {
        out << "D(x) = " << modpoly_string(D) << " (mod " << m << ")\n";
        out << "Q(x) = " << modpoly_string(Q) << " (mod " << m << ")\n";
      }
      out << join(series, ",") << "\n";
      break;
    case Format::Csv:
      out << "n,value\n";
      for (std::size_t i = 0; i < series.size(); ++i) out << i << "," << series[i] << "\n";
      break;
    case Format::Json: {
      json j = header("dq");
      j["m"] = str(m);
      j["D"] = string_array(D.coeffs());
      j["Q"] = string_array(Q.coeffs());
      j["series"] = string_array(series);
      out << j.dump() << "\n";
      break;
    }
  }
  return kOk;
}

int cmd_congruence(const RunConfig& cfg, std::ostream& out) {
  const std::uint64_t m = cfg.m.front();
  const CheckReport r = verify_congruence(m, cfg.shift, cfg.window);
  if (cfg.format == Format::Json) {
    json j = header("congruence");
    j["m"] = str(m);
    j["shift"] = str(cfg.shift);
    j["window"] = str(cfg.window);
    j["holds"] = r.ok();
    j["violations"] = r.violations;
    out << j.dump() << "\n";
  } else {
    out << (r.ok() ? "holds" : "fails") << ": f(n) == f(n+" << cfg.shift << ") mod " << m << " for n < " << cfg.window
        << "\n";
    for (const auto& v : r.violations) out << "  " << v << "\n";
  }
  return r.ok() ? kOk : kInvariantViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact and modular computations for the alternating Stirling sum f(n)", "wilf"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"text", Format::Text}, {"csv", Format::Csv}, {"json", Format::Json}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format: text, csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  auto add_checkpoint = [&](CLI::App* sub) {
    sub->add_option("--checkpoint-dir", cfg.checkpoint_dir,
                    std::string("Checkpoint directory (default: $") + kCheckpointDirEnv + ")");
    sub->add_option("--checkpoint-every", cfg.checkpoint_every, "Steps between checkpoint writes")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--resume", cfg.resume, "Continue from an existing checkpoint");
    sub->add_option("--stop-at", cfg.stop_at, "Write a checkpoint and stop at this step")->check(CLI::PositiveNumber);
  };

  auto* seq = app.add_subcommand("seq", "Print f(n) for 0 <= n <= max");
  seq->add_option("--max", cfg.max_n, "Largest n")->required();
  add_format(seq);

  auto* opencases = app.add_subcommand("opencases", "Residue classes where f vanishes mod 2^h");
  opencases->set_help_flag("--help", "Print this help message and exit");
  opencases->add_option("--h", cfg.h, "Exponent(s) h")->required()->check(CLI::Range(1, 30));
  add_checkpoint(opencases);
  add_format(opencases);

  auto* period = app.add_subcommand("period", "State period of the f mod m stream");
  period->add_option("--m", cfg.m, "Modulus (or several)")->required()->check(CLI::Range(std::uint64_t{2}, kMaxStreamModulus - 1));
  period->add_flag("--refine", cfg.refine, "Also report the minimal period of the sequence itself");
  period->add_option("--cap", cfg.cap, "Step cap for the search")->check(CLI::PositiveNumber);
  add_format(period);

  auto* scan = app.add_subcommand("scan", "Indices n < limit with f(n) == 0 mod m, with checkpoints");
  scan->add_option("--m", cfg.m, "Modulus")->required()->check(CLI::Range(std::uint64_t{2}, kMaxStreamModulus - 1));
  scan->add_option("--limit", cfg.limit, "Scan n < limit")->required()->check(CLI::PositiveNumber);
  scan->add_option("--checkpoint", cfg.checkpoint_path, "Checkpoint file");
  add_checkpoint(scan);
  add_format(scan);

  auto* certify = app.add_subcommand("certify", "Irreducibility certificates for P_n or mu(T(n),X)/X^2");
  certify->add_option("--target", cfg.target, "pn or mu-t")->check(CLI::IsMember({"pn", "mu-t"}));
  auto* n_opt = certify->add_option("--n", cfg.n, "Single index");
  auto* from_opt = certify->add_option("--from", cfg.from, "First index of a range");
  auto* to_opt = certify->add_option("--to", cfg.to, "Last index of a range")->check(CLI::PositiveNumber);
  n_opt->excludes(from_opt)->excludes(to_opt);
  from_opt->needs(to_opt);
  to_opt->needs(from_opt);
  certify->add_option("--prime-bound", cfg.prime_bound, "Largest prime tried")->check(CLI::PositiveNumber);
  add_format(certify);

  auto* padic = app.add_subcommand("padic", "Truncation of alpha_k + u_k * alpha in Z_p");
  padic->add_option("--p", cfg.p, "Prime")->required();
  padic->add_option("--k", cfg.k, "Exponent k")->required();
  padic->add_option("--precision", cfg.precision, "Precision t (digits)")->required()->check(CLI::PositiveNumber);
  add_format(padic);

  auto* matchpoly = app.add_subcommand("matchpoly", "Matching polynomial of a graph family or an edge list");
  auto* graph_opt = matchpoly->add_option("--graph", cfg.graph, "null, complete, bipartite or t")
                        ->check(CLI::IsMember({"null", "complete", "bipartite", "t"}));
  matchpoly->add_option("--n", cfg.n, "Family size")->check(CLI::PositiveNumber);
  auto* edges_opt = matchpoly->add_option("--edges", cfg.edges_file, "Edge list file (1-based 'u v' per line)");
  graph_opt->excludes(edges_opt);
  matchpoly->add_flag("--brute-force", cfg.brute_force, "Cross-check the closed form by enumeration");
  add_format(matchpoly);

  auto* dq = app.add_subcommand("dq", "Expand Q(x)/D(x) over Z_m");
  dq->add_option("--m", cfg.m, "Modulus")->required()->check(CLI::Range(std::uint64_t{2}, kMaxStreamModulus - 1));
  dq->add_option("--terms", cfg.terms, "Number of coefficients")->required();
  dq->add_flag("--show-polys", cfg.show_polys, "Also print D and Q");
  add_format(dq);

  auto* congruence = app.add_subcommand("congruence", "Check f(n) == f(n+shift) mod m on a window");
  congruence->add_option("--m", cfg.m, "Modulus")->required()->check(CLI::Range(std::uint64_t{2}, kMaxStreamModulus - 1));
  congruence->add_option("--shift", cfg.shift, "Shift")->required();
  congruence->add_option("--window", cfg.window, "Number of n checked")->required()->check(CLI::PositiveNumber);
  add_format(congruence);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (seq->parsed()) return cmd_seq(cfg, out);
    if (opencases->parsed()) return cmd_opencases(cfg, out);
    if (period->parsed()) return cmd_period(cfg, out, err);
    if (scan->parsed()) return cmd_scan(cfg, out);
    if (certify->parsed()) {
      if (n_opt->count() == 0 && to_opt->count() == 0) throw InvalidArgument("certify needs --n or --from/--to");
      return cmd_certify(cfg, out);
    }
    if (padic->parsed()) return cmd_padic(cfg, out);
    if (matchpoly->parsed()) return cmd_matchpoly(cfg, out, err);
    if (dq->parsed()) return cmd_dq(cfg, out, err);
    if (congruence->parsed()) return cmd_congruence(cfg, out);
  } catch (const PeriodNotFound& e) {
    err << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const CheckpointIOError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvariantViolation;
  }
  return kUsage;
}

}  // namespace wilf::cli
