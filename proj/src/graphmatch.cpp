#include "wilf/graphmatch.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

#include "wilf/bigcore.hpp"
#include "wilf/errors.hpp"

namespace wilf {

void SimpleGraph::add_edge(std::uint32_t u, std::uint32_t v) {
  if (u >= vertex_count_ || v >= vertex_count_) throw InvalidArgument("add_edge: vertex out of range");
  if (u == v) throw InvalidArgument("add_edge: loops are not allowed");
  if (u > v) std::swap(u, v);
  if (std::find(edges_.begin(), edges_.end(), std::make_pair(u, v)) != edges_.end()) {
    throw InvalidArgument("add_edge: duplicate edge " + std::to_string(u + 1) + " " + std::to_string(v + 1));
  }
  edges_.emplace_back(u, v);
}

SimpleGraph SimpleGraph::parse_edge_list(std::istream& in, std::uint32_t vertex_count) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::uint32_t max_label = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long u = 0, v = 0;
    if (!(ls >> u)) continue;
    std::string extra;
    if (!(ls >> v) || (ls >> extra) || u < 1 || v < 1 || u > UINT32_MAX || v > UINT32_MAX) {
      throw InvalidArgument("edge list line " + std::to_string(lineno) + ": expected two positive vertex labels");
    }
    pairs.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
    max_label = std::max({max_label, static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)});
  }
  SimpleGraph g(std::max(vertex_count, max_label));
  for (auto [u, v] : pairs) g.add_edge(u - 1, v - 1);
  return g;
}

std::string SimpleGraph::to_edge_list() const {
  std::string out;
  for (auto [u, v] : edges_) out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

SimpleGraph null_graph(std::uint32_t n) { return SimpleGraph(n); }

SimpleGraph complete_graph(std::uint32_t n) {
  SimpleGraph g(n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

SimpleGraph complete_bipartite_graph(std::uint32_t n) {
  SimpleGraph g(2 * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) g.add_edge(i, n + j);
  return g;
}

SimpleGraph t_graph(std::uint32_t n) {
  if (n < 1) throw InvalidArgument("t_graph: n must be >= 1");
  SimpleGraph g(2 * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < i; ++j) g.add_edge(i, n + j);
  return g;
}

IntPoly MatchPoly::polynomial() const {
  std::vector<BigInt> c(vertex_count + 1);
  for (std::size_t k = 0; k < counts.size() && 2 * k <= vertex_count; ++k) {
    c[vertex_count - 2 * k] = (k % 2 == 0) ? counts[k] : BigInt(-counts[k]);
  }
  return IntPoly(std::move(c));
}

namespace {

using Counts = std::vector<BigInt>;

void add_shifted(Counts& into, const Counts& from, std::size_t shift) {
  if (into.size() < from.size() + shift) into.resize(from.size() + shift);
  for (std::size_t i = 0; i < from.size(); ++i) into[i + shift] += from[i];
}

class MatchingCounter {
 public:
  explicit MatchingCounter(const SimpleGraph& g) : edges_(g.edges()) {
    incident_.assign(g.vertex_count(), 0);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      incident_[edges_[e].first] |= std::uint64_t{1} << e;
      incident_[edges_[e].second] |= std::uint64_t{1} << e;
    }
  }

  // Branch on a vertex of maximum degree: either it stays unmatched, or it
  // is matched along one of its edges.
  const Counts& count(std::uint64_t live) {
    if (auto it = memo_.find(live); it != memo_.end()) return it->second;
    Counts result;
    if (live == 0) {
      result = {BigInt(1)};
    } else {
      std::size_t best = 0;
      int best_deg = -1;
      for (std::size_t v = 0; v < incident_.size(); ++v) {
        const int deg = std::popcount(incident_[v] & live);
        if (deg > best_deg) {
          best_deg = deg;
          best = v;
        }
      }
      const std::uint64_t around = incident_[best] & live;
      result = count(live & ~around);
      for (std::uint64_t rest = around; rest != 0; rest &= rest - 1) {
        const auto e = static_cast<std::size_t>(std::countr_zero(rest));
        const auto [a, b] = edges_[e];
        const std::uint32_t other = a == best ? b : a;
        const Counts sub = count(live & ~around & ~incident_[other]);
        add_shifted(result, sub, 1);
      }
    }
    return memo_.emplace(live, std::move(result)).first->second;
  }

 private:
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges_;
  std::vector<std::uint64_t> incident_;
  std::unordered_map<std::uint64_t, Counts> memo_;
};

}  // namespace

MatchPoly count_matchings(const SimpleGraph& g) {
  if (g.edges().size() > kMaxEnumerationEdges) {
    throw TooLarge("count_matchings: " + std::to_string(g.edges().size()) + " edges exceeds " +
                   std::to_string(kMaxEnumerationEdges));
  }
  const std::uint64_t all = g.edges().size() == 64 ? ~std::uint64_t{0}
                                                   : (std::uint64_t{1} << g.edges().size()) - 1;
  MatchingCounter counter(g);
  MatchPoly out{g.vertex_count(), counter.count(all)};
  out.counts.resize(g.vertex_count() / 2 + 1);
  return out;
}

MatchPoly mu_closed_form(GraphFamily kind, std::uint32_t n) {
  if (n < 1) throw InvalidArgument("mu_closed_form: n must be >= 1");
  MatchPoly out;
  switch (kind) {
    case GraphFamily::Null:
      out.vertex_count = n;
      out.counts.assign(n / 2 + 1, BigInt(0));
      out.counts[0] = 1;
      break;
    case GraphFamily::Complete:
      // n! / (k! (n-2k)! 2^k)
      out.vertex_count = n;
      for (std::uint32_t k = 0; 2 * k <= n; ++k) {
        BigInt v = factorial(n) / (factorial(k) * factorial(n - 2 * k));
        v >>= k;
        out.counts.push_back(v);
      }
      break;
    case GraphFamily::CompleteBipartite:
      // binom(n, k)^2 k!
      out.vertex_count = 2 * n;
      for (std::uint32_t k = 0; k <= n; ++k) {
        const BigInt b = binomial(n, k);
        out.counts.push_back(b * b * factorial(k));
      }
      break;
    case GraphFamily::T: {
      // S(n, n-k)
      out.vertex_count = 2 * n;
      const auto row = stirling_row(n);
      for (std::uint32_t k = 0; k <= n; ++k) out.counts.push_back(row[n - k]);
      break;
    }
  }
  return out;
}

SimpleGraph family_graph(GraphFamily kind, std::uint32_t n) {
  switch (kind) {
    case GraphFamily::Null: return null_graph(n);
    case GraphFamily::Complete: return complete_graph(n);
    case GraphFamily::CompleteBipartite: return complete_bipartite_graph(n);
    case GraphFamily::T: return t_graph(n);
  }
  throw InvalidArgument("family_graph: unknown family");
}

BigInt mu_t_at_one(std::uint32_t n) {
  const auto row = stirling_row(n);
  BigInt s = 0;
  for (std::uint32_t k = 0; k <= n; ++k) {
    if (k % 2 == 0) {
      s += row[n - k];
    } else {
      s -= row[n - k];
    }
  }
  return s;
}

bool symmetry_check(const IntPoly& p) {
  if (p.is_zero()) return true;
  const int parity = p.degree() % 2;
  for (int i = 0; i <= p.degree(); ++i) {
    if (i % 2 != parity && sgn(p.coeffs()[static_cast<std::size_t>(i)]) != 0) return false;
  }
  return true;
}

bool symmetry_check(const MatchPoly& p) { return symmetry_check(p.polynomial()); }

std::size_t sturm_real_root_count(const IntPoly& f) {
  if (f.is_zero()) throw InvalidArgument("sturm_real_root_count: zero polynomial");
  const RationalPoly p0(squarefree_part(f));
  if (p0.degree() < 1) return 0;
  std::vector<RationalPoly> seq{p0, p0.derivative()};
  while (true) {
    RationalPoly r = RationalPoly::divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  // Signs at +inf are the leading signs; at -inf they flip with odd degree.
  auto changes = [&](bool at_negative_infinity) {
    std::size_t count = 0;
    int prev = 0;
    for (const auto& s : seq) {
      int sign = sgn(s.leading());
      if (at_negative_infinity && s.degree() % 2 == 1) sign = -sign;
      if (prev != 0 && sign != prev) ++count;
      prev = sign;
    }
    return count;
  };
  return changes(true) - changes(false);
}

}  // namespace wilf
