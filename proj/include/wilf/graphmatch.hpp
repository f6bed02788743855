#pragma once

// Matching polynomials mu(G, X) = sum_k (-1)^k p(G, k) X^(v - 2k).

#include <cstdint>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "wilf/bigint.hpp"
#include "wilf/intpoly.hpp"

namespace wilf {

/// Simple graph on vertices 0 .. vertex_count-1.
class SimpleGraph {
 public:
  explicit SimpleGraph(std::uint32_t vertex_count) : vertex_count_(vertex_count) {}

  /// Throws InvalidArgument on loops, duplicates or out-of-range vertices.
  void add_edge(std::uint32_t u, std::uint32_t v);

  std::uint32_t vertex_count() const { return vertex_count_; }
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges() const { return edges_; }

  /// Parses "u v" lines with 1-based vertices; '#' starts a comment. The
  /// vertex count is the largest label seen unless `vertex_count` is larger.
  static SimpleGraph parse_edge_list(std::istream& in, std::uint32_t vertex_count = 0);
  std::string to_edge_list() const;

 private:
  std::uint32_t vertex_count_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
};

SimpleGraph null_graph(std::uint32_t n);
SimpleGraph complete_graph(std::uint32_t n);
/// K_{n,n}: left part 0..n-1, right part n..2n-1.
SimpleGraph complete_bipartite_graph(std::uint32_t n);
/// T(n): i adjacent to j' iff i > j, with i in 0..n-1 and j' = n + j.
SimpleGraph t_graph(std::uint32_t n);

/// counts[k] = p(G, k) for 0 <= k <= v/2.
struct MatchPoly {
  std::uint32_t vertex_count = 0;
  std::vector<BigInt> counts;

  /// The signed polynomial in X.
  IntPoly polynomial() const;
  BigInt eval(const BigInt& x) const { return polynomial().eval(x); }

  friend bool operator==(const MatchPoly&, const MatchPoly&) = default;
};

inline constexpr std::size_t kMaxEnumerationEdges = 64;

/// Exact enumeration; throws TooLarge beyond kMaxEnumerationEdges edges.
MatchPoly count_matchings(const SimpleGraph& g);

enum class GraphFamily { Null, Complete, CompleteBipartite, T };

MatchPoly mu_closed_form(GraphFamily kind, std::uint32_t n);
SimpleGraph family_graph(GraphFamily kind, std::uint32_t n);

/// mu(T(n), 1) = (-1)^n f(n).
BigInt mu_t_at_one(std::uint32_t n);

/// Roots symmetric about the origin: every term has the parity of the degree.
bool symmetry_check(const IntPoly& p);
bool symmetry_check(const MatchPoly& p);

/// Number of distinct real roots, by a Sturm sequence over the rationals.
std::size_t sturm_real_root_count(const IntPoly& f);

}  // namespace wilf
