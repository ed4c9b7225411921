#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace sphcode {

/// Undirected simple graph on up to 10 labeled vertices, adjacency stored as
/// row bitmasks.
struct SimpleGraph {
  int n = 0;
  std::vector<std::uint16_t> adj;

  static SimpleGraph empty(int n);
  static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  bool edge(int u, int v) const { return (adj[u] >> v) & 1; }
  void set_edge(int u, int v, bool present);
  int edge_count() const;
  int degree(int v) const;

  /// Upper-triangle bits packed with pair (0,1) most significant; pairs are
  /// ordered by larger endpoint, then smaller.
  std::uint64_t pack() const;
  static SimpleGraph unpack(int n, std::uint64_t bits);
};

/// Minimum of pack() over all vertex relabelings (lexicographically smallest
/// adjacency bitstring), computed by prefix-pruned search.
std::uint64_t canonical_form(const SimpleGraph& g);

/// Sorted canonical forms of all isomorphism classes on n vertices (n <= 8),
/// grown one vertex at a time with canonical dedup at each level.
std::vector<std::uint64_t> enumerate_graphs(int n);

/// Number of isomorphism classes of simple graphs on n vertices (n <= 8).
long long count_graphs(int n);

/// Number of unrestricted integer partitions, by the pentagonal-number
/// recurrence. Exact; throws once the value leaves the 64-bit range.
unsigned long long partitions(int n);

/// count_graphs(n) - partitions(n): the number of two-distance sets of
/// n points in dimension n - 2.
long long sigma(int n);

/// True iff every connected component is a complete graph.
bool is_clique_union(const SimpleGraph& g);

/// Text format: first line "n m", then m lines "u v" with 0-based endpoints.
SimpleGraph graph_from_text(std::istream& in);

}  // namespace sphcode
