#include "sphcode/graphs.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace sphcode {

namespace {

constexpr int kMaxVertices = 10;

void check_vertex_count(int n, int cap) {
  if (n < 1 || n > cap)
    throw std::invalid_argument("graph: vertex count out of supported range");
}

// Position of pair (i, j), i < j, in the packing order.
int pair_pos(int i, int j) { return j * (j - 1) / 2 + i; }

}  // namespace

SimpleGraph SimpleGraph::empty(int n) {
  check_vertex_count(n, kMaxVertices);
  SimpleGraph g;
  g.n = n;
  g.adj.assign(n, 0);
  return g;
}

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  SimpleGraph g = empty(n);
  for (const auto& [u, v] : edges) g.set_edge(u, v, true);
  return g;
}

void SimpleGraph::set_edge(int u, int v, bool present) {
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw std::invalid_argument("graph: endpoint out of range");
  if (u == v) throw std::invalid_argument("graph: self loop");
  if (present) {
    adj[u] |= std::uint16_t(1) << v;
    adj[v] |= std::uint16_t(1) << u;
  } else {
    adj[u] &= ~(std::uint16_t(1) << v);
    adj[v] &= ~(std::uint16_t(1) << u);
  }
}

int SimpleGraph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n; ++v) total += degree(v);
  return total / 2;
}

int SimpleGraph::degree(int v) const { return __builtin_popcount(adj[v]); }

std::uint64_t SimpleGraph::pack() const {
  const int p_total = n * (n - 1) / 2;
  std::uint64_t bits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (edge(i, j)) bits |= std::uint64_t(1) << (p_total - 1 - pair_pos(i, j));
  return bits;
}

SimpleGraph SimpleGraph::unpack(int n, std::uint64_t bits) {
  SimpleGraph g = empty(n);
  const int p_total = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((bits >> (p_total - 1 - pair_pos(i, j))) & 1) g.set_edge(i, j, true);
  return g;
}

// Depth-first assignment of original vertices to canonical slots. At depth q
// the bits among the first q+1 slots are a prefix of the packed string, so a
// branch whose prefix already exceeds the best known value is cut. Candidates
// are tried in ascending row order, which lets the scan stop at the first
// overshoot.
std::uint64_t canonical_form(const SimpleGraph& g) {
  const int n = g.n;
  if (n <= 1) return 0;
  const int p_total = n * (n - 1) / 2;

  std::uint64_t best = g.pack();
  std::vector<int> chosen(n, -1);

  struct Cand {
    std::uint32_t row;
    int v;
  };

  auto rec = [&](auto&& self, int depth, std::uint64_t val, bool tight) -> void {
    if (depth == n) {
      if (val < best) best = val;
      return;
    }
    std::vector<Cand> cands;
    cands.reserve(n);
    for (int v = 0; v < n; ++v) {
      bool used = false;
      for (int q = 0; q < depth; ++q)
        if (chosen[q] == v) {
          used = true;
          break;
        }
      if (used) continue;
      std::uint32_t row = 0;
      for (int q = 0; q < depth; ++q)
        row = (row << 1) | (g.edge(chosen[q], v) ? 1u : 0u);
      cands.push_back({row, v});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      return a.row != b.row ? a.row < b.row : a.v < b.v;
    });

    const int known = (depth + 1) * depth / 2;
    for (const Cand& c : cands) {
      const std::uint64_t nval = (val << depth) | c.row;
      bool ntight = tight;
      if (tight) {
        const std::uint64_t best_prefix = best >> (p_total - known);
        if (nval > best_prefix) break;  // sorted rows: the rest overshoot too
        if (nval < best_prefix) ntight = false;
      }
      chosen[depth] = c.v;
      self(self, depth + 1, nval, ntight);
      chosen[depth] = -1;
    }
  };
  rec(rec, 0, 0, true);
  return best;
}

std::vector<std::uint64_t> enumerate_graphs(int n) {
  check_vertex_count(n, 8);
  std::vector<std::uint64_t> level{0};  // single vertex
  for (int m = 2; m <= n; ++m) {
    std::unordered_set<std::uint64_t> next;
    for (std::uint64_t packed : level) {
      const SimpleGraph base = SimpleGraph::unpack(m - 1, packed);
      for (std::uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
        SimpleGraph g = SimpleGraph::empty(m);
        for (int v = 0; v < m - 1; ++v) g.adj[v] = base.adj[v];
        for (int v = 0; v < m - 1; ++v)
          if ((mask >> v) & 1) g.set_edge(v, m - 1, true);
        next.insert(canonical_form(g));
      }
    }
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end());
  }
  return level;
}

long long count_graphs(int n) {
  return static_cast<long long>(enumerate_graphs(n).size());
}

unsigned long long partitions(int n) {
  if (n < 0) throw std::invalid_argument("partitions: negative argument");
  using Wide = __int128;
  constexpr Wide kMax = static_cast<Wide>(std::numeric_limits<unsigned long long>::max());
  std::vector<Wide> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Wide acc = 0;
    for (int k = 1;; ++k) {
      const long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
      const long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
      if (g1 > m) break;
      const int sign = (k % 2 == 1) ? 1 : -1;
      acc += sign * p[m - g1];
      if (g2 <= m) acc += sign * p[m - g2];
    }
    if (acc > kMax)
      throw std::overflow_error("partitions: value exceeds 64-bit range");
    p[m] = acc;
  }
  return static_cast<unsigned long long>(p[n]);
}

long long sigma(int n) {
  const unsigned long long pn = partitions(n);
  return count_graphs(n) - static_cast<long long>(pn);
}

bool is_clique_union(const SimpleGraph& g) {
  std::vector<int> comp(g.n, -1);
  int label = 0;
  for (int start = 0; start < g.n; ++start) {
    if (comp[start] >= 0) continue;
    std::vector<int> stack{start};
    comp[start] = label;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < g.n; ++v)
        if (g.edge(u, v) && comp[v] < 0) {
          comp[v] = label;
          stack.push_back(v);
        }
    }
    ++label;
  }
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (comp[u] == comp[v] && !g.edge(u, v)) return false;
  return true;
}

SimpleGraph graph_from_text(std::istream& in) {
  int n = 0, m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("graph: missing 'n m' header");
  check_vertex_count(n, kMaxVertices);
  if (m < 0) throw std::invalid_argument("graph: negative edge count");
  SimpleGraph g = SimpleGraph::empty(n);
  for (int e = 0; e < m; ++e) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) throw std::invalid_argument("graph: truncated edge list");
    g.set_edge(u, v, true);
  }
  return g;
}

}  // namespace sphcode
