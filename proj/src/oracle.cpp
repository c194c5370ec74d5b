#include "caysig/oracle.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace caysig {

namespace {

// Smallest-root DFS: every cycle is discovered from its minimum vertex, with
// intermediate vertices strictly larger than the root. Each undirected cycle
// is walked in both directions; only the one with second vertex < last vertex
// is emitted.
struct CycleSearch {
  const Sigraph& g;
  std::vector<SignedCycle>& out;
  std::vector<char> on_path;
  std::vector<int> path_vertices;
  std::vector<int> path_edges;
  int root = 0;

  void dfs(int u) {
    for (int e : g.incident_edges(u)) {
      const int w = g.other_endpoint(e, u);
      if (w == root) {
        if (path_vertices.size() >= 3 && path_vertices[1] < path_vertices.back()) {
          emit(e);
        }
        continue;
      }
      if (w < root || on_path[w]) continue;
      on_path[w] = 1;
      path_vertices.push_back(w);
      path_edges.push_back(e);
      dfs(w);
      path_edges.pop_back();
      path_vertices.pop_back();
      on_path[w] = 0;
    }
  }

  void emit(int closing_edge) {
    SignedCycle c;
    c.vertices = path_vertices;
    c.edge_signs.reserve(path_edges.size() + 1);
    for (int e : path_edges) c.edge_signs.push_back(g.edges()[e].sign);
    c.edge_signs.push_back(g.edges()[closing_edge].sign);
    out.push_back(std::move(c));
  }
};

void check_gate(const Sigraph& g, int max_vertices, const char* what) {
  if (g.vertex_count() > max_vertices) {
    throw gate_error(std::string(what) + " refused: " +
                     std::to_string(g.vertex_count()) +
                     " vertices exceeds gate of " + std::to_string(max_vertices));
  }
}

}  // namespace

std::vector<SignedCycle> enumerate_simple_cycles(const Sigraph& g, int max_vertices) {
  check_gate(g, max_vertices, "cycle enumeration");
  std::vector<SignedCycle> cycles;
  CycleSearch search{g, cycles, std::vector<char>(g.vertex_count(), 0), {}, {}, 0};
  for (int r = 0; r < g.vertex_count(); ++r) {
    search.root = r;
    search.on_path[r] = 1;
    search.path_vertices = {r};
    search.path_edges.clear();
    search.dfs(r);
    search.on_path[r] = 0;
  }
  return cycles;
}

bool balance_by_cycles(const Sigraph& g, int max_vertices) {
  for (const auto& c : enumerate_simple_cycles(g, max_vertices)) {
    if (c.negative_count() % 2 != 0) return false;
  }
  return true;
}

bool clusterability_by_cycles(const Sigraph& g, int max_vertices) {
  for (const auto& c : enumerate_simple_cycles(g, max_vertices)) {
    if (c.negative_count() == 1) return false;
  }
  return true;
}

bool sign_compat_exhaustive(const Sigraph& g, int max_vertices) {
  check_gate(g, max_vertices, "marking search");
  if (g.vertex_count() >= 63) {
    throw gate_error("marking search not supported beyond 62 vertices");
  }
  const auto& edges = g.edges();
  const std::uint64_t total = std::uint64_t{1} << g.vertex_count();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool ok = true;
    for (const auto& e : edges) {
      const bool a_neg = (mask >> e.a) & 1;
      const bool b_neg = (mask >> e.b) & 1;
      const bool both = a_neg && b_neg;
      if (e.sign == Sign::negative ? !both : both) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

std::vector<int> negative_sections(const SignedCycle& c) {
  const int m = static_cast<int>(c.edge_signs.size());
  const int negatives = c.negative_count();
  if (negatives == 0 || negatives == m) {
    throw std::invalid_argument(
        "negative sections are defined only for heterogeneous cycles");
  }
  int first_positive = 0;
  while (c.edge_signs[first_positive] == Sign::negative) ++first_positive;
  std::vector<int> sections;
  int run = 0;
  for (int i = 1; i <= m; ++i) {
    if (c.edge_signs[(first_positive + i) % m] == Sign::negative) {
      ++run;
    } else if (run > 0) {
      sections.push_back(run);
      run = 0;
    }
  }
  return sections;
}

}  // namespace caysig
