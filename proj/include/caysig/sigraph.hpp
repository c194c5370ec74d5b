#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace caysig {

enum class Sign : std::uint8_t { positive, negative };

// Sign multiplication: equal signs give +, unequal give -.
constexpr Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::positive : Sign::negative;
}

char to_char(Sign s);
Sign sign_from_char(char c);

struct SigraphEdge {
  int a = 0;  // a < b after canonicalization
  int b = 0;
  Sign sign = Sign::positive;
  bool operator==(const SigraphEdge&) const = default;
};

struct EdgeCounts {
  std::int64_t positive = 0;
  std::int64_t negative = 0;
  bool operator==(const EdgeCounts&) const = default;
};

/// Cycle v0 v1 ... v_{m-1} v0 with edge_signs[i] the sign of (v_i, v_{i+1});
/// the closing edge (v_{m-1}, v0) comes last.
struct SignedCycle {
  std::vector<int> vertices;
  std::vector<Sign> edge_signs;
  int length() const { return static_cast<int>(vertices.size()); }
  int negative_count() const;
  bool operator==(const SignedCycle&) const = default;
};

/// Immutable undirected simple graph whose every edge carries a sign.
/// Edges are stored canonically: endpoints ordered a < b, the list sorted
/// lexicographically. Loops and duplicate vertex pairs are rejected.
class Sigraph {
 public:
  Sigraph() = default;
  Sigraph(int vertex_count, std::vector<SigraphEdge> edges,
          std::vector<std::string> vertex_labels = {});

  int vertex_count() const { return vertex_count_; }
  const std::vector<SigraphEdge>& edges() const { return edges_; }
  const std::vector<std::string>& vertex_labels() const { return labels_; }

  /// Indices into edges() of the edges incident to v, ascending.
  std::span<const int> incident_edges(int v) const;
  int degree(int v) const;
  int other_endpoint(int edge_index, int v) const;
  std::optional<int> find_edge(int a, int b) const;

 private:
  void check_vertex(int v) const;

  int vertex_count_ = 0;
  std::vector<SigraphEdge> edges_;
  std::vector<std::string> labels_;
  std::vector<int> adj_offsets_;
  std::vector<int> adj_edges_;
};

EdgeCounts edge_counts(const Sigraph& g);

/// Connected components ignoring signs, ordered by smallest contained vertex;
/// members ascending within each component.
std::vector<std::vector<int>> components(const Sigraph& g);

int neg_degree(const Sigraph& g, int v);
int pos_degree(const Sigraph& g, int v);

/// Line sigraph: one vertex per edge of g (in canonical edge order), vertices
/// adjacent iff the edges share an endpoint, and the new edge is negative iff
/// both constituent edges are negative.
Sigraph line_sigraph(const Sigraph& g);

/// Subgraph induced by the given vertices, reindexed in ascending order of
/// the originals. Labels are carried over when present.
Sigraph induced_subgraph(const Sigraph& g, const std::vector<int>& vertices);

/// True iff c is a simple cycle of g (length >= 3, distinct vertices, every
/// consecutive pair an edge) and the recorded signs match.
bool is_cycle_of(const SignedCycle& c, const Sigraph& g);

/// DOT export: positive edges solid, negative edges dashed, labels attached
/// when the graph carries them.
std::string to_dot(const Sigraph& g);

}  // namespace caysig
