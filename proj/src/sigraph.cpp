#include "caysig/sigraph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace caysig {

char to_char(Sign s) { return s == Sign::positive ? '+' : '-'; }

Sign sign_from_char(char c) {
  if (c == '+') return Sign::positive;
  if (c == '-') return Sign::negative;
  throw std::invalid_argument(std::string("sign must be '+' or '-', got '") + c + "'");
}

int SignedCycle::negative_count() const {
  return static_cast<int>(
      std::count(edge_signs.begin(), edge_signs.end(), Sign::negative));
}

Sigraph::Sigraph(int vertex_count, std::vector<SigraphEdge> edges,
                 std::vector<std::string> vertex_labels)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      labels_(std::move(vertex_labels)) {
  if (vertex_count_ < 0) throw std::invalid_argument("negative vertex count");
  if (!labels_.empty() &&
      labels_.size() != static_cast<std::size_t>(vertex_count_)) {
    throw std::invalid_argument("label count does not match vertex count");
  }
  for (auto& e : edges_) {
    if (e.a > e.b) std::swap(e.a, e.b);
    if (e.a == e.b) throw std::invalid_argument("loop edge rejected");
    if (e.a < 0 || e.b >= vertex_count_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const SigraphEdge& x, const SigraphEdge& y) {
              return std::pair{x.a, x.b} < std::pair{y.a, y.b};
            });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].a == edges_[i - 1].a && edges_[i].b == edges_[i - 1].b) {
      throw std::invalid_argument("duplicate edge rejected");
    }
  }
  adj_offsets_.assign(vertex_count_ + 1, 0);
  for (const auto& e : edges_) {
    ++adj_offsets_[e.a + 1];
    ++adj_offsets_[e.b + 1];
  }
  for (int v = 0; v < vertex_count_; ++v) adj_offsets_[v + 1] += adj_offsets_[v];
  adj_edges_.resize(2 * edges_.size());
  std::vector<int> fill(adj_offsets_.begin(), adj_offsets_.end() - 1);
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    adj_edges_[fill[edges_[i].a]++] = i;
    adj_edges_[fill[edges_[i].b]++] = i;
  }
}

void Sigraph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count_) {
    throw std::out_of_range("vertex index " + std::to_string(v) +
                            " out of range [0, " + std::to_string(vertex_count_) + ")");
  }
}

std::span<const int> Sigraph::incident_edges(int v) const {
  check_vertex(v);
  return {adj_edges_.data() + adj_offsets_[v],
          static_cast<std::size_t>(adj_offsets_[v + 1] - adj_offsets_[v])};
}

int Sigraph::degree(int v) const {
  return static_cast<int>(incident_edges(v).size());
}

int Sigraph::other_endpoint(int edge_index, int v) const {
  const auto& e = edges_.at(edge_index);
  return e.a == v ? e.b : e.a;
}

std::optional<int> Sigraph::find_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  const auto it = std::lower_bound(
      edges_.begin(), edges_.end(), std::pair{a, b},
      [](const SigraphEdge& e, const std::pair<int, int>& key) {
        return std::pair{e.a, e.b} < key;
      });
  if (it == edges_.end() || it->a != a || it->b != b) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

EdgeCounts edge_counts(const Sigraph& g) {
  EdgeCounts counts;
  for (const auto& e : g.edges()) {
    if (e.sign == Sign::positive) {
      ++counts.positive;
    } else {
      ++counts.negative;
    }
  }
  return counts;
}

std::vector<std::vector<int>> components(const Sigraph& g) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(g.vertex_count(), 0);
  for (int root = 0; root < g.vertex_count(); ++root) {
    if (seen[root]) continue;
    std::vector<int> member{root};
    seen[root] = 1;
    for (std::size_t head = 0; head < member.size(); ++head) {
      const int u = member[head];
      for (int e : g.incident_edges(u)) {
        const int w = g.other_endpoint(e, u);
        if (!seen[w]) {
          seen[w] = 1;
          member.push_back(w);
        }
      }
    }
    std::sort(member.begin(), member.end());
    out.push_back(std::move(member));
  }
  return out;
}

int neg_degree(const Sigraph& g, int v) {
  int count = 0;
  for (int e : g.incident_edges(v)) {
    if (g.edges()[e].sign == Sign::negative) ++count;
  }
  return count;
}

int pos_degree(const Sigraph& g, int v) {
  return g.degree(v) - neg_degree(g, v);
}

Sigraph line_sigraph(const Sigraph& g) {
  const auto& edges = g.edges();
  std::vector<std::string> labels;
  labels.reserve(edges.size());
  for (const auto& e : edges) {
    if (g.vertex_labels().empty()) {
      labels.push_back(std::to_string(e.a) + "-" + std::to_string(e.b));
    } else {
      labels.push_back(g.vertex_labels()[e.a] + g.vertex_labels()[e.b]);
    }
  }
  std::vector<SigraphEdge> line_edges;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto incident = g.incident_edges(v);
    for (std::size_t i = 0; i < incident.size(); ++i) {
      for (std::size_t j = i + 1; j < incident.size(); ++j) {
        const bool both_negative = edges[incident[i]].sign == Sign::negative &&
                                   edges[incident[j]].sign == Sign::negative;
        line_edges.push_back({incident[i], incident[j],
                              both_negative ? Sign::negative : Sign::positive});
      }
    }
  }
  return Sigraph(static_cast<int>(edges.size()), std::move(line_edges),
                 std::move(labels));
}

Sigraph induced_subgraph(const Sigraph& g, const std::vector<int>& vertices) {
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<int>(i);
  std::vector<SigraphEdge> edges;
  for (const auto& e : g.edges()) {
    if (index[e.a] >= 0 && index[e.b] >= 0) {
      edges.push_back({index[e.a], index[e.b], e.sign});
    }
  }
  std::vector<std::string> labels;
  if (!g.vertex_labels().empty()) {
    labels.reserve(sorted.size());
    for (int v : sorted) labels.push_back(g.vertex_labels()[v]);
  }
  return Sigraph(static_cast<int>(sorted.size()), std::move(edges), std::move(labels));
}

bool is_cycle_of(const SignedCycle& c, const Sigraph& g) {
  const int m = c.length();
  if (m < 3 || c.edge_signs.size() != static_cast<std::size_t>(m)) return false;
  std::vector<int> sorted = c.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted.front() < 0 || sorted.back() >= g.vertex_count()) return false;
  for (int i = 0; i < m; ++i) {
    const auto e = g.find_edge(c.vertices[i], c.vertices[(i + 1) % m]);
    if (!e || g.edges()[*e].sign != c.edge_signs[i]) return false;
  }
  return true;
}

std::string to_dot(const Sigraph& g) {
  std::ostringstream out;
  out << "graph sigraph {\n";
  const auto& labels = g.vertex_labels();
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (!labels.empty()) out << " [label=\"" << labels[v] << "\"]";
    out << ";\n";
  }
  for (const auto& e : g.edges()) {
    out << "  " << e.a << " -- " << e.b
        << (e.sign == Sign::positive ? " [style=solid];\n" : " [style=dashed];\n");
  }
  out << "}\n";
  return out.str();
}

}  // namespace caysig
