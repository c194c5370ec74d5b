#include "caysig/cayley.hpp"

#include <numeric>
#include <stdexcept>

namespace caysig {

GroupSpec validate_spec(std::int64_t p, std::int64_t n) {
  if (!is_prime(p)) {
    throw std::invalid_argument("p must be prime (got " + std::to_string(p) + ")");
  }
  if (n < 1 || n % p != 0) {
    throw std::invalid_argument("p must divide n (got p=" + std::to_string(p) +
                                ", n=" + std::to_string(n) + ")");
  }
  return GroupSpec{p, n, factorize(n)};
}

ConnectionSet connection_set(const GroupSpec& spec) {
  const UnitSet phi_p = units(spec.p);
  const UnitSet phi_n = units(spec.n);
  ConnectionSet out;
  out.members.reserve(phi_p.members.size() * phi_n.members.size());
  for (std::int64_t u : phi_p.members) {
    for (std::int64_t v : phi_n.members) out.members.push_back({u, v});
  }
  return out;
}

bool in_connection_set(const GroupSpec& spec, GroupVertex g) {
  return std::gcd(g.u, spec.p) == 1 && std::gcd(g.v, spec.n) == 1;
}

int vertex_index(const GroupSpec& spec, GroupVertex g) {
  return static_cast<int>(g.u * spec.n + g.v);
}

GroupVertex vertex_at(const GroupSpec& spec, int index) {
  return {index / spec.n, index % spec.n};
}

std::string vertex_label(GroupVertex g) {
  return "(" + std::to_string(g.u) + "," + std::to_string(g.v) + ")";
}

Sigraph build_sigraph(const GroupSpec& spec) {
  const ConnectionSet phi = connection_set(spec);
  const int order = static_cast<int>(spec.order());
  std::vector<char> in_phi(order, 0);
  for (const auto& s : phi.members) in_phi[vertex_index(spec, s)] = 1;

  std::vector<SigraphEdge> edges;
  edges.reserve(static_cast<std::size_t>(order) * phi.size() / 2);
  for (int a = 0; a < order; ++a) {
    const GroupVertex ga = vertex_at(spec, a);
    for (const auto& s : phi.members) {
      const GroupVertex gb{(ga.u + s.u) % spec.p, (ga.v + s.v) % spec.n};
      const int b = vertex_index(spec, gb);
      if (b == a) throw std::logic_error("connection set produced a loop");
      if (a < b) {
        const Sign sign =
            (in_phi[a] || in_phi[b]) ? Sign::positive : Sign::negative;
        edges.push_back({a, b, sign});
      }
    }
  }
  if (2 * edges.size() != static_cast<std::size_t>(order) * phi.size()) {
    throw std::logic_error("edge multiplicity violated");
  }
  std::vector<std::string> labels;
  labels.reserve(order);
  for (int i = 0; i < order; ++i) labels.push_back(vertex_label(vertex_at(spec, i)));
  return Sigraph(order, std::move(edges), std::move(labels));
}

}  // namespace caysig
