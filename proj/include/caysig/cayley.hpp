#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "caysig/arith.hpp"
#include "caysig/sigraph.hpp"

namespace caysig {

/// Element (u, v) of Z_p x Z_n.
struct GroupVertex {
  std::int64_t u = 0;
  std::int64_t v = 0;
  auto operator<=>(const GroupVertex&) const = default;
};

/// Validated parameters: p prime, p dividing n, with n's factorization.
struct GroupSpec {
  std::int64_t p = 0;
  std::int64_t n = 0;
  FactoredInteger n_factors;
  std::int64_t order() const { return p * n; }
  bool operator==(const GroupSpec&) const = default;
};

/// phi_p x phi_n: the connection set, symmetric and identity-free.
struct ConnectionSet {
  std::vector<GroupVertex> members;  // sorted
  std::size_t size() const { return members.size(); }
};

/// Throws std::invalid_argument when p is not prime or p does not divide n.
GroupSpec validate_spec(std::int64_t p, std::int64_t n);

ConnectionSet connection_set(const GroupSpec& spec);

/// Membership of (u, v) in phi_p x phi_n, which doubles as the vertex subset
/// in the sign rule.
bool in_connection_set(const GroupSpec& spec, GroupVertex g);

int vertex_index(const GroupSpec& spec, GroupVertex g);  // u * n + v
GroupVertex vertex_at(const GroupSpec& spec, int index);
std::string vertex_label(GroupVertex g);  // "(u,v)"

/// Signed Cayley graph on Z_p x Z_n with connection set phi_p x phi_n. An
/// edge is positive iff at least one endpoint is a member of the connection
/// set, negative otherwise. The result is |Phi|-regular; loops and
/// multi-edges cannot arise and any collapse throws std::logic_error.
Sigraph build_sigraph(const GroupSpec& spec);

}  // namespace caysig
