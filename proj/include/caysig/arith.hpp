#pragma once

#include <cstdint>
#include <vector>

namespace caysig {

struct PrimePower {
  std::int64_t prime = 0;
  int exponent = 0;
  bool operator==(const PrimePower&) const = default;
};

/// Prime factorization of a positive integer, primes strictly increasing.
struct FactoredInteger {
  std::int64_t value = 0;
  std::vector<PrimePower> factors;
  bool operator==(const FactoredInteger&) const = default;
};

/// Residues in [1, modulus) coprime to the modulus, sorted ascending.
struct UnitSet {
  std::int64_t modulus = 0;
  std::vector<std::int64_t> members;
  bool contains(std::int64_t residue) const;
  bool operator==(const UnitSet&) const = default;
};

struct Run {
  std::int64_t start = 0;
  int length = 0;
  bool operator==(const Run&) const = default;
};

/// Maximal blocks of consecutive residues in [1, modulus) that each share a
/// prime factor with the modulus. lambda is the longest block length (0 when
/// every residue is a unit); run_starts lists the starts of all blocks that
/// attain lambda.
struct RunReport {
  std::int64_t modulus = 0;
  int lambda = 0;
  std::vector<std::int64_t> run_starts;
  std::vector<Run> all_runs;
  bool operator==(const RunReport&) const = default;
};

bool is_prime(std::int64_t value);

/// Trial-division factorization. Throws std::invalid_argument for value < 2.
FactoredInteger factorize(std::int64_t value);

/// Euler totient computed from the factorization: n * prod(1 - 1/p).
std::int64_t totient(const FactoredInteger& f);

/// Unit set by direct gcd scan. Throws std::invalid_argument for modulus < 2.
UnitSet units(std::int64_t modulus);

/// Scan of residues 1..modulus-1 for runs of non-units.
RunReport nonunit_runs(std::int64_t modulus);

}  // namespace caysig
