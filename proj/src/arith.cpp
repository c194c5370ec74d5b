#include "caysig/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace caysig {

bool is_prime(std::int64_t value) {
  if (value < 2) return false;
  for (std::int64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

FactoredInteger factorize(std::int64_t value) {
  if (value < 2) {
    throw std::invalid_argument("factorize: value must be >= 2, got " +
                                std::to_string(value));
  }
  FactoredInteger out{value, {}};
  std::int64_t rest = value;
  for (std::int64_t d = 2; d * d <= rest; ++d) {
    if (rest % d != 0) continue;
    int exponent = 0;
    while (rest % d == 0) {
      rest /= d;
      ++exponent;
    }
    out.factors.push_back({d, exponent});
  }
  if (rest > 1) out.factors.push_back({rest, 1});
  return out;
}

std::int64_t totient(const FactoredInteger& f) {
  std::int64_t t = f.value;
  for (const auto& pp : f.factors) t -= t / pp.prime;
  return t;
}

bool UnitSet::contains(std::int64_t residue) const {
  return std::binary_search(members.begin(), members.end(), residue);
}

UnitSet units(std::int64_t modulus) {
  if (modulus < 2) {
    throw std::invalid_argument("units: modulus must be >= 2, got " +
                                std::to_string(modulus));
  }
  UnitSet out{modulus, {}};
  for (std::int64_t r = 1; r < modulus; ++r) {
    if (std::gcd(r, modulus) == 1) out.members.push_back(r);
  }
  return out;
}

RunReport nonunit_runs(std::int64_t modulus) {
  if (modulus < 2) {
    throw std::invalid_argument("nonunit_runs: modulus must be >= 2, got " +
                                std::to_string(modulus));
  }
  RunReport out{modulus, 0, {}, {}};
  std::int64_t r = 1;
  while (r < modulus) {
    if (std::gcd(r, modulus) == 1) {
      ++r;
      continue;
    }
    const std::int64_t start = r;
    while (r < modulus && std::gcd(r, modulus) > 1) ++r;
    out.all_runs.push_back({start, static_cast<int>(r - start)});
  }
  for (const auto& run : out.all_runs) out.lambda = std::max(out.lambda, run.length);
  if (out.lambda > 0) {
    for (const auto& run : out.all_runs) {
      if (run.length == out.lambda) out.run_starts.push_back(run.start);
    }
  }
  return out;
}

}  // namespace caysig
