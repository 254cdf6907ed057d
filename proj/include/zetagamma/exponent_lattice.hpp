#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "zetagamma/numbers.hpp"

namespace zg {

/// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(std::uint64_t n);

struct Factorization {
  std::uint64_t n = 1;
  std::map<std::uint64_t, unsigned> factors;  // prime -> exponent >= 1

  [[nodiscard]] Int product() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Complete factorization: trial division by primes below 10^6, then
/// Brent's variant of Pollard rho with a fixed seed. Throws InvalidInput
/// for n = 0.
Factorization factor(std::uint64_t n);

struct PerfectPower {
  std::uint64_t base = 1;
  unsigned exponent = 1;
  friend bool operator==(const PerfectPower&, const PerfectPower&) = default;
};

/// n = base^exponent with exponent maximal; (1, 1) for n = 1.
PerfectPower perfect_power_root(std::uint64_t n);

struct ExponentMatrix {
  std::vector<std::uint64_t> primes;   // sorted
  std::vector<IntVector> rows;         // rows[i][j] = exponent of primes[j] in input i
};

ExponentMatrix exponent_matrix(std::span<const std::uint64_t> ns);

/// Basis of { a : sum_i a_i * rows[i] = 0 } as primitive integer vectors with
/// positive leading entry; empty iff the rows are linearly independent.
std::vector<IntVector> integer_kernel(const std::vector<IntVector>& rows);

struct DependencyCertificate {
  IntVector exponents;
};

struct IndependenceResult {
  bool independent = true;
  std::optional<DependencyCertificate> certificate;
  ExponentMatrix matrix;
};

/// Decides multiplicative independence of naturals exactly. A dependent
/// result carries the smallest kernel basis vector (by L1 norm, then
/// lexicographically) as certificate. The certificate is re-verified on the
/// exponent vectors and numerically (|sum a_i log x_i| < 1e-30 at 50 digits);
/// a failed check raises InternalInconsistency.
IndependenceResult mult_independent(std::span<const std::uint64_t> ns);

/// Exact check: sum_i a_i * exponent_vector(x_i) == 0 and a != 0.
bool verify_certificate(std::span<const std::uint64_t> ns, const DependencyCertificate& cert);

}  // namespace zg
