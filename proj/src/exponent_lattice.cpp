#include "zetagamma/exponent_lattice.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "zetagamma/ball.hpp"
#include "zetagamma/errors.hpp"
#include "zetagamma/linalg.hpp"

namespace zg {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialLimit = 1'000'000;

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<u64> out;
    for (u64 p = 2; p <= kTrialLimit; ++p) {
      if (composite[p]) continue;
      out.push_back(p);
      for (u64 q = p * p; q <= kTrialLimit; q += p) composite[q] = true;
    }
    return out;
  }();
  return primes;
}

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

// a + b mod m for a, b < m, without wrapping past 2^64
u64 add_mod(u64 a, u64 b, u64 m) { return a >= m - b ? a - (m - b) : a + b; }

u64 pow_mod(u64 b, u64 e, u64 m) {
  u64 r = 1;
  b %= m;
  while (e > 0) {
    if (e & 1U) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1U;
  }
  return r;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Brent's cycle finding with batched gcds. Returns a nontrivial factor of
// the odd composite n.
u64 pollard_brent(u64 n, std::mt19937_64& rng) {
  constexpr u64 kBatch = 128;
  for (;;) {
    u64 y = rng() % (n - 1) + 1;
    u64 c = rng() % (n - 1) + 1;
    u64 g = 1, q = 1, x = 0, ys = 0;
    auto f = [&](u64 v) { return add_mod(mul_mod(v, v, n), c, n); };
    for (u64 r = 1; g == 1; r <<= 1U) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      for (u64 k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        for (u64 i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u64(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(u64 n, std::map<u64, unsigned>& out, std::mt19937_64& rng) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  u64 d = pollard_brent(n, rng);
  split(d, out, rng);
  split(n / d, out, rng);
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // these witnesses are deterministic for every n < 2^64
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Int Factorization::product() const {
  Int p = 1;
  for (const auto& [prime, e] : factors) p *= int_pow(to_int(prime), e);
  return p;
}

Factorization factor(u64 n) {
  if (n == 0) fail(ErrorKind::InvalidInput, "cannot factor 0");
  Factorization f;
  f.n = n;
  u64 m = n;
  for (u64 p : small_primes()) {
    if (p * p > m) break;
    while (m % p == 0) {
      ++f.factors[p];
      m /= p;
    }
  }
  if (m == 1) return f;
  // anything left below 10^12 has no factor under 10^6, so it is prime
  if (m < kTrialLimit * kTrialLimit) {
    ++f.factors[m];
    return f;
  }
  std::mt19937_64 rng(0x7a657461ULL);
  split(m, f.factors, rng);
  return f;
}

PerfectPower perfect_power_root(u64 n) {
  if (n <= 1) return {1, 1};
  Factorization f = factor(n);
  unsigned g = 0;
  for (const auto& [p, e] : f.factors) g = std::gcd(g, e);
  u64 base = 1;
  for (const auto& [p, e] : f.factors)
    for (unsigned i = 0; i < e / g; ++i) base *= p;
  return {base, g};
}

ExponentMatrix exponent_matrix(std::span<const u64> ns) {
  std::vector<Factorization> fs;
  std::set<u64> primes;
  for (u64 x : ns) {
    fs.push_back(factor(x));
    for (const auto& [p, e] : fs.back().factors) primes.insert(p);
  }
  ExponentMatrix m;
  m.primes.assign(primes.begin(), primes.end());
  for (const auto& f : fs) {
    IntVector row(m.primes.size(), Int(0));
    for (std::size_t j = 0; j < m.primes.size(); ++j) {
      auto it = f.factors.find(m.primes[j]);
      if (it != f.factors.end()) row[j] = it->second;
    }
    m.rows.push_back(std::move(row));
  }
  return m;
}

std::vector<IntVector> integer_kernel(const std::vector<IntVector>& rows) {
  if (rows.empty()) return {};
  const std::size_t width = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != width) fail(ErrorKind::InvalidInput, "integer_kernel rows have unequal lengths");
  // sum_i a_i row_i = 0  <=>  A a = 0 with A[j][i] = row_i[j]
  IntMatrix a(width, IntVector(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) a[j][i] = rows[i][j];
  return integer_nullspace(a, rows.size());
}

bool verify_certificate(std::span<const u64> ns, const DependencyCertificate& cert) {
  if (cert.exponents.size() != ns.size()) return false;
  if (std::all_of(cert.exponents.begin(), cert.exponents.end(), [](const Int& a) { return a == 0; }))
    return false;
  ExponentMatrix m = exponent_matrix(ns);
  for (std::size_t j = 0; j < m.primes.size(); ++j) {
    Int sum = 0;
    for (std::size_t i = 0; i < ns.size(); ++i) sum += cert.exponents[i] * m.rows[i][j];
    if (sum != 0) return false;
  }
  return true;
}

namespace {

bool certificate_less(const IntVector& a, const IntVector& b) {
  Int la = 0, lb = 0;
  for (const auto& x : a) la += abs(x);
  for (const auto& x : b) lb += abs(x);
  if (la != lb) return la < lb;
  return a < b;
}

void check_log_relation(std::span<const u64> ns, const IntVector& a) {
  constexpr long kDigits = 50;
  mpfr_prec_t prec = num::bits_for_digits(kDigits);
  num::RealBall sum(prec);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (a[i] == 0) continue;
    sum = sum + num::RealBall::from_int(a[i], prec) * num::log_of(to_int(ns[i]), prec);
  }
  if (!num::below_ten_to_minus(sum.abs_upper(), 30))
    fail(ErrorKind::InternalInconsistency, "dependency certificate fails the logarithmic cross-check");
}

}  // namespace

IndependenceResult mult_independent(std::span<const u64> ns) {
  if (ns.empty()) fail(ErrorKind::InvalidInput, "mult_independent needs at least one number");
  for (u64 x : ns)
    if (x == 0) fail(ErrorKind::InvalidInput, "mult_independent needs naturals >= 1");
  IndependenceResult result;
  result.matrix = exponent_matrix(ns);
  std::vector<IntVector> kernel = integer_kernel(result.matrix.rows);
  if (kernel.empty()) return result;

  result.independent = false;
  IntVector best = *std::min_element(kernel.begin(), kernel.end(), certificate_less);
  DependencyCertificate cert{best};
  if (!verify_certificate(ns, cert))
    fail(ErrorKind::InternalInconsistency, "dependency certificate does not verify on exponent vectors");
  check_log_relation(ns, best);
  result.certificate = std::move(cert);
  return result;
}

}  // namespace zg
