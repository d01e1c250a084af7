#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace rtop::modular {

using u64 = std::uint64_t;
// Dense polynomial over Z/p, ascending degree, trimmed.
using ModPoly = std::vector<u64>;

// The i-th prime in a fixed descending list of primes below 2^62.
u64 prime(std::size_t index);

inline u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }
inline u64 add(u64 a, u64 b, u64 p) { u64 s = a + b; return s >= p ? s - p : s; }
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 pow(u64 a, u64 e, u64 p);
u64 inv(u64 a, u64 p);
u64 reduce(const mpz_class& v, u64 p);

void trim(ModPoly& a);
int degree(const ModPoly& a);
u64 eval(const ModPoly& a, u64 x, u64 p);
ModPoly rem(ModPoly a, const ModPoly& b, u64 p);
// Monic gcd (empty when both inputs are zero).
ModPoly gcd(ModPoly a, ModPoly b, u64 p);
// Resultant of polynomials of the given actual degrees (leading coefficients nonzero).
u64 resultant(ModPoly a, ModPoly b, u64 p);
// Coefficients of the unique polynomial of degree < xs.size() through (xs, ys).
ModPoly interpolate(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 p);

/// Incremental Chinese remaindering of a vector of residues into symmetric
/// integer representatives.
class CrtAccumulator {
 public:
  explicit CrtAccumulator(std::size_t size) : values_(size), modulus_(1) {}
  void add(const std::vector<u64>& residues, u64 p);
  const mpz_class& modulus() const { return modulus_; }
  // Symmetric representatives in (-modulus/2, modulus/2].
  std::vector<mpz_class> symmetric() const;

 private:
  std::vector<mpz_class> values_;
  mpz_class modulus_;
};

}  // namespace rtop::modular
