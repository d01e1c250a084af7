#include "rtop/modular.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>

namespace rtop::modular {

u64 prime(std::size_t index) {
  static std::mutex mutex;
  static std::vector<u64> primes;
  std::lock_guard<std::mutex> lock(mutex);
  mpz_class candidate = primes.empty() ? (mpz_class(1) << 62) : mpz_class(static_cast<unsigned long>(primes.back()));
  while (primes.size() <= index) {
    do {
      candidate -= 1;
    } while (mpz_probab_prime_p(candidate.get_mpz_t(), 30) == 0);
    primes.push_back(candidate.get_ui());
  }
  return primes[index];
}

u64 pow(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e != 0) {
    if ((e & 1) != 0) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv(u64 a, u64 p) {
  if (a % p == 0) throw std::domain_error("modular inverse of zero");
  return pow(a, p - 2, p);
}

u64 reduce(const mpz_class& v, u64 p) {
  return static_cast<u64>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p)));
}

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

u64 eval(const ModPoly& a, u64 x, u64 p) {
  u64 r = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = add(mul(r, x, p), *it, p);
  return r;
}

ModPoly rem(ModPoly a, const ModPoly& b, u64 p) {
  if (b.empty()) throw std::domain_error("polynomial remainder by zero");
  u64 lead_inv = inv(b.back(), p);
  const std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    u64 q = mul(a.back(), lead_inv, p);
    std::size_t shift = a.size() - 1 - db;
    if (q != 0) {
      for (std::size_t i = 0; i <= db; ++i) a[shift + i] = sub(a[shift + i], mul(q, b[i], p), p);
    }
    a.pop_back();
    trim(a);
  }
  trim(a);
  return a;
}

ModPoly gcd(ModPoly a, ModPoly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = rem(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    u64 li = inv(a.back(), p);
    for (u64& c : a) c = mul(c, li, p);
  }
  return a;
}

u64 resultant(ModPoly a, ModPoly b, u64 p) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return 0;
  u64 result = 1;
  while (true) {
    int da = degree(a);
    int db = degree(b);
    if (db == 0) return mul(result, pow(b[0], static_cast<u64>(da), p), p);
    if (da == 0) return mul(result, pow(a[0], static_cast<u64>(db), p), p);
    if (da < db) {
      if ((da & 1) && (db & 1)) result = sub(0, result, p);
      std::swap(a, b);
      continue;
    }
    // Res(a, b) = (-1)^{da db} lc(b)^{da - dr} Res(b, r) with r = a mod b.
    ModPoly r = rem(a, b, p);
    if (r.empty()) return 0;
    int dr = degree(r);
    if ((da & 1) && (db & 1)) result = sub(0, result, p);
    result = mul(result, pow(b.back(), static_cast<u64>(da - dr), p), p);
    a = std::move(b);
    b = std::move(r);
  }
}

ModPoly interpolate(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 p) {
  // Newton divided differences, then expansion into the monomial basis.
  const std::size_t n = xs.size();
  std::vector<u64> c(ys);
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      u64 num = sub(c[i], c[i - 1], p);
      u64 den = sub(xs[i], xs[i - j], p);
      c[i] = mul(num, inv(den, p), p);
      if (i == j) break;
    }
  }
  ModPoly result(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    // result = result * (x - xs[k]) + c[k]
    for (std::size_t i = n - 1; i > 0; --i) result[i] = sub(result[i - 1], mul(result[i], xs[k], p), p);
    result[0] = sub(0, mul(result[0], xs[k], p), p);
    result[0] = add(result[0], c[k], p);
  }
  trim(result);
  return result;
}

void CrtAccumulator::add(const std::vector<u64>& residues, u64 p) {
  if (residues.size() != values_.size()) throw std::invalid_argument("CRT size mismatch");
  const mpz_class pz(static_cast<unsigned long>(p));
  if (modulus_ == 1) {
    for (std::size_t i = 0; i < residues.size(); ++i) values_[i] = static_cast<unsigned long>(residues[i]);
    modulus_ = pz;
    return;
  }
  // x = v + M * ((r - v) * M^{-1} mod p)
  u64 m_mod = reduce(modulus_, p);
  u64 m_inv = inv(m_mod, p);
  for (std::size_t i = 0; i < residues.size(); ++i) {
    u64 v_mod = reduce(values_[i], p);
    u64 k = mul(sub(residues[i], v_mod, p), m_inv, p);
    values_[i] += modulus_ * static_cast<unsigned long>(k);
  }
  modulus_ *= pz;
}

std::vector<mpz_class> CrtAccumulator::symmetric() const {
  std::vector<mpz_class> out(values_.size());
  mpz_class half = modulus_ / 2;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    out[i] = values_[i];
    if (out[i] > half) out[i] -= modulus_;
  }
  return out;
}

}  // namespace rtop::modular
