#include "rtop/complexroots.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace rtop {

namespace {

using cld = std::complex<long double>;

// Coefficients as mantissa * 2^exponent, rescaled so the largest is ~1.
std::vector<long double> scaled_coeffs(const IntPoly& a) {
  std::vector<long double> out(a.coeffs().size());
  std::vector<long> exps(out.size());
  std::vector<double> mant(out.size());
  long emax = LONG_MIN;
  for (std::size_t i = 0; i < out.size(); ++i) {
    long e = 0;
    mant[i] = mpz_get_d_2exp(&e, a.coeffs()[i].get_mpz_t());
    exps[i] = e;
    if (mant[i] != 0) emax = std::max(emax, e);
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = mant[i] == 0 ? 0.0L : std::ldexp(static_cast<long double>(mant[i]), static_cast<int>(std::max(exps[i] - emax, -16000L)));
  }
  return out;
}

// p(z) / p'(z), evaluated through the reversed polynomial when |z| > 1.
// `noisy` is set when |p(z)| is within the Horner rounding bound.
cld newton_ratio(const std::vector<long double>& c, cld z, bool& noisy) {
  const int n = static_cast<int>(c.size()) - 1;
  const long double u = 8 * (n + 1) * std::numeric_limits<long double>::epsilon();
  if (std::abs(z) <= 1.0L) {
    const long double r = std::abs(z);
    cld p = c[static_cast<std::size_t>(n)];
    cld dp = 0;
    long double e = std::abs(c[static_cast<std::size_t>(n)]);
    for (int i = n - 1; i >= 0; --i) {
      dp = dp * z + p;
      p = p * z + c[static_cast<std::size_t>(i)];
      e = e * r + std::abs(c[static_cast<std::size_t>(i)]);
    }
    noisy = std::abs(p) <= u * e;
    return p / dp;
  }
  const cld w = 1.0L / z;
  const long double rw = std::abs(w);
  cld r = c[0];
  cld dr = 0;
  long double e = std::abs(c[0]);
  for (int i = 1; i <= n; ++i) {
    dr = dr * w + r;
    r = r * w + c[static_cast<std::size_t>(i)];
    e = e * rw + std::abs(c[static_cast<std::size_t>(i)]);
  }
  noisy = std::abs(r) <= u * e;
  // p(z) = z^n r(w), p'(z) = z^(n-1) (n r(w) - w r'(w)).
  return z * r / (static_cast<long double>(n) * r - w * dr);
}

std::vector<cld> initial_points(const std::vector<long double>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  // Upper convex hull of (i, log|c_i|).
  std::vector<int> hull;
  auto lg = [&](int i) { return std::log(std::abs(c[static_cast<std::size_t>(i)])); };
  for (int i = 0; i <= n; ++i) {
    if (c[static_cast<std::size_t>(i)] == 0) continue;
    while (hull.size() >= 2) {
      const int a = hull[hull.size() - 2];
      const int b = hull.back();
      const long double cross = (lg(b) - lg(a)) * (i - a) - (lg(i) - lg(a)) * (b - a);
      if (cross <= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(i);
  }
  std::vector<cld> z;
  z.reserve(static_cast<std::size_t>(n));
  const long double sigma = 0.7L;
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const int i = hull[h];
    const int j = hull[h + 1];
    const int k = j - i;
    const long double r = std::exp((lg(i) - lg(j)) / k);
    for (int m = 0; m < k; ++m) {
      const long double ang = 2 * std::numbers::pi_v<long double> * m / k + 2 * std::numbers::pi_v<long double> * h / n + sigma;
      z.emplace_back(r * std::cos(ang), r * std::sin(ang));
    }
  }
  // Zero roots (trailing zero coefficients) are seeded at the origin.
  while (static_cast<int>(z.size()) < n) z.emplace_back(0.0L, 0.0L);
  return z;
}

void aberth_long_double(const std::vector<long double>& c, std::vector<cld>& z) {
  const std::size_t n = z.size();
  std::vector<bool> done(n, false);
  for (int iter = 0; iter < 800; ++iter) {
    bool all = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      if (z[k] == cld(0)) {
        // Exact zero root: p(0) = 0.
        if (c[0] == 0) {
          done[k] = true;
          continue;
        }
      }
      bool noisy = false;
      const cld ratio = newton_ratio(c, z[k], noisy);
      cld s = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) s += 1.0L / (z[k] - z[j]);
      }
      const cld step = ratio / (1.0L - ratio * s);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[k] -= step;
      if (noisy || std::abs(step) <= 1e-17L * std::max(1.0L, std::abs(z[k]))) {
        done[k] = true;
      } else {
        all = false;
      }
    }
    if (all) break;
  }
}

Complex to_complex(cld z, mpfr_prec_t bits) {
  return Complex(BigFloat(static_cast<double>(z.real()), bits) + BigFloat(static_cast<double>(z.real() - static_cast<double>(z.real())), bits),
                 BigFloat(static_cast<double>(z.imag()), bits) + BigFloat(static_cast<double>(z.imag() - static_cast<double>(z.imag())), bits));
}

struct NewtonStep {
  Complex ratio;
  bool at_noise_level = false;  // |p(z)| within the Horner rounding bound
};

// p(z) / p'(z) with p, p' and the rounding bound sum |c_i| |z|^i in one pass.
NewtonStep newton_step(const std::vector<BigFloat>& c, const Complex& z) {
  const mpfr_prec_t bits = z.re.precision();
  Complex p(bits);
  Complex dp(bits);
  BigFloat bound(64);
  const BigFloat r = z.abs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp *= z;
    dp += p;
    p *= z;
    p.re += *it;
    bound = bound * r + BigFloat::abs(*it);
  }
  NewtonStep out{Complex(bits)};
  BigFloat noise = bound * BigFloat(8.0 * static_cast<double>(c.size()), 64);
  mpfr_mul_2si(noise.get(), noise.get(), -static_cast<long>(bits), MPFR_RNDU);
  out.at_noise_level = p.abs() <= noise;
  if (!(dp.re.is_zero() && dp.im.is_zero())) out.ratio = p / dp;
  return out;
}

cld to_cld(const Complex& z) { return cld(z.re.to_long_double(), z.im.to_long_double()); }

}  // namespace

std::vector<Complex> complex_roots(const IntPoly& a, mpfr_prec_t bits) {
  std::vector<Complex> out;
  const int n = a.degree();
  if (n <= 0) return out;
  std::vector<long double> c = scaled_coeffs(a);
  std::vector<cld> z0 = initial_points(c);
  aberth_long_double(c, z0);

  std::vector<Complex> z;
  z.reserve(z0.size());
  for (const auto& v : z0) z.push_back(to_complex(v, bits));
  if (a.coeff(0) == 0) {
    // Pin zero roots exactly.
    int zeros = 0;
    while (a.coeff(zeros) == 0) ++zeros;
    std::vector<std::size_t> idx(z.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return z[x].norm() < z[y].norm(); });
    for (int i = 0; i < zeros; ++i) z[idx[static_cast<std::size_t>(i)]] = Complex(bits);
  }
  std::vector<BigFloat> coeffs;
  coeffs.reserve(a.coeffs().size());
  for (const auto& v : a.coeffs()) coeffs.emplace_back(v, bits);
  std::vector<cld> zl(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) zl[k] = to_cld(z[k]);
  const BigFloat eps = BigFloat::pow10(-static_cast<long>(bits * 3 / 10), 64);
  const Complex one(BigFloat(1, bits), BigFloat(bits));
  std::vector<bool> done(z.size(), false);
  for (std::size_t k = 0; k < z.size(); ++k) done[k] = z[k].re.is_zero() && z[k].im.is_zero() && a.coeff(0) == 0;
  for (int iter = 0; iter < 60; ++iter) {
    bool all = true;
    for (std::size_t k = 0; k < z.size(); ++k) {
      if (done[k]) continue;
      const NewtonStep ns = newton_step(coeffs, z[k]);
      const Complex& ratio = ns.ratio;
      // Aberth sum: far roots in long double, close ones at full precision.
      const long double near = 1e-6L * std::max(1.0L, std::abs(zl[k]));
      cld s_far = 0;
      Complex s(bits);
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j == k) continue;
        const cld d = zl[k] - zl[j];
        if (std::abs(d) > near) {
          s_far += 1.0L / d;
          continue;
        }
        Complex diff = z[k] - z[j];
        if (diff.re.is_zero() && diff.im.is_zero()) continue;
        s += one / diff;
      }
      s.re += BigFloat(static_cast<double>(s_far.real()), bits);
      s.im += BigFloat(static_cast<double>(s_far.imag()), bits);
      Complex denom = one - ratio * s;
      Complex step = (denom.re.is_zero() && denom.im.is_zero()) ? ratio : ratio / denom;
      z[k] -= step;
      zl[k] = to_cld(z[k]);
      BigFloat scale = z[k].abs();
      if (scale < BigFloat(1, 64)) scale = BigFloat(1, 64);
      if (ns.at_noise_level || step.abs() <= eps * scale) {
        done[k] = true;
      } else {
        all = false;
      }
    }
    if (all) break;
  }
  return z;
}

int numeric_real_root_count(const IntPoly& a, int digits) {
  const mpfr_prec_t bits = bits_for_digits(digits);
  const BigFloat tol = BigFloat::pow10(-digits, bits);
  int count = 0;
  for (const auto& z : complex_roots(a, bits)) {
    BigFloat scale = z.abs();
    if (scale < BigFloat(1, bits)) scale = BigFloat(1, bits);
    if (BigFloat::abs(z.im) <= tol * scale) ++count;
  }
  return count;
}

}  // namespace rtop
