#pragma once

// Shared generators and helpers for the test suites. Every generator takes an
// explicit seed so failures replay deterministically.

#include <cmath>
#include <random>
#include <vector>

#include "soddy/soddy.hpp"

namespace testsupport {

using soddy::BigRational;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

// Rational in roughly [lo, hi] with small numerator/denominator.
inline BigRational random_rational(std::mt19937_64& gen, double lo, double hi, int max_den = 12) {
  std::uniform_int_distribution<int> den_dist(1, max_den);
  int den = den_dist(gen);
  int lo_num = int(std::ceil(lo * den)), hi_num = int(std::floor(hi * den));
  if (hi_num < lo_num) hi_num = lo_num;
  std::uniform_int_distribution<int> num_dist(lo_num, hi_num);
  return BigRational(num_dist(gen), den);
}

inline double random_double(std::mt19937_64& gen, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(gen);
}

// Three mutually externally tangent circles by explicit placement: the third
// center comes from intersecting distance circles around the first two.
template <typename S = double>
std::array<soddy::Circle<double>, 3> random_tangent_triple(std::mt19937_64& gen, double rlo = 0.2,
                                                           double rhi = 5.0) {
  double r1 = random_double(gen, rlo, rhi);
  double r2 = random_double(gen, rlo, rhi);
  double r3 = random_double(gen, rlo, rhi);
  double cx = random_double(gen, -3, 3), cy = random_double(gen, -3, 3);
  double theta = random_double(gen, 0, 2 * M_PI);
  soddy::Vec2<double> p1{cx, cy};
  soddy::Vec2<double> p2{cx + (r1 + r2) * std::cos(theta), cy + (r1 + r2) * std::sin(theta)};
  double d1 = r1 + r3, d2 = r2 + r3, e = r1 + r2;
  double a = (e * e + d1 * d1 - d2 * d2) / (2 * e);
  double h = std::sqrt(std::max(0.0, d1 * d1 - a * a));
  soddy::Vec2<double> u{(p2.x - p1.x) / e, (p2.y - p1.y) / e};
  soddy::Vec2<double> p3{p1.x + a * u.x - h * u.y, p1.y + a * u.y + h * u.x};
  return {soddy::Circle<double>{p1, r1}, soddy::Circle<double>{p2, r2},
          soddy::Circle<double>{p3, r3}};
}

template <typename S>
soddy::LaurentSeries<S> random_series(std::mt19937_64& gen, int span = 6) {
  std::uniform_int_distribution<int> lead(-3, 1);
  std::uniform_int_distribution<int> len(1, span);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  int lo = lead(gen), n = len(gen);
  std::vector<S> coeffs;
  for (int i = 0; i < n; ++i) {
    if constexpr (soddy::scalar_traits<S>::exact) {
      coeffs.push_back(S(BigRational(num(gen), den(gen))));
    } else {
      coeffs.push_back(S(num(gen)) / S(den(gen)));
    }
  }
  return soddy::LaurentSeries<S>(S(0), lo, std::move(coeffs));
}

inline double residual(const soddy::GeneralizedCircle<double>& a,
                       const soddy::GeneralizedCircle<double>& b) {
  return soddy::verify_tangency(a, b, 1e-9).residual;
}

}  // namespace testsupport
