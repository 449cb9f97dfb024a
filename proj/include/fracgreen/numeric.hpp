#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace fracgreen {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kImag{0.0, 1.0};

/// Neumaier-compensated sum; deterministic for a fixed element order.
class CompensatedSum {
 public:
  void add(double x) {
    double t = s_ + x;
    if (std::abs(s_) >= std::abs(x))
      c_ += (s_ - t) + x;
    else
      c_ += (x - t) + s_;
    s_ = t;
  }
  double value() const { return s_ + c_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

inline double compensated_sum(const std::vector<double>& xs) {
  CompensatedSum acc;
  for (double x : xs) acc.add(x);
  return acc.value();
}

/// Generalized binomial coefficient C(a, k) = a (a-1) ... (a-k+1) / k!.
inline double binomial(double a, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= (a - i) / (i + 1);
  return r;
}

inline bool approx_eq(double x, double y, double tol, double scale = 1.0) {
  return std::abs(x - y) <= tol * std::abs(scale);
}

inline bool approx_eq(cplx x, cplx y, double tol, double scale = 1.0) {
  return std::abs(x - y) <= tol * std::abs(scale);
}

/// Deterministic RNG for property sweeps; fixed engine so results are
/// reproducible across platforms with the same seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * dist_(eng_);
  }
  cplx uniform_complex(double scale) {
    return cplx(uniform(-scale, scale), uniform(-scale, scale));
  }
  int uniform_int(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(dist_(eng_) * (hi - lo + 1)) % (hi - lo + 1);
  }

 private:
  std::mt19937_64 eng_;
  std::uniform_real_distribution<double> dist_{0.0, 1.0};
};

}  // namespace fracgreen
