#include "sievelab/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "sievelab/compensated.hpp"
#include "sievelab/errors.hpp"
#include "sievelab/expsum.hpp"

namespace sievelab {

namespace {

constexpr double kPi = std::numbers::pi;

double dist_to_nearest_int(double y) {
  double frac = y - std::floor(y);
  return std::min(frac, 1.0 - frac);
}

}  // namespace

double fejer_phi(double x) {
  double ax = std::abs(x);
  if (ax < 1e-4) {
    // sin(pi x)/(2x) = (pi/2)(1 - u/6 + u^2/120 - ...), u = (pi x)^2.
    // u < 1e-7 here, so the dropped u^3 term is far below one ulp.
    double u = (kPi * x) * (kPi * x);
    double s = 1.0 - u / 6.0 + u * u / 120.0;
    return (kPi * kPi / 4.0) * s * s;
  }
  double s = std::sin(kPi * x) / (2.0 * x);
  return s * s;
}

double triangle(double s) { return std::max(1.0 - std::abs(s), 0.0); }

double v_closed(double y, std::int64_t N) {
  if (N < 1) throw std::invalid_argument("v_closed: N must be >= 1");
  double d = dist_to_nearest_int(y);
  double Nd = static_cast<double>(N);
  if (2.0 * Nd * d >= 1.0) return 0.0;
  return (kPi * kPi * Nd / 2.0) * (1.0 - 2.0 * Nd * d);
}

double v_truncated(double y, std::int64_t N, std::int64_t K) {
  if (N < 1) throw std::invalid_argument("v_truncated: N must be >= 1");
  if (K < 0) throw std::invalid_argument("v_truncated: K must be >= 0");

  // phi(m/(2N)) = N^2 sin^2(pi m / (2N)) / m^2 for m != 0, and
  // sin^2(pi m / (2N)) is periodic in m with period 2N.
  const std::int64_t period = 2 * N;
  std::vector<double> sin2(static_cast<std::size_t>(period));
  for (std::int64_t r = 0; r < period; ++r) {
    double s = std::sin(kPi * static_cast<double>(r) / (2.0 * static_cast<double>(N)));
    sin2[static_cast<std::size_t>(r)] = s * s;
  }
  const double N2 = static_cast<double>(N) * static_cast<double>(N);

  CompensatedComplexSum acc;
  for (std::int64_t m = -K; m <= K; ++m) {
    double phi_m;
    if (m == 0) {
      phi_m = kPi * kPi / 4.0;
    } else {
      std::int64_t r = std::abs(m) % period;
      if (r == 0) continue;  // phi vanishes at even multiples of N
      phi_m = N2 * sin2[static_cast<std::size_t>(r)] /
              (static_cast<double>(m) * static_cast<double>(m));
    }
    acc.add(phi_m * unit_phase(static_cast<double>(m) * y));
  }

  std::complex<double> total = acc.value();
  if (std::abs(total.imag()) > 1e-10)
    throw invariant_violation_error(
        "v_truncated: imaginary residue " + std::to_string(total.imag()) +
        " exceeds 1e-10 (even symmetry should cancel it)");
  return total.real();
}

double kernel_weight(std::span<const std::int64_t> alpha, std::int64_t N) {
  if (N < 1) throw std::invalid_argument("kernel_weight: N must be >= 1");
  double prod = 1.0;
  for (std::int64_t a : alpha)
    prod *= fejer_phi(static_cast<double>(a) / (2.0 * static_cast<double>(N)));
  return prod;
}

}  // namespace sievelab
