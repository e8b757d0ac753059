#include "sievelab/expsum.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "sievelab/compensated.hpp"
#include "sievelab/enumerate.hpp"

namespace sievelab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

std::complex<double> unit_phase(double t) {
  double frac = t - std::floor(t);
  return std::polar(1.0, kTwoPi * frac);
}

std::complex<double> unit_phase(const Fraction& t) {
  return std::polar(1.0, kTwoPi * static_cast<double>(t.num) /
                             static_cast<double>(t.den));
}

std::complex<double> eval_expsum(const CoeffBox& c, const TorusPoint& beta) {
  if (beta.dim() != c.n)
    throw std::invalid_argument("eval_expsum: dimension mismatch");

  const std::int64_t side = c.side();

  if (c.rank1 && !c.factors.empty()) {
    // Product of n one-dimensional sums.
    std::complex<double> prod{1.0, 0.0};
    for (int i = 0; i < c.n; ++i) {
      const Fraction& f = beta.coords[static_cast<std::size_t>(i)];
      const std::int64_t q = f.den;
      std::vector<std::complex<double>> table(static_cast<std::size_t>(q));
      for (std::int64_t j = 0; j < q; ++j)
        table[static_cast<std::size_t>(j)] = std::polar(
            1.0, kTwoPi * static_cast<double>(j) / static_cast<double>(q));
      std::int64_t k = ((-c.N % q) * f.num) % q;
      if (k < 0) k += q;
      CompensatedComplexSum acc;
      for (std::int64_t j = 0; j < side; ++j) {
        acc.add(c.factors[static_cast<std::size_t>(i)][j] *
                table[static_cast<std::size_t>(k)]);
        k += f.num;
        if (k >= q) k -= q;
      }
      prod *= acc.value();
    }
    return prod;
  }

  if (!c.has_dense())
    throw std::logic_error(
        "eval_expsum: box has neither dense values nor factors");

  CompensatedComplexSum acc;
  for_each_box_phase(beta, c.N,
                     [&](std::int64_t flat, std::complex<double> phase) {
                       acc.add(c.values[flat] * phase);
                     });
  return acc.value();
}

LhsResult sieve_lhs(const PointSet& set, const CoeffBox& c) {
  if (set.n != c.n) throw std::invalid_argument("sieve_lhs: dimension mismatch");
  CompensatedSum acc;
  for (const TorusPoint& beta : set.points)
    acc.add(std::norm(eval_expsum(c, beta)));
  LhsResult res;
  res.value = acc.value();
  res.point_count = set.size();
  return res;
}

std::int64_t exact_lhs_prime_line(int n, std::int64_t X, std::int64_t N) {
  if (n < 1) throw std::invalid_argument("exact_lhs_prime_line: n must be >= 1");
  if (N < 0) throw std::invalid_argument("exact_lhs_prime_line: N must be >= 0");
  const std::int64_t M = 2 * N + 1;

  unsigned __int128 prime_sum = 0;
  for (std::int64_t p : primes_upto(X)) {
    std::int64_t r = M % p;
    prime_sum += static_cast<unsigned __int128>(r) * (p - r);
  }

  unsigned __int128 scale = 1;
  for (int i = 0; i < n - 1; ++i) {
    scale *= static_cast<unsigned __int128>(M) * M;
    if (scale > static_cast<unsigned __int128>(
                    std::numeric_limits<std::int64_t>::max()))
      throw std::overflow_error("exact_lhs_prime_line: M^(2(n-1)) overflows");
  }

  unsigned __int128 total = scale * prime_sum;
  if (prime_sum != 0 && total / prime_sum != scale)
    throw std::overflow_error("exact_lhs_prime_line: product overflows");
  if (total > static_cast<unsigned __int128>(
                  std::numeric_limits<std::int64_t>::max()))
    throw std::overflow_error("exact_lhs_prime_line: value exceeds 64 bits");
  return static_cast<std::int64_t>(total);
}

}  // namespace sievelab
