#include "sievelab/coeff_box.hpp"

#include <limits>
#include <stdexcept>

#include "sievelab/compensated.hpp"
#include "sievelab/errors.hpp"
#include "sievelab/rng.hpp"

namespace sievelab {

const char* coeff_kind_name(CoeffKind kind) {
  switch (kind) {
    case CoeffKind::ones: return "ones";
    case CoeffKind::random_complex: return "random_complex";
    case CoeffKind::delta: return "delta";
    case CoeffKind::file: return "file";
  }
  return "?";
}

CoeffKind parse_coeff_kind(const std::string& name) {
  if (name == "ones") return CoeffKind::ones;
  if (name == "random_complex" || name == "random")
    return CoeffKind::random_complex;
  if (name == "delta") return CoeffKind::delta;
  if (name == "file") return CoeffKind::file;
  throw std::invalid_argument("unknown coefficient kind: " + name);
}

std::int64_t CoeffBox::size() const {
  // Saturating product: (2N+1)^n can exceed 64 bits long before any cap
  // check runs, so clamp instead of wrapping.
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  unsigned __int128 total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<unsigned __int128>(side());
    if (total > static_cast<unsigned __int128>(kMax)) return kMax;
  }
  return static_cast<std::int64_t>(total);
}

std::int64_t CoeffBox::index_of(std::span<const std::int64_t> alpha) const {
  if (static_cast<int>(alpha.size()) != n)
    throw std::invalid_argument("CoeffBox::index_of: dimension mismatch");
  std::int64_t idx = 0;
  for (int i = 0; i < n; ++i) {
    std::int64_t a = alpha[static_cast<std::size_t>(i)];
    if (a < -N || a > N)
      throw std::out_of_range("CoeffBox::index_of: alpha outside box");
    idx = idx * side() + (a + N);
  }
  return idx;
}

std::complex<double> CoeffBox::at(std::span<const std::int64_t> alpha) const {
  if (has_dense()) return values[index_of(alpha)];
  if (!rank1)
    throw std::logic_error("CoeffBox::at: no dense values and not rank-1");
  std::complex<double> prod{1.0, 0.0};
  for (int i = 0; i < n; ++i)
    prod *= factors[static_cast<std::size_t>(i)]
                   [alpha[static_cast<std::size_t>(i)] + N];
  return prod;
}

namespace {

// Fills dense values from rank-1 factors (callers guarantee the cap).
void densify(CoeffBox& box) {
  const std::int64_t total = box.size();
  box.values.resize(total);
  const std::int64_t side = box.side();
  std::vector<std::int64_t> digit(static_cast<std::size_t>(box.n), 0);
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::complex<double> prod{1.0, 0.0};
    for (int i = 0; i < box.n; ++i)
      prod *= box.factors[static_cast<std::size_t>(i)]
                         [digit[static_cast<std::size_t>(i)]];
    box.values[idx] = prod;
    for (int i = box.n - 1; i >= 0; --i) {
      auto& d = digit[static_cast<std::size_t>(i)];
      if (++d < side) break;
      d = 0;
    }
  }
}

}  // namespace

CoeffBox make_coeffs(int n, std::int64_t N, CoeffKind kind,
                     std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("make_coeffs: dimension must be >= 1");
  if (N < 0) throw std::invalid_argument("make_coeffs: N must be >= 0");

  CoeffBox box;
  box.n = n;
  box.N = N;
  const std::int64_t total = box.size();

  switch (kind) {
    case CoeffKind::ones: {
      box.rank1 = true;
      box.factors.assign(static_cast<std::size_t>(n),
                         Eigen::VectorXcd::Ones(box.side()));
      if (total <= kDenseBoxCap) densify(box);
      return box;
    }
    case CoeffKind::delta: {
      if (total > kDenseBoxCap)
        throw resource_cap_error("make_coeffs: dense box exceeds cap");
      box.rank1 = true;
      box.factors.assign(static_cast<std::size_t>(n),
                         Eigen::VectorXcd::Zero(box.side()));
      for (auto& f : box.factors) f[N] = 1.0;
      densify(box);
      return box;
    }
    case CoeffKind::random_complex: {
      if (total > kDenseBoxCap)
        throw resource_cap_error("make_coeffs: dense box exceeds cap");
      SplitMix64 rng(seed);
      box.values.resize(total);
      for (std::int64_t i = 0; i < total; ++i) {
        double re = rng.uniform_pm1();
        double im = rng.uniform_pm1();
        box.values[i] = {re, im};
      }
      return box;
    }
    case CoeffKind::file:
      throw std::invalid_argument(
          "make_coeffs: file coefficients are loaded by the CLI");
  }
  throw std::invalid_argument("make_coeffs: bad kind");
}

double l2_norm_sq(const CoeffBox& c) {
  if (c.has_dense()) {
    CompensatedSum acc;
    for (std::int64_t i = 0; i < c.values.size(); ++i)
      acc.add(std::norm(c.values[i]));
    return acc.value();
  }
  if (!c.rank1) return 0.0;
  double prod = 1.0;
  for (const auto& f : c.factors) prod *= f.squaredNorm();
  return prod;
}

double l1_norm(const CoeffBox& c) {
  if (c.has_dense()) {
    CompensatedSum acc;
    for (std::int64_t i = 0; i < c.values.size(); ++i)
      acc.add(std::abs(c.values[i]));
    return acc.value();
  }
  if (!c.rank1) return 0.0;
  double prod = 1.0;
  for (const auto& f : c.factors) prod *= f.lpNorm<1>();
  return prod;
}

}  // namespace sievelab
