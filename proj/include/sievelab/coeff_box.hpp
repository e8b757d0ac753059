#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sievelab {

enum class CoeffKind { ones, random_complex, delta, file };

const char* coeff_kind_name(CoeffKind kind);
CoeffKind parse_coeff_kind(const std::string& name);

// Complex coefficients c(alpha) on the box max_i |alpha_i| <= N.
// Dense storage is row-major with coordinate 0 slowest; index 0 is
// alpha = (-N, ..., -N).  When `rank1` is set the dense values factor as
// the outer product of `factors` (one length-(2N+1) vector per
// coordinate); boxes above the dense cap keep only the factors.
struct CoeffBox {
  int n = 1;
  std::int64_t N = 0;
  Eigen::VectorXcd values;
  bool rank1 = false;
  std::vector<Eigen::VectorXcd> factors;

  std::int64_t side() const { return 2 * N + 1; }
  std::int64_t size() const;  // (2N+1)^n
  bool has_dense() const { return values.size() > 0; }

  // Flat index of alpha, each coordinate in [-N, N].
  std::int64_t index_of(std::span<const std::int64_t> alpha) const;
  std::complex<double> at(std::span<const std::int64_t> alpha) const;
};

// Dense boxes refuse to allocate beyond this many entries; bigger
// requests must be rank-1.
inline constexpr std::int64_t kDenseBoxCap = 10'000'000;

// ones: rank-1 all-ones box.  random_complex: independent entries with
// real/imag parts uniform in [-1, 1) from the splitmix64 stream seeded by
// `seed`.  delta: 1 at alpha = 0.  The `file` kind is loaded by the CLI.
CoeffBox make_coeffs(int n, std::int64_t N, CoeffKind kind,
                     std::uint64_t seed = 0);

// Sum of |c(alpha)|^2 over the box.
double l2_norm_sq(const CoeffBox& c);

// Sum of |c(alpha)| (used by triangle-inequality checks).
double l1_norm(const CoeffBox& c);

}  // namespace sievelab
