#include "pdci/harness/synthetic.hpp"

#include <cmath>
#include <vector>

#include "pdci/error.hpp"
#include "pdci/random.hpp"

namespace pdci::harness {

namespace {
constexpr std::uint64_t kUniformStream = 0x554E4946;  // "UNIF"
constexpr std::uint64_t kMixtureStream = 0x4D495854;  // "MIXT"
}

Dataset uniform_cube(std::size_t n, std::size_t dim, std::uint64_t seed) {
  if (dim == 0) throw Error(ErrorCode::kInvalidDimension, "dimension must be >= 1");
  Engine engine = make_stream(seed, {kUniformStream, n, dim});
  std::vector<double> values(n * dim);
  for (double& v : values) v = uniform01(engine);
  return Dataset(dim, std::move(values));
}

Dataset gaussian_mixture(std::size_t n, std::size_t dim, const MixtureSpec& spec, std::uint64_t seed) {
  if (dim == 0) throw Error(ErrorCode::kInvalidDimension, "dimension must be >= 1");
  if (spec.clusters == 0) throw Error(ErrorCode::kInvalidParams, "need at least one cluster");
  const std::size_t latent = spec.latent_dim == 0 ? dim : spec.latent_dim;
  Engine engine = make_stream(seed, {kMixtureStream, n, dim, spec.clusters, latent});

  std::vector<double> centres(spec.clusters * dim);
  fill_standard_normal(engine, centres);
  for (double& c : centres) c *= spec.centre_spread;

  // Full-rank clusters use the identity basis; otherwise a random dim x latent
  // Gaussian basis scaled so each latent axis has unit expected length.
  std::vector<double> bases;
  if (latent != dim) {
    bases.resize(spec.clusters * dim * latent);
    fill_standard_normal(engine, bases);
    const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
    for (double& b : bases) b *= norm;
  }

  std::vector<double> values(n * dim);
  std::vector<double> z(latent);
  std::vector<double> eps(dim);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = i % spec.clusters;
    fill_standard_normal(engine, z);
    double* out = values.data() + i * dim;
    for (std::size_t t = 0; t < dim; ++t) out[t] = centres[c * dim + t];
    if (latent == dim) {
      for (std::size_t t = 0; t < dim; ++t) out[t] += spec.cluster_scale * z[t];
    } else {
      const double* basis = bases.data() + c * dim * latent;
      for (std::size_t t = 0; t < dim; ++t) {
        double acc = 0.0;
        for (std::size_t a = 0; a < latent; ++a) acc += basis[t * latent + a] * z[a];
        out[t] += spec.cluster_scale * acc;
      }
    }
    if (spec.noise > 0.0) {
      fill_standard_normal(engine, eps);
      for (std::size_t t = 0; t < dim; ++t) out[t] += spec.noise * eps[t];
    }
  }
  return Dataset(dim, std::move(values));
}

}  // namespace pdci::harness
