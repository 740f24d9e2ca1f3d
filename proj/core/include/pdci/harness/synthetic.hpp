#pragma once

#include <cstddef>
#include <cstdint>

#include "pdci/dataset.hpp"

namespace pdci::harness {

// n points uniform in [0, 1]^dim.
Dataset uniform_cube(std::size_t n, std::size_t dim, std::uint64_t seed);

struct MixtureSpec {
  std::size_t clusters = 10;
  // Each cluster spans a random latent_dim-dimensional subspace; 0 means full rank.
  std::size_t latent_dim = 0;
  double centre_spread = 1.0;   // std-dev of cluster centres per coordinate
  double cluster_scale = 0.1;   // std-dev along each latent axis
  double noise = 0.0;           // isotropic std-dev added to every coordinate
};

// Equal-weight Gaussian mixture; cluster of point i is i mod clusters.
Dataset gaussian_mixture(std::size_t n, std::size_t dim, const MixtureSpec& spec, std::uint64_t seed);

}  // namespace pdci::harness
