#include "pdci/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pdci/error.hpp"

namespace pdci {

std::vector<Neighbour> brute_force_knn(const Dataset& data, std::span<const double> q, std::size_t k) {
  const std::size_t n = data.size();
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kInvalidParams, "k = " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
  }
  if (q.size() != data.dim()) throw Error(ErrorCode::kDimensionMismatch, "query dimension differs from data");

  std::vector<Neighbour> all(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto p = data.row(i);
    double sq = 0.0;
    for (std::size_t c = 0; c < p.size(); ++c) {
      const double diff = p[c] - q[c];
      sq += diff * diff;
    }
    all[i] = {static_cast<PointId>(i), std::sqrt(sq)};
  }
  auto closer = [](const Neighbour& a, const Neighbour& b) {
    return a.distance < b.distance || (a.distance == b.distance && a.id < b.id);
  };
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k), all.end(), closer);
  all.resize(k);
  return all;
}

}  // namespace pdci
