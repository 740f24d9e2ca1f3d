#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pdci/dataset.hpp"
#include "pdci/query.hpp"

namespace pdci {

// Exact k nearest rows of `data` to q by linear scan; ids are row indices.
// Ascending distance, ties by smaller id. Exactly data.size() distance evaluations.
std::vector<Neighbour> brute_force_knn(const Dataset& data, std::span<const double> q, std::size_t k);

}  // namespace pdci
