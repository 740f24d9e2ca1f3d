#include "pdci/dataset.hpp"

#include "pdci/error.hpp"

namespace pdci {

Dataset::Dataset(std::size_t dim, std::vector<double> values) : dim_(dim), values_(std::move(values)) {
  if (dim_ == 0 && !values_.empty()) {
    throw Error(ErrorCode::kInvalidDimension, "dataset dimension must be positive");
  }
  if (dim_ != 0 && values_.size() % dim_ != 0) {
    throw Error(ErrorCode::kDimensionMismatch, "value count is not a multiple of the dimension");
  }
}

Dataset::Dataset(std::initializer_list<std::initializer_list<double>> rows) {
  if (rows.size() == 0) return;
  dim_ = rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != dim_) {
      throw Error(ErrorCode::kDimensionMismatch, "rows have differing lengths");
    }
    values_.insert(values_.end(), r.begin(), r.end());
  }
}

void Dataset::push_back(std::span<const double> point) {
  if (dim_ == 0) dim_ = point.size();
  if (point.size() != dim_) {
    throw Error(ErrorCode::kDimensionMismatch, "expected " + std::to_string(dim_) +
                                                   " coordinates, got " + std::to_string(point.size()));
  }
  values_.insert(values_.end(), point.begin(), point.end());
}

Dataset Dataset::select(std::span<const std::size_t> rows) const {
  Dataset out(dim_);
  out.reserve(rows.size());
  for (std::size_t r : rows) out.push_back(row(r));
  return out;
}

}  // namespace pdci
