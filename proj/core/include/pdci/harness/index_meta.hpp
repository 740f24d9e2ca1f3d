#pragma once

#include <cstddef>
#include <filesystem>

#include "pdci/dci_index.hpp"
#include "pdci/harness/dataset_io.hpp"

namespace pdci::harness {

// Persisted form of an index: build parameters plus a reference to the data
// file. The structure itself is rebuilt deterministically on load.
struct IndexMetadata {
  std::filesystem::path data_path;  // absolute, or relative to the metadata file
  DataFormat format = DataFormat::kFvecs;
  DciParams params;
  std::size_t num_points = 0;
};

void save_index_metadata(const std::filesystem::path& path, const IndexMetadata& meta);
IndexMetadata load_index_metadata(const std::filesystem::path& path);

// Loads the referenced data and reconstructs the index; checks point count and dimension.
DciIndex rebuild_index(const IndexMetadata& meta, const std::filesystem::path& meta_path = {});

}  // namespace pdci::harness
