#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>

#include "pdci/dataset.hpp"

namespace pdci::harness {

enum class DataFormat {
  kFvecs,  // repeated (int32 LE dim, dim x float32 LE)
  kIdx,    // idx3-ubyte image file, pixels scaled to [0, 1]
  kText,   // one vector per line, whitespace / comma separated
};

DataFormat parse_data_format(std::string_view name);
std::string_view to_string(DataFormat format);

// Throws ParseError (with byte offset) on malformed input, kIoError if unreadable.
Dataset load_dataset(const std::filesystem::path& path, DataFormat format);
Dataset parse_dataset(std::span<const std::uint8_t> bytes, DataFormat format);

void write_fvecs(const std::filesystem::path& path, const Dataset& data);
void write_text(const std::filesystem::path& path, const Dataset& data);
// pixels holds count * rows * cols bytes, row-major per image.
void write_idx_images(const std::filesystem::path& path, std::size_t count, std::size_t rows, std::size_t cols,
                      std::span<const std::uint8_t> pixels);

}  // namespace pdci::harness
