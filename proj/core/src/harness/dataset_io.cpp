#include "pdci/harness/dataset_io.hpp"

#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "pdci/error.hpp"

namespace pdci::harness {

namespace {

std::uint32_t read_le32(const std::uint8_t* p) {
  return std::uint32_t{p[0]} | std::uint32_t{p[1]} << 8 | std::uint32_t{p[2]} << 16 | std::uint32_t{p[3]} << 24;
}

std::uint32_t read_be32(const std::uint8_t* p) {
  return std::uint32_t{p[3]} | std::uint32_t{p[2]} << 8 | std::uint32_t{p[1]} << 16 | std::uint32_t{p[0]} << 24;
}

void put_le32(std::ostream& out, std::uint32_t v) {
  const char b[4] = {static_cast<char>(v), static_cast<char>(v >> 8), static_cast<char>(v >> 16),
                     static_cast<char>(v >> 24)};
  out.write(b, 4);
}

void put_be32(std::ostream& out, std::uint32_t v) {
  const char b[4] = {static_cast<char>(v >> 24), static_cast<char>(v >> 16), static_cast<char>(v >> 8),
                     static_cast<char>(v)};
  out.write(b, 4);
}

Dataset parse_fvecs(std::span<const std::uint8_t> bytes) {
  if (bytes.empty()) throw ParseError(0, "fvecs file holds no records");
  Dataset out;
  std::vector<double> row;
  std::size_t pos = 0;
  std::uint32_t dim = 0;
  while (pos < bytes.size()) {
    if (bytes.size() - pos < 4) throw ParseError(pos, "truncated fvecs record header");
    const std::uint32_t rec_dim = read_le32(bytes.data() + pos);
    const auto signed_dim = static_cast<std::int32_t>(rec_dim);
    if (signed_dim <= 0) throw ParseError(pos, "fvecs dimension must be positive, got " + std::to_string(signed_dim));
    if (dim == 0) {
      dim = rec_dim;
      out = Dataset(dim);
      row.resize(dim);
    } else if (rec_dim != dim) {
      throw ParseError(pos, "fvecs record has dimension " + std::to_string(rec_dim) + ", expected " +
                                std::to_string(dim));
    }
    pos += 4;
    if ((bytes.size() - pos) / 4 < dim) throw ParseError(pos, "truncated fvecs payload");
    for (std::uint32_t i = 0; i < dim; ++i, pos += 4) {
      row[i] = std::bit_cast<float>(read_le32(bytes.data() + pos));
    }
    out.push_back(row);
  }
  return out;
}

Dataset parse_idx(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 16) throw ParseError(bytes.size(), "truncated idx header");
  const std::uint32_t magic = read_be32(bytes.data());
  if (magic != 0x00000803) throw ParseError(0, "idx magic is not 0x00000803 (unsigned byte, 3 dims)");
  const std::uint64_t count = read_be32(bytes.data() + 4);
  const std::uint64_t rows = read_be32(bytes.data() + 8);
  const std::uint64_t cols = read_be32(bytes.data() + 12);
  const std::uint64_t dim = rows * cols;
  if (count == 0 || dim == 0) throw ParseError(4, "idx header declares an empty image set");
  const std::uint64_t payload = bytes.size() - 16;
  if (payload < count * dim) throw ParseError(bytes.size(), "truncated idx payload");
  if (payload > count * dim) throw ParseError(16 + count * dim, "trailing bytes after idx payload");

  std::vector<double> values(count * dim);
  const std::uint8_t* pixels = bytes.data() + 16;
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = pixels[i] / 255.0;
  return Dataset(dim, std::move(values));
}

bool is_separator(char c) { return c == ' ' || c == '\t' || c == ',' || c == ';' || c == '\r'; }

Dataset parse_text(std::span<const std::uint8_t> bytes) {
  const char* text = reinterpret_cast<const char*>(bytes.data());
  const std::size_t size = bytes.size();
  Dataset out;
  std::vector<double> row;
  std::size_t pos = 0;
  while (pos < size) {
    const std::size_t line_start = pos;
    std::size_t line_end = pos;
    while (line_end < size && text[line_end] != '\n') ++line_end;
    pos = line_end + 1;

    row.clear();
    std::size_t i = line_start;
    while (i < line_end) {
      while (i < line_end && is_separator(text[i])) ++i;
      if (i >= line_end || text[i] == '#') break;
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(text + i, text + line_end, v);
      if (ec != std::errc() || (ptr < text + line_end && !is_separator(*ptr))) {
        throw ParseError(i, "malformed numeric field");
      }
      row.push_back(v);
      i = static_cast<std::size_t>(ptr - text);
    }
    if (row.empty()) continue;
    if (!out.empty() && row.size() != out.dim()) {
      throw ParseError(line_start, "line has " + std::to_string(row.size()) + " fields, expected " +
                                       std::to_string(out.dim()));
    }
    out.push_back(row);
  }
  if (out.empty()) throw ParseError(0, "text file holds no vectors");
  return out;
}

}  // namespace

DataFormat parse_data_format(std::string_view name) {
  if (name == "fvecs") return DataFormat::kFvecs;
  if (name == "idx") return DataFormat::kIdx;
  if (name == "txt" || name == "text") return DataFormat::kText;
  throw Error(ErrorCode::kInvalidParams, "unknown data format '" + std::string(name) + "'");
}

std::string_view to_string(DataFormat format) {
  switch (format) {
    case DataFormat::kFvecs: return "fvecs";
    case DataFormat::kIdx: return "idx";
    case DataFormat::kText: return "txt";
  }
  return "?";
}

Dataset parse_dataset(std::span<const std::uint8_t> bytes, DataFormat format) {
  switch (format) {
    case DataFormat::kFvecs: return parse_fvecs(bytes);
    case DataFormat::kIdx: return parse_idx(bytes);
    case DataFormat::kText: return parse_text(bytes);
  }
  throw Error(ErrorCode::kInvalidParams, "unknown data format");
}

Dataset load_dataset(const std::filesystem::path& path, DataFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path.string() + "'");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_dataset(bytes, format);
}

void write_fvecs(const std::filesystem::path& path, const Dataset& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write '" + path.string() + "'");
  for (std::size_t i = 0; i < data.size(); ++i) {
    put_le32(out, static_cast<std::uint32_t>(data.dim()));
    for (double x : data.row(i)) put_le32(out, std::bit_cast<std::uint32_t>(static_cast<float>(x)));
  }
}

void write_text(const std::filesystem::path& path, const Dataset& data) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write '" + path.string() + "'");
  out.precision(17);
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto r = data.row(i);
    for (std::size_t c = 0; c < r.size(); ++c) out << (c ? " " : "") << r[c];
    out << '\n';
  }
}

void write_idx_images(const std::filesystem::path& path, std::size_t count, std::size_t rows, std::size_t cols,
                      std::span<const std::uint8_t> pixels) {
  if (pixels.size() != count * rows * cols) {
    throw Error(ErrorCode::kInvalidParams, "pixel buffer size does not match count * rows * cols");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write '" + path.string() + "'");
  put_be32(out, 0x00000803);
  put_be32(out, static_cast<std::uint32_t>(count));
  put_be32(out, static_cast<std::uint32_t>(rows));
  put_be32(out, static_cast<std::uint32_t>(cols));
  out.write(reinterpret_cast<const char*>(pixels.data()), static_cast<std::streamsize>(pixels.size()));
}

}  // namespace pdci::harness
