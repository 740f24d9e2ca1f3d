#include "pdci/harness/index_meta.hpp"

#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "pdci/error.hpp"

namespace pdci::harness {

namespace {
constexpr const char* kKind = "pdci-index";
constexpr int kVersion = 1;
}  // namespace

void save_index_metadata(const std::filesystem::path& path, const IndexMetadata& meta) {
  nlohmann::json j;
  j["kind"] = kKind;
  j["version"] = kVersion;
  j["data"] = {{"path", meta.data_path.string()},
               {"format", std::string(to_string(meta.format))},
               {"points", meta.num_points}};
  j["params"] = {{"d", meta.params.dim},
                 {"m", meta.params.num_simple},
                 {"L", meta.params.num_composite},
                 {"seed", meta.params.seed}};
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write '" + path.string() + "'");
  out << j.dump(2) << '\n';
}

IndexMetadata load_index_metadata(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path.string() + "'");
  IndexMetadata meta;
  try {
    const nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("kind").get<std::string>() != kKind || j.at("version").get<int>() != kVersion) {
      throw ParseError(0, "not a version-1 pdci index metadata file");
    }
    meta.data_path = j.at("data").at("path").get<std::string>();
    meta.format = parse_data_format(j.at("data").at("format").get<std::string>());
    meta.num_points = j.at("data").at("points").get<std::size_t>();
    const auto& p = j.at("params");
    meta.params = {p.at("d").get<std::size_t>(), p.at("m").get<std::size_t>(), p.at("L").get<std::size_t>(),
                   p.at("seed").get<std::uint64_t>()};
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, std::string("index metadata is not valid JSON: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("index metadata is missing fields: ") + e.what());
  }
  meta.params.validate();
  return meta;
}

DciIndex rebuild_index(const IndexMetadata& meta, const std::filesystem::path& meta_path) {
  std::filesystem::path data_path = meta.data_path;
  if (data_path.is_relative() && !meta_path.empty()) data_path = meta_path.parent_path() / data_path;
  const Dataset data = load_dataset(data_path, meta.format);
  if (data.size() != meta.num_points || data.dim() != meta.params.dim) {
    throw Error(ErrorCode::kDimensionMismatch, "data file '" + data_path.string() +
                                                   "' no longer matches the index metadata");
  }
  return DciIndex::construct(data, meta.params);
}

}  // namespace pdci::harness
