#include "indgen/database_io.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "indgen/version.hpp"

namespace indgen {

namespace {

using nlohmann::json;

json record_to_json(int degree, const ClassRecord& r) {
  json j;
  j["n"] = degree;
  j["set"] = r.representative.cycle_strings();
  j["size"] = r.representative.size();
  j["class_size"] = r.class_size;
  j["generates"] = r.classification.generating;
  j["maximal"] = r.classification.maximal;
  j["dead_end"] = r.classification.dead_end;
  j["incremental"] = r.incremental;
  j["strongly_incremental"] = r.strongly_incremental;
  j["symmetry"] = r.symmetry_label;
  j["symmetry_order"] = r.symmetry_order;
  if (r.diameter)
    j["diameter"] = *r.diameter;
  else
    j["diameter"] = nullptr;
  return j;
}

ClassRecord record_from_json(const json& j, int degree) {
  if (j.at("n").get<int>() != degree)
    throw std::invalid_argument("record degree does not match the header");
  ClassRecord r;
  std::vector<std::string> cycles =
      j.at("set").get<std::vector<std::string>>();
  std::vector<Perm> members;
  members.reserve(cycles.size());
  for (const std::string& c : cycles)
    members.push_back(parse_cycles(c, degree));
  r.representative = PermSet(degree, std::move(members));
  if (j.at("size").get<std::size_t>() != r.representative.size())
    throw std::invalid_argument("record size does not match its set");
  r.class_size = j.at("class_size").get<std::uint64_t>();
  r.classification.independent = true;
  r.classification.generating = j.at("generates").get<bool>();
  r.classification.maximal = j.at("maximal").get<bool>();
  r.classification.dead_end = j.at("dead_end").get<bool>();
  r.symmetry_label = j.at("symmetry").get<std::string>();
  r.symmetry_order = j.at("symmetry_order").get<std::uint32_t>();
  if (!j.at("diameter").is_null())
    r.diameter = j.at("diameter").get<int>();
  r.incremental = j.at("incremental").get<bool>();
  r.strongly_incremental = j.at("strongly_incremental").get<bool>();
  return r;
}

} // namespace

void write_database(const ClassDatabase& db, const std::filesystem::path& file) {
  namespace fs = std::filesystem;
  if (file.has_parent_path()) fs::create_directories(file.parent_path());
  fs::path tmp = file;
  tmp += ".tmp";

  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out)
      throw std::runtime_error("cannot write " + tmp.string());
    json header;
    header["format"] = "indgen-classes";
    header["engine"] = std::string(kEngineName) + " " + std::string(kEngineVersion);
    header["degree"] = db.degree;
    header["strategy"] = std::string(to_string(db.strategy));
    header["classes"] = db.records.size();
    header["total_independent_sets"] = db.total_independent_sets();
    out << header.dump() << '\n';
    for (const ClassRecord& r : db.records)
      out << record_to_json(db.degree, r).dump() << '\n';
    out.flush();
    if (!out)
      throw std::runtime_error("failed while writing " + tmp.string());
  }
  fs::rename(tmp, file);
}

ClassDatabase read_database(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot read " + file.string());

  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error(file.string() + ": empty database file");

  ClassDatabase db;
  std::size_t classes = 0;
  std::uint64_t total = 0;
  try {
    const json header = json::parse(line);
    if (header.at("format").get<std::string>() != "indgen-classes")
      throw std::runtime_error(file.string() + ": unrecognized format tag");
    db.degree = header.at("degree").get<int>();
    if (db.degree < 1 || db.degree > kMaxDegree)
      throw std::runtime_error(file.string() + ": degree out of range");
    const auto strategy =
        strategy_from_string(header.at("strategy").get<std::string>());
    if (!strategy)
      throw std::runtime_error(file.string() + ": unrecognized strategy");
    db.strategy = *strategy;
    classes = header.at("classes").get<std::size_t>();
    total = header.at("total_independent_sets").get<std::uint64_t>();

    db.records.reserve(classes);
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      db.records.push_back(record_from_json(json::parse(line), db.degree));
    }
  } catch (const json::exception& e) {
    throw std::runtime_error(file.string() + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(file.string() + ": " + e.what());
  }

  if (db.records.size() != classes)
    throw std::runtime_error(file.string() + ": header promises " +
                             std::to_string(classes) + " classes, file has " +
                             std::to_string(db.records.size()));
  if (db.total_independent_sets() != total)
    throw std::runtime_error(file.string() + ": class sizes do not sum to the header total");
  return db;
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("INDGEN_CACHE_DIR"); env && *env)
    return std::filesystem::path(env);
  return std::filesystem::path(".indgen-cache");
}

std::filesystem::path cache_path(const std::filesystem::path& dir, int degree) {
  return dir / (std::string(kEngineName) + "-" + std::string(kEngineVersion) +
                "-s" + std::to_string(degree) + ".jsonl");
}

} // namespace indgen
