#include "mdssd/catalog.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

#include <json.hpp>

#include "mdssd/errors.hpp"

namespace mdssd {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Catalog::Key Catalog::key_of(const CatalogRecord& r) {
  return {r.q, r.n, r.sigma_kind, r.family, r.params_digest};
}

Catalog::Catalog(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      CatalogRecord r;
      r.q = j.at("q").get<std::uint32_t>();
      r.n = j.at("n").get<std::uint32_t>();
      r.sigma_kind = j.at("sigma_kind").get<std::string>();
      r.family = j.at("family").get<std::string>();
      r.params_digest = j.at("params_digest").get<std::string>();
      keys_.insert(key_of(r));
    } catch (const nlohmann::json::exception& e) {
      throw MalformedArtifact("catalog " + path_.string() + " line " + std::to_string(lineno) + ": " + e.what());
    }
  }
}

bool Catalog::contains(const CatalogRecord& record) const { return keys_.count(key_of(record)) != 0; }

bool Catalog::append(CatalogRecord record) {
  if (!keys_.insert(key_of(record)).second) return false;
  if (record.timestamp.empty()) record.timestamp = utc_timestamp();
  nlohmann::ordered_json j{{"timestamp", record.timestamp},
                           {"q", record.q},
                           {"n", record.n},
                           {"sigma_kind", record.sigma_kind},
                           {"family", record.family},
                           {"params_digest", record.params_digest},
                           {"status", record.status}};
  if (!record.artifact_path.empty()) j["artifact_path"] = record.artifact_path;
  std::ofstream out(path_, std::ios::app);
  if (!out) throw InvalidArgument("cannot open catalog " + path_.string() + " for writing");
  out << j.dump() << '\n';
  return true;
}

}  // namespace mdssd
