/**
 * @file catalog.hpp
 * @brief Append-only JSON-lines record of construction outcomes.
 *
 * One record per (q, n, sigma_kind, family, params digest); appending a key
 * that is already present is a no-op, so reruns add nothing.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <tuple>

namespace mdssd {

struct CatalogRecord {
  std::string timestamp;  // filled by append when empty
  std::uint32_t q = 0;
  std::uint32_t n = 0;
  std::string sigma_kind;
  std::string family;
  std::string params_digest;
  std::string status;  // passed, failed, blocked
  std::string artifact_path;
};

class Catalog {
 public:
  /// Loads existing keys; the file is created on first append.
  explicit Catalog(std::filesystem::path path);

  /// Returns false when the key is already recorded.
  bool append(CatalogRecord record);
  bool contains(const CatalogRecord& record) const;
  std::size_t size() const { return keys_.size(); }

 private:
  using Key = std::tuple<std::uint32_t, std::uint32_t, std::string, std::string, std::string>;
  static Key key_of(const CatalogRecord& r);

  std::filesystem::path path_;
  std::set<Key> keys_;
};

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

}  // namespace mdssd
