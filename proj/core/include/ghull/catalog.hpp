#ifndef GHULL_CATALOG_HPP
#define GHULL_CATALOG_HPP

// Append-only JSON-lines store of discovered parameter rows, deduplicated by
// a content hash of (recipe, s). Appends take an advisory lock on the file.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ghull/serialize.hpp"

namespace ghull {

struct CatalogRecord {
    std::string id;  // 16 hex digits, FNV-1a 64 over the canonical (recipe, s) text
    json recipe;
    unsigned s = 0;
    EaqecParams eaqec;
    std::vector<std::pair<std::string, std::string>> verification;  // check -> pass/fail/skipped
    std::string created_at;                                         // ISO 8601 UTC
    std::string tool_version;
};

std::string catalog_record_id(const json& recipe, unsigned s);

json catalog_record_to_json(const CatalogRecord& r);
CatalogRecord catalog_record_from_json(const json& j);

struct CatalogQuery {
    std::optional<QLabel> q;
    std::optional<std::uint64_t> n_min, n_max;
    std::optional<bool> me;
    std::optional<std::uint64_t> d_min;  // rows whose (possibly lower-bound) d is >= this
};

class Catalog {
  public:
    explicit Catalog(std::filesystem::path path) : path_(std::move(path)) {}

    const std::filesystem::path& path() const noexcept { return path_; }

    /// Appends unless a record with the same id exists; returns whether a line
    /// was written. CatalogCorrupt (with line number) on unreadable content.
    bool append(const CatalogRecord& r) const;

    std::vector<CatalogRecord> load() const;
    std::vector<CatalogRecord> query(const CatalogQuery& q) const;

  private:
    std::filesystem::path path_;
};

}  // namespace ghull

#endif
