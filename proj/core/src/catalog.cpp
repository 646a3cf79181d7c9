#include "ghull/catalog.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <fstream>

namespace ghull {

std::string catalog_record_id(const json& recipe, unsigned s) {
    const std::string text = recipe.dump() + "|s=" + std::to_string(s);
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json catalog_record_to_json(const CatalogRecord& r) {
    json j;
    j["id"] = r.id;
    j["recipe"] = r.recipe;
    j["s"] = r.s;
    j["eaqec"] = eaqec_to_json(r.eaqec);
    json v = json::object();
    for (const auto& [k, val] : r.verification) v[k] = val;
    j["verification"] = std::move(v);
    j["created_at"] = r.created_at;
    j["tool_version"] = r.tool_version;
    return j;
}

CatalogRecord catalog_record_from_json(const json& j) {
    CatalogRecord r;
    r.id = j.at("id").get<std::string>();
    r.recipe = j.at("recipe");
    r.s = j.at("s").get<unsigned>();
    const json& e = j.at("eaqec");
    r.eaqec.n = e.at("n").get<std::uint64_t>();
    r.eaqec.k = e.at("k").get<std::uint64_t>();
    r.eaqec.d = e.at("d").get<std::uint64_t>();
    r.eaqec.d_is_lower_bound = e.at("d_lb").get<bool>();
    r.eaqec.c = e.at("c").get<std::uint64_t>();
    r.eaqec.q = QLabel{e.at("q").at("p").get<std::uint64_t>(), e.at("q").at("m").get<std::uint64_t>()};
    r.eaqec.degenerate = e.value("degenerate", false);
    if (e.contains("provenance")) r.eaqec.provenance = e.at("provenance").get<std::string>();
    for (const auto& [k, v] : j.at("verification").items()) r.verification.emplace_back(k, v.get<std::string>());
    r.created_at = j.value("created_at", "");
    r.tool_version = j.value("tool_version", "");
    return r;
}

std::vector<CatalogRecord> Catalog::load() const {
    std::vector<CatalogRecord> out;
    std::ifstream in(path_);
    if (!in.is_open()) return out;  // missing catalog reads as empty
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded())
            raise(Errc::CatalogCorrupt, path_.string() + ":" + std::to_string(lineno) + ": unparseable line");
        try {
            out.push_back(catalog_record_from_json(j));
        } catch (const std::exception& e) {
            raise(Errc::CatalogCorrupt,
                  path_.string() + ":" + std::to_string(lineno) + ": bad record (" + e.what() + ")");
        }
    }
    return out;
}

bool Catalog::append(const CatalogRecord& r) const {
    for (const auto& existing : load())
        if (existing.id == r.id) return false;

    const std::string line = catalog_record_to_json(r).dump() + "\n";
    const int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
    if (fd < 0) raise(Errc::CatalogCorrupt, "cannot open catalog for writing: " + path_.string());
    ::flock(fd, LOCK_EX);
    const ssize_t written = ::write(fd, line.data(), line.size());
    ::flock(fd, LOCK_UN);
    ::close(fd);
    if (written != static_cast<ssize_t>(line.size()))
        raise(Errc::CatalogCorrupt, "short write to catalog: " + path_.string());
    return true;
}

std::vector<CatalogRecord> Catalog::query(const CatalogQuery& q) const {
    std::vector<CatalogRecord> out;
    for (auto& r : load()) {
        if (q.q && !(r.eaqec.q == *q.q)) continue;
        if (q.n_min && r.eaqec.n < *q.n_min) continue;
        if (q.n_max && r.eaqec.n > *q.n_max) continue;
        if (q.me && classify_me(r.eaqec) != *q.me) continue;
        if (q.d_min && r.eaqec.d < *q.d_min) continue;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace ghull
