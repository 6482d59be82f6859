#include "selink/cache.hpp"

#include <array>
#include <fstream>

#include <json.hpp>

#include "selink/errors.hpp"
#include "selink/version.hpp"

namespace selink {

using json = nlohmann::json;

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;  // created on first store
    std::string line;
    bool current = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error&) {
            continue;  // tolerate torn trailing writes
        }
        if (j.contains("selink_cache")) {
            current = j.value("engine", "") == kEngineVersion;
            header_current_ = current;
            continue;
        }
        if (current && j.contains("key") && j.contains("record"))
            entries_[j["key"].get<std::string>()] = j["record"].get<std::string>();
    }
}

std::string ResultCache::key(const std::array<i64, 4>& sorted_w, i64 d) {
    std::string k;
    for (int i = 0; i < 4; ++i) k += std::to_string(sorted_w[i]) + ",";
    k += "d=" + std::to_string(d);
    return k;
}

std::optional<std::string> ResultCache::lookup(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void ResultCache::store(const std::string& key, const std::string& record_line) {
    std::ofstream out(path_, std::ios::app);
    if (!out) throw usage_error("cannot open cache file for append: " + path_);
    if (!header_current_) {
        json h;
        h["selink_cache"] = 1;
        h["engine"] = kEngineVersion;
        out << h.dump() << "\n";
        header_current_ = true;
    }
    json e;
    e["key"] = key;
    e["record"] = record_line;
    out << e.dump() << "\n";
    entries_[key] = record_line;
}

}  // namespace selink
