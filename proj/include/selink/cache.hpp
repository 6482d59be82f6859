// Append-only result cache: JSON lines keyed by canonical (sorted weights,
// degree). Header lines carry the engine version; entries under a stale
// version are ignored.
#pragma once

#include <map>
#include <optional>
#include <string>

#include "selink/ints.hpp"

namespace selink {

class ResultCache {
public:
    explicit ResultCache(std::string path);

    static std::string key(const std::array<i64, 4>& sorted_w, i64 d);

    std::optional<std::string> lookup(const std::string& key) const;
    void store(const std::string& key, const std::string& record_line);

    size_t size() const { return entries_.size(); }

private:
    std::string path_;
    std::map<std::string, std::string> entries_;
    bool header_current_ = false;  // last header line matches this engine
};

}  // namespace selink
