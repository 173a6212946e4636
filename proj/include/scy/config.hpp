#pragma once
#include <cstdint>
#include <map>
#include <string>

namespace scy {

// Plain "key = value" settings; '#' starts a comment.
struct Config {
    std::string picard_cache = "picard_cache.json";
    uint64_t picard_seed = 1;
    int theta_samples = 24;
    uint64_t theta_seed = 7;
    int hilbert_cap = 40;  // degree bound for Hilbert series fits

    static Config parse(const std::string& text);
    static Config load(const std::string& path);  // throws std::runtime_error if unreadable
    std::map<std::string, std::string> entries() const;
};

}  // namespace scy
