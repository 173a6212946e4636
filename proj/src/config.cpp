#include "scy/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace scy {

namespace {

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <class T> T number(const std::string& v, T min)
{
    T out{};
    auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || end != v.data() + v.size()) throw std::runtime_error("not a number: '" + v + "'");
    if (out < min) throw std::runtime_error("value below " + std::to_string(min));
    return out;
}

}  // namespace

Config Config::parse(const std::string& text)
{
    Config c;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw std::runtime_error("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        try {
            if (key == "picard_cache") c.picard_cache = value;
            else if (key == "picard_seed") c.picard_seed = number<uint64_t>(value, 0);
            else if (key == "theta_samples") c.theta_samples = number<int>(value, 8);
            else if (key == "theta_seed") c.theta_seed = number<uint64_t>(value, 0);
            else if (key == "hilbert_cap") c.hilbert_cap = number<int>(value, 4);
            else throw std::runtime_error("unknown key");
        } catch (const std::exception& e) {
            throw std::runtime_error("config line " + std::to_string(lineno) + " (" + key + "): " + e.what());
        }
    }
    return c;
}

Config Config::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::map<std::string, std::string> Config::entries() const
{
    return {{"picard_cache", picard_cache},
            {"picard_seed", std::to_string(picard_seed)},
            {"theta_samples", std::to_string(theta_samples)},
            {"theta_seed", std::to_string(theta_seed)},
            {"hilbert_cap", std::to_string(hilbert_cap)}};
}

}  // namespace scy
