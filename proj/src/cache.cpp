#include "irrec/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace irrec {
namespace cache {

namespace {
const char* kHeader = "IRREC1\n";

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
    return h;
}

std::string path_for(const std::string& key) {
    std::ostringstream os;
    os << directory() << "/" << std::hex << fnv1a(key) << ".json";
    return os.str();
}
}  // namespace

bool enabled() { return std::getenv("IRREC_CACHE_DIR") != nullptr; }

std::string directory() {
    const char* d = std::getenv("IRREC_CACHE_DIR");
    return d ? std::string(d) : std::string();
}

std::string count_key(const std::string& family, int g, const std::vector<long>& mu) {
    nlohmann::json j;
    j["family"] = family;
    j["g"] = g;
    j["mu"] = mu;
    return j.dump();  // nlohmann emits object keys sorted: canonical
}

std::optional<Rational> load(const std::string& key) {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    std::string header(7, '\0');
    in.read(header.data(), 7);
    if (header != kHeader) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
        if (j.at("key").get<std::string>() != key) return std::nullopt;  // hash collision
        Integer num(j.at("value").at("num").get<std::string>());
        Integer den(j.at("value").at("den").get<std::string>());
        return ratio(num, den);
    } catch (...) {
        return std::nullopt;
    }
}

void store(const std::string& key, const Rational& value) {
    if (!enabled()) return;
    std::error_code ec;
    std::filesystem::create_directories(directory(), ec);
    nlohmann::json j;
    j["key"] = key;
    j["value"]["num"] = value.get_num().get_str();
    j["value"]["den"] = value.get_den().get_str();
    std::ofstream out(path_for(key));
    out << kHeader << j.dump();
}

}  // namespace cache
}  // namespace irrec
