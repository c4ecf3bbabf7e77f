#include "config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke::cli {

namespace {

std::string trim(const std::string& text) {
    size_t begin = text.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return "";
    size_t end = text.find_last_not_of(" \t\r");
    return text.substr(begin, end - begin + 1);
}

} // namespace

std::string config_path() {
    if (const char* env = std::getenv("HECKE_CONFIG"); env && *env)
        return env;
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::string(home) + "/.hecke.conf";
    return ".hecke.conf";
}

Config parse_config_text(const std::string& text, const std::string& origin) {
    Config config;
    std::istringstream in(text);
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#')
            continue;
        const size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw usage_error(origin + ":" + std::to_string(line_number) +
                              ": expected key=value");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key == "l") {
            try {
                size_t used = 0;
                const int l = std::stoi(value, &used);
                if (used != value.size() || l < 1)
                    throw std::invalid_argument("");
                config.default_l = l;
            } catch (const std::exception&) {
                throw usage_error(origin + ":" + std::to_string(line_number) +
                                  ": l must be a positive integer");
            }
        } else if (key == "format") {
            if (value != "table" && value != "json" && value != "csv")
                throw usage_error(origin + ":" + std::to_string(line_number) +
                                  ": format must be table, json or csv");
            config.default_format = value;
        }
        // Unknown keys are ignored so the file can be shared with wrappers.
    }
    return config;
}

Config load_config() {
    const std::string path = config_path();
    std::ifstream in(path);
    if (!in)
        return {};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str(), path);
}

} // namespace hecke::cli
