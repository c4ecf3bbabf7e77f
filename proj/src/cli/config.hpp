#pragma once

#include <optional>
#include <string>

/*
  Optional key=value configuration, read from $HECKE_CONFIG when set and
  from ~/.hecke.conf otherwise. Recognized keys: "l" (default root-of-unity
  order) and "format" (table | json | csv). Blank lines and lines starting
  with '#' are skipped. Command-line flags always win.
*/

namespace hecke::cli {

struct Config {
    std::optional<int> default_l;
    std::optional<std::string> default_format;
};

std::string config_path();             // resolved path, maybe nonexistent
Config load_config();                  // missing file yields an empty config
Config parse_config_text(const std::string& text, const std::string& origin);

} // namespace hecke::cli
