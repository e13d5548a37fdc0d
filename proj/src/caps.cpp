#include "qtorder/caps.hpp"

#include <cstdlib>
#include <mutex>
#include <sstream>

#include "qtorder/errors.hpp"

namespace qtorder {

namespace {

Caps& storage() {
  static Caps instance = [] {
    const char* env = std::getenv("QTORDER_CAPS");
    return env ? parse_caps(env) : Caps{};
  }();
  return instance;
}

}  // namespace

const Caps& caps() { return storage(); }

void set_caps(const Caps& c) { storage() = c; }

Caps parse_caps(const std::string& text, Caps base) {
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "cap '" + item + "' lacks '='");
    std::string key = item.substr(0, eq);
    long long value = 0;
    try {
      std::size_t used = 0;
      value = std::stoll(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "cap '" + item + "' has a non-integer value");
    }
    if (value < 0) throw Error(ErrorCode::ParseError, "cap '" + key + "' must be non-negative");
    if (key == "word_length") base.word_length = value;
    else if (key == "reduction_steps") base.reduction_steps = value;
    else if (key == "t_height_exponent") base.t_height_exponent = value;
    else if (key == "free_ball_radius") base.free_ball_radius = static_cast<int>(value);
    else if (key == "modular_radius") base.modular_radius = static_cast<int>(value);
    else if (key == "embedding_radius") base.embedding_radius = static_cast<int>(value);
    else if (key == "magnus_degree") base.magnus_degree = static_cast<int>(value);
    else if (key == "orbit_horizon") base.orbit_horizon = static_cast<int>(value);
    else if (key == "window_k") base.window_k = value;
    else if (key == "lex_scan") base.lex_scan = value;
    else throw Error(ErrorCode::ParseError, "unknown cap '" + key + "'");
  }
  return base;
}

}  // namespace qtorder
