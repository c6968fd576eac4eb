// Indented JSON with arrays of scalars kept on one line.

#ifndef LRC_JSON_TEXT_HPP
#define LRC_JSON_TEXT_HPP

#include <algorithm>
#include <string>

#include "json.hpp"

namespace lrc::detail {

inline void write_json(const nlohmann::ordered_json& j, std::string& s, int depth) {
  const std::string pad(2 * (depth + 1), ' '), close(2 * depth, ' ');
  if (j.is_object() && !j.empty()) {
    s += "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      s += (first ? "" : ",\n") + pad + nlohmann::ordered_json(key).dump() + ": ";
      write_json(value, s, depth + 1);
      first = false;
    }
    s += "\n" + close + "}";
  } else if (j.is_array() && !j.empty() &&
             std::any_of(j.begin(), j.end(), [](const auto& e) { return e.is_structured(); })) {
    s += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      s += (i ? ",\n" : "") + pad;
      write_json(j[i], s, depth + 1);
    }
    s += "\n" + close + "]";
  } else {
    s += j.dump(-1, ' ', false);
  }
}

inline std::string json_text(const nlohmann::ordered_json& j) {
  std::string s;
  write_json(j, s, 0);
  return s + "\n";
}

}  // namespace lrc::detail

#endif  // LRC_JSON_TEXT_HPP
