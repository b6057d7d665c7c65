#pragma once

#include <string>

#include <json.hpp>

#include "kirby4/error.hpp"
#include "kirby4/integer.hpp"
#include "kirby4/matrix.hpp"

namespace kirby4::detail {

using Json = nlohmann::json;

inline Integer integer_from_json(const Json& j, const char* what) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  // Large values come back as decimal strings (see integer_to_json).
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    const std::size_t digits = s.size() - (!s.empty() && s[0] == '-');
    if (digits > 0 && s.find_first_not_of("0123456789", s.size() - digits) == std::string::npos) return Integer(s);
  }
  throw Error(ErrorCode::MalformedInput, std::string(what) + " must be an integer");
}

// Integers that do not fit in 62 bits are written as decimal strings so the
// output never contains floats.
inline Json integer_to_json(const Integer& v) {
  if (fits_int64(v)) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

inline Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json vector_to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

inline Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, std::string("JSON syntax error: ") + e.what());
  }
}

}  // namespace kirby4::detail
