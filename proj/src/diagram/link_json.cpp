#include "../json_util.hpp"
#include "kirby4/diagram.hpp"

namespace kirby4 {

using detail::Json;

FramedLink parse_framed_link(std::string_view text) {
  const Json doc = detail::parse_json(text);
  if (!doc.is_object()) throw Error(ErrorCode::MalformedInput, "framed link must be a JSON object");

  PDCode pd;
  const auto pd_it = doc.find("pd");
  if (pd_it == doc.end() || !pd_it->is_array()) {
    throw Error(ErrorCode::MalformedInput, "\"pd\" must be an array of 4-tuples");
  }
  for (const auto& t : *pd_it) {
    if (!t.is_array() || t.size() != 4) {
      throw Error(ErrorCode::MalformedInput, "every crossing must be a 4-element array");
    }
    std::array<long, 4> c{};
    for (int p = 0; p < 4; ++p) {
      if (!t[p].is_number_integer()) throw Error(ErrorCode::MalformedInput, "arc labels must be integers");
      c[p] = t[p].get<long>();
    }
    pd.crossings.push_back(c);
  }

  if (const auto it = doc.find("unknots"); it != doc.end()) {
    if (!it->is_number_integer() || it->get<long>() < 0) {
      throw Error(ErrorCode::MalformedInput, "\"unknots\" must be a non-negative integer");
    }
    pd.unknots = it->get<std::size_t>();
  }

  const auto fr_it = doc.find("framings");
  if (fr_it == doc.end() || !fr_it->is_array()) {
    throw Error(ErrorCode::MalformedInput, "\"framings\" must be an array of integers");
  }
  std::vector<Integer> framings;
  for (const auto& f : *fr_it) framings.push_back(detail::integer_from_json(f, "framing"));

  std::string name;
  if (const auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw Error(ErrorCode::MalformedInput, "\"name\" must be a string");
    name = it->get<std::string>();
  }
  return FramedLink::from_pd(std::move(pd), std::move(framings), std::move(name));
}

std::string to_json(const FramedLink& link) {
  Json doc;
  Json pd = Json::array();
  for (const auto& c : link.pd().crossings) pd.push_back(Json(c));
  doc["pd"] = std::move(pd);
  Json framings = Json::array();
  for (const auto& f : link.framings()) framings.push_back(detail::integer_to_json(f));
  doc["framings"] = std::move(framings);
  if (link.pd().unknots) doc["unknots"] = link.pd().unknots;
  if (!link.name().empty()) doc["name"] = link.name();
  return doc.dump();
}

}  // namespace kirby4
