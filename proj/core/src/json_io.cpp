#include "genperm/json_io.hpp"

#include <stdexcept>

namespace genperm {

Json to_json(const SubsetCollection& collection) {
  Json j;
  j["n"] = collection.n();
  Json entries = Json::array();
  for (const auto& [subset, value] : collection.entries()) {
    Json members = Json::array();
    for (int i = 0; i < collection.n(); ++i) {
      if (subset & (1u << i)) members.push_back(i + 1);
    }
    entries.push_back(
        Json{{"subset", members}, {"value", rational_to_string(value)}});
  }
  j["entries"] = entries;
  return j;
}

SubsetCollection collection_from_json(const Json& j) {
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw std::invalid_argument("collection JSON: missing integer field 'n'");
  }
  const int n = j["n"].get<int>();
  SubsetCollection collection(n);
  if (!j.contains("entries") || !j["entries"].is_array()) {
    throw std::invalid_argument("collection JSON: missing array 'entries'");
  }
  for (const auto& entry : j["entries"]) {
    uint32_t mask = 0;
    for (const auto& member : entry.at("subset")) {
      const int i = member.get<int>();
      if (i < 1 || i > n) {
        throw std::invalid_argument(
            "collection JSON: subset member out of 1..n");
      }
      mask |= 1u << (i - 1);
    }
    const Rat value = parse_rational(entry.at("value").get<std::string>());
    collection.set(mask, collection.value(mask) + value);
  }
  return collection;
}

Json rational_vector_to_json(const std::vector<Rat>& v) {
  Json j = Json::array();
  for (const Rat& value : v) j.push_back(rational_to_string(value));
  return j;
}

std::vector<Rat> rational_vector_from_json(const Json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("vector JSON: expected an array");
  }
  std::vector<Rat> v;
  for (const auto& item : j) v.push_back(parse_rational(item.get<std::string>()));
  return v;
}

}  // namespace genperm
