#pragma once
// JSON encoding of arrangements. Coordinate lists are emitted sorted by
// (row, col) so output is canonical and diffable.

#include <string>

#include <json.hpp>

#include "frogs/crowned.hpp"
#include "frogs/hatted.hpp"

namespace frogs {

using nlohmann::json;

inline json mask_to_json(Mask m, int k) {
  json arr = json::array();
  for (int b = 0; b < 2 * k; ++b)
    if (m >> b & 1) {
      Square s = square_from_bit(b, k);
      arr.push_back(json::array({s.r, s.c}));
    }
  return arr;
}

inline Mask mask_from_json(const json& arr, int k) {
  Mask m = 0;
  for (const auto& pair : arr) {
    Square s{pair.at(0).get<int>(), pair.at(1).get<int>()};
    check_square(s, k);
    m |= square_mask(s, k);
  }
  return m;
}

inline json to_json(const HattedArrangement& a) {
  return json{{"k", a.k}, {"F", mask_to_json(a.F, a.k)}, {"H", mask_to_json(a.H, a.k)}};
}

inline HattedArrangement hatted_from_json(const json& j) {
  int k = j.at("k").get<int>();
  return {k, mask_from_json(j.at("F"), k), mask_from_json(j.at("H"), k)};
}

inline json to_json(const CrownedArrangement& cr) {
  return json{{"k", cr.k},
              {"F", mask_to_json(cr.F, cr.k)},
              {"H", mask_to_json(cr.H, cr.k)},
              {"A", mask_to_json(cr.A, cr.k)},
              {"crown", json::array({cr.crown.r, cr.crown.c})},
              {"x", cr.agitated ? "agitated" : "settled"}};
}

inline CrownedArrangement crowned_from_json(const json& j) {
  int k = j.at("k").get<int>();
  std::string x = j.at("x").get<std::string>();
  if (x != "agitated" && x != "settled")
    throw std::invalid_argument("crowned_from_json: bad flag " + x);
  return {k,
          mask_from_json(j.at("F"), k),
          mask_from_json(j.at("H"), k),
          mask_from_json(j.at("A"), k),
          {j.at("crown").at(0).get<int>(), j.at("crown").at(1).get<int>()},
          x == "agitated"};
}

}  // namespace frogs
