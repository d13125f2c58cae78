#pragma once

// JSON form of a fibration ledger:
//
//   { "total_sign": int,
//     "germs": [ { "name": str, "phi": "p/q", "nbhd_sign": int, "count": int } ] }
//
// "count" defaults to 1 and "nbhd_sign" to 0. An entry with "unknown": true is
// the germ to solve for. An entry without "phi" whose name is a built-in germ
// takes the built-in phi and nbhd_sign.

#include <string>
#include <string_view>

#include <json.hpp>

#include "meyer/error.hpp"
#include "meyer/exactnum.hpp"
#include "meyer/localsig.hpp"

namespace meyer {

namespace detail {

inline BigInt json_integer(const nlohmann::json& j, const std::string& what) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw Error(Errc::parse, what + " must be an integer");
}

inline Rational json_rational(const nlohmann::json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(Errc::parse, what + " must be a \"p/q\" string or an integer");
}

}  // namespace detail

inline FibrationLedger parse_ledger_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse, std::string("ledger JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("total_sign") || !doc.contains("germs") || !doc["germs"].is_array())
    throw Error(Errc::parse, "ledger needs \"total_sign\" and a \"germs\" array");

  FibrationLedger ledger{detail::json_integer(doc["total_sign"], "total_sign"), {}};
  for (const auto& g : doc["germs"]) {
    if (!g.is_object() || !g.contains("name") || !g["name"].is_string())
      throw Error(Errc::parse, "each germ needs a \"name\" string");
    LedgerEntry e;
    e.name = g["name"].get<std::string>();
    e.count = g.contains("count") ? detail::json_integer(g["count"], "count") : BigInt(1);
    if (e.count < 0) throw Error(Errc::invalid_argument, "negative count for germ '" + e.name + "'");

    const bool unknown = g.value("unknown", false);
    if (unknown) {
      if (g.contains("phi")) throw Error(Errc::parse, "germ '" + e.name + "' is both unknown and has phi");
    } else if (g.contains("phi")) {
      e.phi = detail::json_rational(g["phi"], "phi of '" + e.name + "'");
    } else if (const auto* b = find_germ(e.name)) {
      e.phi = b->phi;
      e.nbhd_sign = b->nbhd_sign;
    } else {
      throw Error(Errc::parse, "germ '" + e.name + "' has no phi and is not built in");
    }
    if (g.contains("nbhd_sign")) e.nbhd_sign = detail::json_integer(g["nbhd_sign"], "nbhd_sign");
    ledger.germs.push_back(std::move(e));
  }
  return ledger;
}

inline std::string ledger_to_json(const FibrationLedger& ledger) {
  nlohmann::json doc;
  doc["total_sign"] = ledger.total_sign.str();
  doc["germs"] = nlohmann::json::array();
  for (const auto& e : ledger.germs) {
    nlohmann::json g{{"name", e.name}, {"nbhd_sign", e.nbhd_sign.str()}, {"count", e.count.str()}};
    if (e.phi) {
      g["phi"] = to_string(*e.phi);
    } else {
      g["unknown"] = true;
    }
    doc["germs"].push_back(std::move(g));
  }
  return doc.dump(2);
}

}  // namespace meyer
