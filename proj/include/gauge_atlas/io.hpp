#pragma once

// Manifold description files and JSON records for classes.  The file format
// is documented in docs/manifold-format.md.

#include <openssl/evp.h>

#include <array>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gauge_atlas/bundle_classes.hpp"
#include "gauge_atlas/cohomology_model.hpp"
#include "gauge_atlas/error.hpp"
#include "gauge_atlas/gauge_components.hpp"

namespace gauge_atlas::io {

using json = nlohmann::json;

inline std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorCode::io_error, "sha256 digest failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xf]);
  }
  return out;
}

namespace detail {

inline const json& require_field(const json& j, const std::string& field) {
  if (!j.is_object()) throw Error(ErrorCode::schema_error, "manifold record must be a JSON object");
  const auto it = j.find(field);
  if (it == j.end()) throw Error(ErrorCode::schema_error, "missing field '" + field + "'");
  return *it;
}

inline std::int64_t require_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw Error(ErrorCode::schema_error, "field '" + path + "' must be an integer");
  return j.get<std::int64_t>();
}

inline IntMatrix require_matrix(const json& j, const std::string& field, std::int64_t b1) {
  if (!j.is_array()) throw Error(ErrorCode::schema_error, "field '" + field + "' must be an array of rows");
  if (static_cast<std::int64_t>(j.size()) != b1)
    throw Error(ErrorCode::schema_error, "field '" + field + "' must have b1 = " + std::to_string(b1) + " rows");
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string row_path = field + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || static_cast<std::int64_t>(j[i].size()) != b1)
      throw Error(ErrorCode::schema_error, "field '" + row_path + "' must be a row of " + std::to_string(b1) + " integers");
    std::vector<std::int64_t> row;
    for (std::size_t k = 0; k < j[i].size(); ++k)
      row.push_back(require_int(j[i][k], row_path + "[" + std::to_string(k) + "]"));
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows);
}

}  // namespace detail

/// Builds the model from a parsed manifold record.
inline CohomologyModel load_manifold(const json& record) {
  const auto& name_field = detail::require_field(record, "name");
  if (!name_field.is_string()) throw Error(ErrorCode::schema_error, "field 'name' must be a string");
  const auto dimension = detail::require_int(detail::require_field(record, "dimension"), "dimension");
  const auto b1 = detail::require_int(detail::require_field(record, "b1"), "b1");
  if (b1 < 0) throw Error(ErrorCode::schema_error, "field 'b1' must be non-negative");
  std::string field;
  if (dimension == 3) {
    field = "cup12";
  } else if (dimension == 2) {
    field = "cup11";
  } else {
    throw Error(ErrorCode::invariant_violation, "dimension: only 2 and 3 are supported");
  }
  const auto pairing = detail::require_matrix(detail::require_field(record, field), field, b1);
  return CohomologyModel(name_field.get<std::string>(), static_cast<int>(dimension), pairing);
}

inline json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse_error, origin + ": " + e.what());
  }
}

inline CohomologyModel load_manifold_text(const std::string& text, const std::string& origin = "<string>") {
  return load_manifold(parse_json_text(text, origin));
}

struct LoadedManifold {
  CohomologyModel model;
  std::string path;
  std::string digest;
};

/// Reads and validates a manifold file; the digest is the SHA-256 of the
/// file bytes.
inline LoadedManifold parse_manifold_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot open manifold file '" + path + "'");
  std::ostringstream bytes;
  bytes << in.rdbuf();
  const std::string text = bytes.str();
  return {load_manifold(parse_json_text(text, path)), path, "sha256:" + sha256_hex(text)};
}

inline json manifold_record(const CohomologyModel& m) {
  return {{"name", m.name()},
          {"dimension", m.dimension()},
          {"b1", m.b1()},
          {m.dimension() == 3 ? "cup12" : "cup11", m.pairing().to_rows()}};
}

inline std::string ring_label(std::int64_t modulus) {
  return modulus == 0 ? "Z" : "Z_" + std::to_string(modulus);
}

inline json class_record(const CohClass& x) {
  return {{"degree", x.degree}, {"ring", ring_label(x.modulus)}, {"coefficients", x.coefficients}};
}

/// {coefficient, generator} for a multiple of the positive generator of H^4.
inline json q4_record(const std::optional<std::int64_t>& q4) {
  if (!q4) return nullptr;
  return {{"ring", "Z"}, {"generator", "e"}, {"coefficient", *q4}};
}

inline json bundle_record(const BundleClass& p) {
  json j = {{"r", p.r},
            {"manifold", base_name(p.base)},
            {"t2", class_record(p.t2)},
            {"t2_lift", p.t2_lift ? class_record(*p.t2_lift) : json(nullptr)},
            {"q4", q4_record(p.q4)},
            {"lift_type", std::string(to_string(lift_type(p)))}};
  return j;
}

/// eta over Z_r and deg in H^3(X) = Z.  `deg_sign` = -1 reports the degree in
/// the opposite orientation convention.
inline json gauge_record(const GaugeClass& g, int deg_sign = 1) {
  json j = {{"r", g.r}, {"eta", class_record(g.eta)}};
  if (g.deg)
    j["deg"] = {{"ring", "Z"}, {"value", deg_sign * *g.deg}};
  else
    j["deg"] = nullptr;
  return j;
}

inline json gauge_report_record(const GaugeReport& rep) {
  json j = {{"admissible", rep.admissible},
            {"in_identity_component", rep.in_identity_component},
            {"eta_trivial", rep.eta_trivial}};
  j["deg_divisible_by_r"] = rep.deg_divisible_by_r ? json(*rep.deg_divisible_by_r) : json(nullptr);
  return j;
}

/// Compact JSON with each element of a top-level array of objects on its own
/// line, so record lists are one record per line.
inline std::string render(const json& doc) {
  if (!doc.is_object()) return doc.dump();
  std::string out = "{";
  bool first = true;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    out += first ? "\n" : ",\n";
    first = false;
    out += "  " + json(it.key()).dump() + ": ";
    const auto& v = it.value();
    if (v.is_object() && !v.empty()) {
      out += "{";
      bool inner_first = true;
      for (auto jt = v.begin(); jt != v.end(); ++jt) {
        out += inner_first ? "\n" : ",\n";
        inner_first = false;
        const auto& w = jt.value();
        out += "    " + json(jt.key()).dump() + ": ";
        if (w.is_array() && !w.empty() && w.front().is_object()) {
          out += "[\n";
          for (std::size_t i = 0; i < w.size(); ++i)
            out += "      " + w[i].dump() + (i + 1 < w.size() ? ",\n" : "\n");
          out += "    ]";
        } else {
          out += w.dump();
        }
      }
      out += "\n  }";
    } else {
      out += v.dump();
    }
  }
  out += "\n}\n";
  return out;
}

}  // namespace gauge_atlas::io
