#include "iwkit/json_io.hpp"

#include <cstdio>

#include "iwkit/errors.hpp"
#include "iwkit/iwasawa_algebra.hpp"

namespace iwkit {

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

std::string fnv1a_hex(std::string_view bytes) {
  u64 h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string balanced_decimal(const Modulus& mod, u64 residue) {
  if (residue > mod.value() / 2) return "-" + std::to_string(mod.value() - residue);
  return std::to_string(residue);
}

std::string series_to_text(const IwasawaSeries& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= f.degree(); ++i) {
    if (i) out += ' ';
    out += balanced_decimal(f.modulus(), f.residue(i));
  }
  return out;
}

Json series_to_json(const IwasawaSeries& f) {
  Json coeffs = Json::array();
  for (int i = 0; i <= f.degree(); ++i) coeffs.push_back(balanced_decimal(f.modulus(), f.residue(i)));
  Json j;
  j["prime"] = f.prime();
  j["precision"] = f.precision();
  j["coeffs"] = std::move(coeffs);
  return j;
}

namespace {

u64 residue_from(const Json& v, const Modulus& mod) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return mod.reduce_unsigned(v.get<u64>());
    return mod.reduce(v.get<i64>());
  }
  if (v.is_string()) return mod.parse_decimal(v.get<std::string>());
  throw InputError("expected an integer or a decimal string, got " + v.dump());
}

int int_from(const Json& v, const char* what) {
  if (!v.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  const i64 x = v.get<i64>();
  if (x < 0 || x > 1'000'000) throw InputError(std::string(what) + " out of range");
  return static_cast<int>(x);
}

void check_ring_keys(const Json& j, const SeriesRing& ring) {
  if (j.contains("prime") && !(j["prime"].is_number_unsigned() && j["prime"].get<u64>() == ring.modulus.prime())) {
    throw InputError("series prime " + j["prime"].dump() + " does not match " + std::to_string(ring.modulus.prime()));
  }
  if (j.contains("precision") &&
      !(j["precision"].is_number_integer() && j["precision"].get<i64>() == ring.modulus.precision())) {
    throw InputError("series precision " + j["precision"].dump() + " does not match " +
                     std::to_string(ring.modulus.precision()));
  }
}

IwasawaSeries coeffs_from(const Json& arr, const SeriesRing& ring) {
  if (!arr.is_array()) throw InputError("coefficients must be an array");
  if (arr.size() > static_cast<std::size_t>(ring.degree_cap) + 1) {
    throw DegreeOverflow("series with " + std::to_string(arr.size()) + " coefficients",
                         static_cast<int>(arr.size()) - 1);
  }
  std::vector<u64> r;
  for (const auto& v : arr) r.push_back(residue_from(v, ring.modulus));
  return IwasawaSeries(ring, std::move(r));
}

ResidueMatrix matrix_from(const Json& rows, const Modulus& mod) {
  if (!rows.is_array() || rows.empty() || !rows.front().is_array()) throw InputError("matrix must be an array of rows");
  ResidueMatrix m(mod, rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array() || rows[r].size() != m.cols()) throw InputError("matrix rows are ragged");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = residue_from(rows[r][c], mod);
  }
  return m;
}

}  // namespace

IwasawaSeries generator_from_json(const Json& j, const SeriesRing& ring) {
  if (j.is_array()) return coeffs_from(j, ring);
  if (!j.is_object()) throw InputError("generator must be an array or an object");
  check_ring_keys(j, ring);
  IwasawaSeries acc = IwasawaSeries::constant(ring, 1);
  bool any = false;
  if (j.contains("coeffs")) {
    acc = acc.multiply_exact(coeffs_from(j["coeffs"], ring));
    any = true;
  }
  if (j.contains("phi")) {
    const Json& ph = j["phi"];
    if (ph.is_array()) {
      for (const auto& c : ph) acc = acc.multiply_exact(phi(ring, int_from(c, "phi level")));
    } else {
      acc = acc.multiply_exact(phi(ring, int_from(ph, "phi level")));
    }
    any = true;
  }
  if (j.contains("p_power")) {
    const int m = int_from(j["p_power"], "p_power");
    acc = m >= ring.modulus.precision() ? IwasawaSeries(ring) : acc.scaled(ring.modulus.power(m));
    any = true;
  }
  if (j.contains("product")) {
    if (!j["product"].is_array()) throw InputError("product must be an array of generators");
    for (const auto& g : j["product"]) acc = acc.multiply_exact(generator_from_json(g, ring));
    any = true;
  }
  if (!any) throw InputError("generator object needs one of coeffs, phi, p_power, product");
  return acc;
}

ElementaryModule module_from_json(const Json& j, const SeriesRing& ring, int margin) {
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array()) {
    throw InputError("module must be an object with a generators array");
  }
  check_ring_keys(j, ring);
  std::vector<IwasawaSeries> gens;
  for (const auto& g : j["generators"]) gens.push_back(generator_from_json(g, ring));
  ElementaryModule m(ring, std::move(gens));
  if (j.contains("finite_part")) m = m.with_finite_part(matrix_from(j["finite_part"], ring.modulus), margin);
  return m;
}

FrobeniusData frobenius_from_json(const Json& j, const SeriesRing& ring) {
  if (!j.is_object() || !j.contains("g") || !j.contains("matrix")) throw InputError("frobenius needs g and matrix");
  check_ring_keys(j, ring);
  return FrobeniusData(ring, int_from(j["g"], "g"), matrix_from(j["matrix"], ring.modulus));
}

std::vector<IwasawaSeries> col_values_from_json(const Json& j, const SeriesRing& ring, int g) {
  const auto sets = index_sets(g);
  std::vector<IwasawaSeries> out;
  if (j.is_array()) {
    if (j.size() != sets.size()) {
      throw InputError("col values: expected " + std::to_string(sets.size()) + " entries");
    }
    for (const auto& v : j) out.push_back(v.is_number() || v.is_string() ? IwasawaSeries(ring, {residue_from(v, ring.modulus)})
                                                                        : generator_from_json(v, ring));
    return out;
  }
  if (!j.is_object()) throw InputError("col values must be an array or an object");
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (const auto& s : sets) known = known || index_key(s) == key;
    if (!known) throw InputError("col values: unknown index set '" + key + "'");
  }
  for (const auto& s : sets) {
    const std::string key = index_key(s);
    if (!j.contains(key)) {
      out.emplace_back(ring);
      continue;
    }
    const Json& v = j[key];
    out.push_back(v.is_number() || v.is_string() ? IwasawaSeries(ring, {residue_from(v, ring.modulus)})
                                                 : generator_from_json(v, ring));
  }
  return out;
}

Scenario scenario_from_json(const Json& j, const SeriesRing& ring, int margin) {
  if (!j.is_object() || !j.contains("selmer")) throw InputError("scenario needs a selmer module");
  Scenario s{module_from_json(j["selmer"], ring, margin), {}, std::nullopt, std::nullopt};
  if (j.contains("mw_shape")) {
    if (!j["mw_shape"].is_array()) throw InputError("mw_shape must be an array of levels");
    for (const auto& c : j["mw_shape"]) s.shape.c_list.push_back(int_from(c, "mw_shape level"));
  }
  if (j.contains("n0")) s.n0 = int_from(j["n0"], "n0");
  if (j.contains("expected")) {
    std::vector<long> e;
    for (const auto& v : j["expected"]) {
      if (!v.is_number_integer()) throw InputError("expected increments must be integers");
      e.push_back(v.get<long>());
    }
    s.expected = std::move(e);
  }
  return s;
}

std::string index_key(const IndexSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

Json minor_table_to_json(const MinorTable& t) {
  Json values = Json::object();
  for (const auto& [key, series] : t.values) {
    values[index_key(key.first) + "|" + index_key(key.second)] = series_to_json(series)["coeffs"];
  }
  Json j;
  j["n"] = t.n;
  j["g"] = t.g;
  j["minors"] = std::move(values);
  return j;
}

void apply_config_json(Config& cfg, const Json& j) {
  if (!j.is_object()) return;
  auto get_int = [&](const char* key) -> std::optional<int> {
    if (!j.contains(key)) return std::nullopt;
    if (!j[key].is_number_integer()) throw InputError(std::string(key) + " must be an integer");
    return j[key].get<int>();
  };
  if (j.contains("prime")) {
    if (!j["prime"].is_number_unsigned()) throw InputError("prime must be a positive integer");
    cfg.prime = j["prime"].get<u64>();
  } else if (j.contains("selmer") && j["selmer"].is_object() && j["selmer"].contains("prime")) {
    if (!j["selmer"]["prime"].is_number_unsigned()) throw InputError("prime must be a positive integer");
    cfg.prime = j["selmer"]["prime"].get<u64>();
  }
  if (auto v = get_int("precision")) cfg.precision = *v;
  if (auto v = get_int("degree_cap")) cfg.degree_cap = *v;
  if (auto v = get_int("n_max")) cfg.n_max = *v;
  if (auto v = get_int("margin")) cfg.margin = *v;
  if (j.contains("format") && !j["format"].is_string()) throw InputError("format must be a string");
  if (j.contains("format")) cfg.format = parse_format(j["format"].get<std::string>());
}

Json config_to_json(const Config& cfg) {
  Json j;
  j["prime"] = cfg.prime;
  j["precision"] = cfg.precision;
  j["degree_cap"] = cfg.effective_degree_cap();
  j["n_max"] = cfg.n_max;
  j["margin"] = cfg.margin;
  j["format"] = format_name(cfg.format);
  return j;
}

}  // namespace iwkit
