#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "iwkit/coleman.hpp"
#include "iwkit/config.hpp"
#include "iwkit/growth.hpp"
#include "iwkit/lambda_modules.hpp"

namespace iwkit {

// Key order is insertion order, so emitted documents are stable.
using Json = nlohmann::ordered_json;

// Throws InputError with the parser's message.
Json parse_json_text(std::string_view text);

// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

// Representative in (-p^N/2, p^N/2], as decimal.
std::string balanced_decimal(const Modulus& mod, u64 residue);
// Balanced coefficients separated by spaces; "0" for the zero series.
std::string series_to_text(const IwasawaSeries& f);

// {prime, precision, coeffs: [decimal strings]}.
Json series_to_json(const IwasawaSeries& f);

// A generator is a coefficient array, {"coeffs": [...]}, {"phi": c or [c...]},
// {"p_power": m}, {"product": [generator...]}, or an object combining several
// of these keys, read as their product. Numbers may be JSON integers or
// decimal strings. Any "prime"/"precision" present must match the ring.
IwasawaSeries generator_from_json(const Json& j, const SeriesRing& ring);

// {generators: [...], finite_part?: [[...]]}.
ElementaryModule module_from_json(const Json& j, const SeriesRing& ring, int margin = kDefaultMargin);

// {g, matrix: [[...]]}; the matrix is 2g x 2g.
FrobeniusData frobenius_from_json(const Json& j, const SeriesRing& ring);

// Array in index_sets(g) order, or an object keyed by "1,3"-style index sets
// (missing keys read as 0).
std::vector<IwasawaSeries> col_values_from_json(const Json& j, const SeriesRing& ring, int g);

struct Scenario {
  ElementaryModule selmer;
  MWShape shape;
  std::optional<int> n0;
  std::optional<std::vector<long>> expected;  // increments for n = 1..n_max
};

// {selmer: module, mw_shape: [c...], n_max?, n0?, expected?}.
Scenario scenario_from_json(const Json& j, const SeriesRing& ring, int margin = kDefaultMargin);

// "1,3".
std::string index_key(const IndexSet& s);
// {"1|1": {...series...}, ...} keyed "I|J" in lexicographic (I, J) order.
Json minor_table_to_json(const MinorTable& t);

// Copies prime, precision, degree_cap, n_max, margin and format from j when
// present. For module and scenario files the prime may also sit under
// "selmer".
void apply_config_json(Config& cfg, const Json& j);
Json config_to_json(const Config& cfg);

}  // namespace iwkit
