#include "commands.hpp"

#include <span>
#include <sstream>

#include "iwkit/errors.hpp"
#include "iwkit/iwasawa_algebra.hpp"

namespace iwkit::cli {

namespace {

std::string opt_text(const std::optional<long>& v, const char* none) {
  return v ? std::to_string(*v) : std::string(none);
}

Json opt_json(const std::optional<long>& v) { return v ? Json(*v) : Json(nullptr); }

// CSV cells never contain commas here except series text, which uses spaces.
std::string csv_row(std::span<const std::string> cells) {
  std::string out;
  bool first = true;
  for (const auto& c : cells) {
    if (!first) out += ',';
    out += c;
    first = false;
  }
  return out + '\n';
}

std::string csv_row(std::initializer_list<std::string> cells) {
  return csv_row(std::span<const std::string>(cells.begin(), cells.size()));
}

}  // namespace

Output run_wprep(const Json& input, const Config& cfg) {
  const SeriesRing ring = cfg.ring();
  const IwasawaSeries f = generator_from_json(input, ring);
  const WeierstrassFactorization w = weierstrass_prepare(f);
  const IwasawaSeries residual = w.reconstruct() - f.with_precision(w.reconstruct().precision());

  Output out;
  out.csv = csv_row({"field", "value"});
  out.csv += csv_row({"mu", std::to_string(w.mu)});
  out.csv += csv_row({"lambda", std::to_string(w.lambda)});
  out.csv += csv_row({"distinguished", series_to_text(w.distinguished)});
  out.csv += csv_row({"unit", series_to_text(w.unit)});
  out.csv += csv_row({"residual_valuation", std::to_string(residual.valuation())});

  out.json["mu"] = w.mu;
  out.json["lambda"] = w.lambda;
  out.json["distinguished"] = series_to_json(w.distinguished);
  out.json["unit"] = series_to_json(w.unit);
  out.json["residual_valuation"] = residual.valuation();
  return out;
}

Output run_tower(const Json& input, const Config& cfg) {
  const ElementaryModule m = module_from_json(input, cfg.ring(), cfg.margin);
  const TowerReport r = tower_report(m, cfg.n_max, cfg.margin);

  Output out;
  out.csv = "# lambda=" + std::to_string(r.lambda) + " mu=" + std::to_string(r.mu) +
            " stabilization_level=" + opt_text(r.stabilization_level, "none") + "\n";
  out.csv += csv_row({"n", "rank", "length", "nabla_brute", "nabla_closed", "match"});
  Json levels = Json::array();
  bool any_defined = false;
  for (const auto& lv : r.levels) {
    any_defined = any_defined || lv.nabla.has_value();
    out.csv += csv_row({std::to_string(lv.n), std::to_string(lv.zp_rank), std::to_string(lv.finite_length),
                        opt_text(lv.nabla, "undefined"), std::to_string(lv.closed_form), lv.matches ? "1" : "0"});
    Json l;
    l["n"] = lv.n;
    l["rank"] = lv.zp_rank;
    l["length"] = lv.finite_length;
    l["nabla_brute"] = opt_json(lv.nabla);
    l["nabla_closed"] = lv.closed_form;
    l["match"] = lv.matches;
    levels.push_back(std::move(l));
  }
  out.json["lambda"] = r.lambda;
  out.json["mu"] = r.mu;
  out.json["stabilization_level"] = opt_json(r.stabilization_level);
  out.json["levels"] = std::move(levels);
  if (r.total_lengths) {
    out.json["total_lengths"] = *r.total_lengths;
    out.json["finite_difference_law"] = *r.finite_difference_law;
    out.csv.insert(0, std::string("# finite tower, nabla_n = s_n - s_{n-1}: ") +
                          (*r.finite_difference_law ? "holds" : "fails") + "\n");
  }
  if (!any_defined) out.exit_code = kUndefined;
  return out;
}

Output run_growth(const Json& input, const Config& cfg) {
  const Scenario sc = scenario_from_json(input, cfg.ring(), cfg.margin);
  const GrowthReport r = synthetic_tower_verify(sc.selmer, sc.shape, cfg.n_max, sc.n0, cfg.margin);
  if (sc.expected && sc.expected->size() != static_cast<std::size_t>(cfg.n_max)) {
    throw InputError("expected increments must list n = 1.." + std::to_string(cfg.n_max));
  }

  Output out;
  out.csv = "# lambda=" + std::to_string(r.lambda) + " mu=" + std::to_string(r.mu) + " n0=" + std::to_string(r.n0) +
            " stabilization_level=" + opt_text(r.stabilization_level, "none") +
            " minimal_n0=" + opt_text(r.minimal_n0, "none") + "\n";
  std::vector<std::string> header{"n", "s_n", "observed", "predicted", "match"};
  if (sc.expected) header.emplace_back("expected");
  out.csv += csv_row(header);
  Json levels = Json::array();
  bool any_increment = false;
  bool expected_ok = true;
  for (const auto& lv : r.levels) {
    const std::optional<long>& s = lv.sha_length;
    std::vector<std::string> row{std::to_string(lv.n), opt_text(s, "inf"), opt_text(lv.increment, "-"),
                                 opt_text(lv.predicted, "-"), lv.n == 0 ? "-" : (lv.matches ? "1" : "0")};
    if (sc.expected) {
      row.push_back(lv.n == 0 ? "-" : std::to_string((*sc.expected)[static_cast<std::size_t>(lv.n - 1)]));
    }
    out.csv += csv_row(row);
    Json l;
    l["n"] = lv.n;
    l["s_n"] = opt_json(s);
    l["observed"] = opt_json(lv.increment);
    l["predicted"] = opt_json(lv.predicted);
    l["match"] = lv.matches;
    levels.push_back(std::move(l));
    if (lv.n >= 1) {
      any_increment = any_increment || lv.increment.has_value();
      if (sc.expected) {
        expected_ok = expected_ok && lv.increment == std::optional<long>((*sc.expected)[static_cast<std::size_t>(lv.n - 1)]);
      }
    }
  }
  out.json["lambda"] = r.lambda;
  out.json["mu"] = r.mu;
  out.json["n0"] = r.n0;
  out.json["stabilization_level"] = opt_json(r.stabilization_level);
  out.json["minimal_n0"] = opt_json(r.minimal_n0);
  out.json["holds_past_n0"] = r.holds_past_n0;
  out.json["non_finite_levels"] = r.non_finite_levels;
  if (sc.expected) out.json["expected_match"] = expected_ok;
  out.json["levels"] = std::move(levels);

  if (!any_increment) {
    out.exit_code = kUndefined;
  } else if (!r.stabilization_level || !expected_ok) {
    out.exit_code = kMismatch;
  }
  return out;
}

Output run_logmatrix(const Json& input, const Config& cfg, const LogmatrixOptions& opts) {
  const FrobeniusData f = frobenius_from_json(input, cfg.ring());
  const LogMatrix h = h_n(f, opts.n);
  Output out;
  out.csv = csv_row({"object", "key", "value"});
  out.csv += csv_row({"H", "denom_exponent", std::to_string(h.denom_exponent())});
  Json entries = Json::array();
  for (std::size_t r = 0; r < h.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < h.dim(); ++c) {
      out.csv += csv_row({"H", std::to_string(r + 1) + " " + std::to_string(c + 1), series_to_text(h(r, c))});
      row.push_back(series_to_json(h(r, c))["coeffs"]);
    }
    entries.push_back(std::move(row));
  }
  out.json["n"] = opts.n;
  out.json["g"] = f.g();
  out.json["denom_exponent"] = h.denom_exponent();
  out.json["H"] = std::move(entries);

  if (opts.minors) {
    const MinorTable t = minors(f, opts.n);
    for (const auto& [key, v] : t.values) {
      auto spaced = [](const IndexSet& s) {
        std::string o;
        for (std::size_t i = 0; i < s.size(); ++i) o += (i ? " " : "") + std::to_string(s[i]);
        return o;
      };
      out.csv += csv_row({"minor", spaced(key.first) + " | " + spaced(key.second), series_to_text(v)});
    }
    out.json["minors"] = minor_table_to_json(t)["minors"];
  }

  if (opts.col_values) {
    const int theta = opts.theta_level.value_or(opts.n);
    const auto cols = col_values_from_json(*opts.col_values, cfg.ring(), f.g());
    const CharacterCondition cond = condition_character(f, opts.n, cols, theta, cfg.margin);
    std::string coeffs;
    for (std::size_t i = 0; i < cond.value.coeffs().size(); ++i) {
      coeffs += (i ? " " : "") + balanced_decimal(cond.value.modulus(), cond.value.coeffs()[i]);
    }
    out.csv += csv_row({"condition", "theta_level", std::to_string(theta)});
    out.csv += csv_row({"condition", "status",
                        std::string(cond.nonzero ? "nonzero" : "zero") + " min_val=" + std::to_string(cond.min_valuation)});
    out.csv += csv_row({"condition", "value", coeffs.empty() ? "0" : coeffs});
    Json c;
    c["theta_level"] = theta;
    c["nonzero"] = cond.nonzero;
    c["min_valuation"] = cond.min_valuation;
    c["truncated"] = cond.value.truncated();
    Json vals = Json::array();
    for (u64 x : cond.value.coeffs()) vals.push_back(balanced_decimal(cond.value.modulus(), x));
    c["value"] = std::move(vals);
    out.json["condition"] = std::move(c);
  } else if (opts.theta_level) {
    throw InputError("--theta-level needs --col");
  }
  return out;
}

Output run_rksolve(const std::vector<long>& values, bool from_ranks, const Config& cfg) {
  const std::vector<long> e = from_ranks ? ledger_from_ranks(cfg.prime, values) : values;
  const auto levels = rk_solver(e);
  Output out;
  out.csv = csv_row({"k", "e", "a", "r_plus", "r_minus"});
  Json arr = Json::array();
  for (const auto& lv : levels) {
    Json pairs = Json::array();
    for (const auto& [rp, rm] : lv.pairs) {
      out.csv += csv_row({std::to_string(lv.k), std::to_string(lv.e), std::to_string(lv.a), std::to_string(rp),
                          std::to_string(rm)});
      pairs.push_back(Json::array({rp, rm}));
    }
    Json l;
    l["k"] = lv.k;
    l["e"] = lv.e;
    l["a"] = lv.a;
    l["count"] = lv.pairs.size();
    l["pairs"] = std::move(pairs);
    arr.push_back(std::move(l));
  }
  out.json["e"] = e;
  out.json["levels"] = std::move(arr);
  return out;
}

}  // namespace iwkit::cli
