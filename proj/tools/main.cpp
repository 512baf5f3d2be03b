// iwkit command-line front end.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "commands.hpp"
#include "iwkit/errors.hpp"

namespace {

using iwkit::Config;
using iwkit::Json;
using namespace iwkit::cli;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw iwkit::InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct GlobalFlags {
  std::optional<unsigned long long> prime;
  std::optional<int> precision;
  std::optional<int> degree_cap;
  std::optional<int> n_max;
  std::optional<int> margin;
  std::optional<std::string> format;
  bool no_timestamp = false;
  std::string out_path;
};

// defaults < IWKIT_CONFIG < input file < flags
Config resolve_config(const GlobalFlags& g, const Json* input) {
  Config cfg;
  if (const char* env = std::getenv("IWKIT_CONFIG"); env && *env) {
    iwkit::apply_config_json(cfg, iwkit::parse_json_text(read_file(env)));
  }
  if (input) iwkit::apply_config_json(cfg, *input);
  if (g.prime) cfg.prime = *g.prime;
  if (g.precision) cfg.precision = *g.precision;
  if (g.degree_cap) cfg.degree_cap = *g.degree_cap;
  if (g.n_max) cfg.n_max = *g.n_max;
  if (g.margin) cfg.margin = *g.margin;
  if (g.format) cfg.format = iwkit::parse_format(*g.format);
  cfg.validate();
  return cfg;
}

std::string render(const std::string& command, const Config& cfg, const std::string& digest, const Output& out,
                   std::optional<double> elapsed_ms) {
  Json manifest;
  manifest["command"] = command;
  manifest["version"] = IWKIT_VERSION;
  manifest["config"] = iwkit::config_to_json(cfg);
  manifest["input_digest"] = digest;
  if (elapsed_ms) manifest["elapsed_ms"] = *elapsed_ms;

  if (cfg.format == iwkit::OutputFormat::json) {
    Json doc;
    doc["manifest"] = std::move(manifest);
    doc["report"] = out.json;
    return doc.dump(2) + "\n";
  }
  std::string head;
  for (const auto& [k, v] : manifest.items()) head += "# " + k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  return head + out.csv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"iwkit: Iwasawa-module towers, Kobayashi ranks and growth formulas"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", IWKIT_VERSION);

  GlobalFlags g;
  app.add_option("--prime", g.prime, "odd prime p");
  app.add_option("--precision", g.precision, "p-adic precision N");
  app.add_option("--degree-cap", g.degree_cap, "series degree cap D (default p^n_max + 8)");
  app.add_option("--n-max", g.n_max, "top tower level");
  app.add_option("--margin", g.margin, "rank/length safety margin");
  app.add_option("--format", g.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--no-timestamp", g.no_timestamp, "omit elapsed time from the manifest");
  app.add_option("--out", g.out_path, "write the report to PATH instead of stdout");

  std::string input_path;
  auto* wprep = app.add_subcommand("wprep", "Weierstrass preparation of a series");
  wprep->add_option("file", input_path, "series JSON")->required();

  auto* tower = app.add_subcommand("tower", "Kobayashi ranks of an elementary module tower");
  tower->add_option("file", input_path, "module JSON")->required();

  auto* growth = app.add_subcommand("growth", "synthetic Tate-Shafarevich growth against the increment formula");
  growth->add_option("file", input_path, "scenario JSON")->required();

  LogmatrixOptions lm;
  std::string col_path;
  std::optional<int> theta;
  auto* logm = app.add_subcommand("logmatrix", "logarithmic matrix H_{p,n}, minors and the character condition");
  logm->add_option("file", input_path, "Frobenius JSON")->required();
  logm->add_option("--n", lm.n, "level n >= 1")->check(CLI::PositiveNumber);
  logm->add_flag("--minors", lm.minors, "print all (I,J)-minors");
  logm->add_option("--theta-level", theta, "evaluation level m (default n)");
  logm->add_option("--col", col_path, "column values JSON");

  std::vector<long> values;
  bool from_ranks = false;
  auto* rk = app.add_subcommand("rksolve", "admissible r_k^+/- for an e-sequence");
  rk->add_option("values", values, "e_0 e_1 ... (or ranks with --ranks)")->required();
  rk->add_flag("--ranks", from_ranks, "values are ranks over the layers; derive e first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    std::string command = app.get_subcommands().front()->get_name();
    std::string raw;
    Json input;
    const bool has_file = command != "rksolve";
    if (has_file) {
      raw = read_file(input_path);
      input = iwkit::parse_json_text(raw);
    } else {
      raw = from_ranks ? "ranks:" : "e:";
      for (long v : values) raw += " " + std::to_string(v);
    }
    const Config cfg = resolve_config(g, has_file ? &input : nullptr);

    Output out;
    if (command == "wprep") {
      out = run_wprep(input, cfg);
    } else if (command == "tower") {
      out = run_tower(input, cfg);
    } else if (command == "growth") {
      out = run_growth(input, cfg);
    } else if (command == "logmatrix") {
      lm.theta_level = theta;
      if (!col_path.empty()) {
        const std::string col_raw = read_file(col_path);
        raw += col_raw;
        lm.col_values = iwkit::parse_json_text(col_raw);
      }
      out = run_logmatrix(input, cfg, lm);
    } else {
      out = run_rksolve(values, from_ranks, cfg);
    }

    std::optional<double> elapsed;
    if (!g.no_timestamp) {
      elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    const std::string text = render(command, cfg, iwkit::fnv1a_hex(raw), out, elapsed);
    if (g.out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(g.out_path, std::ios::binary);
      if (!f) throw iwkit::InputError("cannot write '" + g.out_path + "'");
      f << text;
    }
    if (out.exit_code == kUndefined) std::cerr << "iwkit: some levels are undefined (see report)\n";
    if (out.exit_code == kMismatch) std::cerr << "iwkit: observed values disagree with the prediction (see report)\n";
    return out.exit_code;
  } catch (const iwkit::InputError& e) {
    std::cerr << "iwkit: input error: " << e.what() << "\n";
    return kInputError;
  } catch (const iwkit::PrecisionError& e) {
    std::cerr << "iwkit: precision exhausted: " << e.what() << "\n";
    return kPrecisionError;
  } catch (const iwkit::UndefinedResult& e) {
    std::cerr << "iwkit: undefined: " << e.what() << "\n";
    return kUndefined;
  } catch (const std::exception& e) {
    std::cerr << "iwkit: " << e.what() << "\n";
    return 1;
  }
}
