#include "iwkit/config.hpp"

#include "iwkit/errors.hpp"
#include "iwkit/iwasawa_algebra.hpp"

namespace iwkit {

std::string format_name(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw InputError("unknown output format '" + name + "' (expected csv or json)");
}

namespace {

// Presentations at level n_max are p^n_max square; keep them tractable.
constexpr long kMaxLevelDegree = 1L << 16;

bool level_fits(u64 p, int n) {
  long r = 1;
  for (int i = 0; i < n; ++i) {
    if (r > kMaxLevelDegree / static_cast<long>(p)) return false;
    r *= static_cast<long>(p);
  }
  return true;
}

}  // namespace

int Config::effective_degree_cap() const {
  if (degree_cap) return *degree_cap;
  if (!level_fits(prime, n_max)) throw InputError("p^n_max exceeds " + std::to_string(kMaxLevelDegree));
  return static_cast<int>(p_power(prime, n_max)) + 8;
}

void Config::validate() const {
  if (!is_odd_prime(prime)) throw InputError("prime must be an odd prime, got " + std::to_string(prime));
  if (n_max < 1) throw InputError("n_max must be >= 1");
  if (prime > (u64{1} << 16) || !level_fits(prime, n_max)) {
    throw InputError("p^n_max exceeds " + std::to_string(kMaxLevelDegree));
  }
  if (margin < 0) throw InputError("margin must be >= 0");
  if (precision <= margin) throw InputError("precision must exceed margin");
  (void)Modulus(prime, precision);  // range check on p^N
  const long needed = p_power(prime, n_max);
  if (effective_degree_cap() < needed) {
    throw InputError("degree cap " + std::to_string(effective_degree_cap()) + " is below p^n_max = " +
                     std::to_string(needed));
  }
}

SeriesRing Config::ring() const { return SeriesRing(prime, precision, effective_degree_cap()); }

}  // namespace iwkit
