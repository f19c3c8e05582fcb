#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "blaschke/engines.hpp"

namespace blaschke::cli {

enum class Command { coeffs, norms, regions, predict, scaling, weyl };

/// Everything a run needs, as given on the command line or in a config file.
/// Strings are parsed and validated by run().
struct RunConfig {
  Command command = Command::coeffs;
  std::string lambda = "1/2";
  std::optional<long> n;
  /// "a:b", a geometric grid a, 2a, ..., b.
  std::optional<std::string> grid;
  /// Norm exponents: rationals, decimals or "inf".
  std::vector<std::string> p_list;
  std::optional<long> kmax;
  /// Single coefficient for `coeffs`, through the precision-controlled route.
  std::optional<long> k;
  /// Prediction range for `predict`; defaults to the Airy window around α₀⁻¹n.
  std::optional<long> k_first;
  std::optional<long> k_last;
  /// Region split α for `regions`/`norms`; defaults to α₀/2.
  std::optional<std::string> alpha;
  std::string engine = "exact";
  long j = 1;
  std::optional<std::filesystem::path> output_dir;
  bool emit_svg = false;
  /// Overrides PrecisionPolicy::max_bits (BLASCHKE_MAX_BITS).
  std::optional<long> max_bits;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitCompute = 3;
inline constexpr int kExitIo = 4;

/// Runs one command. CSV goes to `out` when no output_dir is set, otherwise
/// to files in output_dir. Diagnostics go to `err`. Returns the exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Header, rows and `#` footer lines of one CSV file.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> footer;
};

/// "%.17g"
std::string format_double(double x);

void write_csv(const Table& table, std::ostream& out);
/// Throws IoError on an empty table or an unwritable path.
void emit_csv(const Table& table, const std::filesystem::path& path);

/// Reads a `k,value,abs_error,engine` table back into a series.
CoefficientSeries read_coeffs_csv(const std::filesystem::path& path, const BlaschkeParams& params);

/// Parses BLASCHKE_MAX_BITS; nullopt when unset. Throws DomainError when malformed.
std::optional<long> max_bits_from_env();

}  // namespace blaschke::cli
