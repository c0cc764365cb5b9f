#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace airycoef::cli {

enum class Command { RationalExample, PcfCoeffs, PcfMaclaurin, Validate, OracleCheck };
enum class Format { Text, Json, Latex };

inline constexpr unsigned kMaxOrder = 8;
inline constexpr unsigned kMaxTerms = 32;
inline constexpr unsigned kMinPrecision = 64;
inline constexpr const char* kCacheEnv = "AIRYCOEF_CACHE_DIR";

struct RunConfig {
  Command command = Command::RationalExample;
  unsigned order = 5;
  unsigned terms = 6;
  std::string coeff = "beta1";  // alphaN or betaN
  std::string mu = "10";
  std::string t = "1.2";
  std::string shift = "1";  // c in f0 = 1/(t + c)
  std::string f0;
  Format format = Format::Text;
  unsigned precision = 200;
  std::string cache_dir;  // empty: no caching
};

enum ExitCode { kOk = 0, kDomainError = 1, kUsageError = 2 };

struct RunResult {
  int exit_code = kOk;
  std::string output;  // stdout
  std::string error;   // stderr
  bool from_cache = false;
};

std::string command_name(Command c);

/// Executes a validated configuration.
RunResult run(const RunConfig& config);

/// Parses argv (CLI11), fills in the cache directory from the environment
/// when not given, and runs. Writes to the given streams; returns the exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace airycoef::cli
