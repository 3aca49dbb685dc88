#pragma once

#include "worpitzky/numeric.hpp"
#include "worpitzky/solver.hpp"
#include "worpitzky/triangles.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace worpitzky::cli {

inline constexpr const char* kVersion = "0.1.0";

enum class Subcommand { kFit, kDifftable, kTriangle, kVerify };
enum class Format { kText, kJson, kBfile };

struct CliConfig {
  Subcommand subcommand = Subcommand::kFit;
  /// Absent or "-" reads stdin.
  std::optional<std::filesystem::path> input_path;
  Rational start{0};
  Rational step{1};
  Convention convention = Convention::kAuto;
  Format format = Format::kText;
  std::size_t min_witnesses = 2;

  TriangleKind kind = TriangleKind::kAwnt;
  unsigned rows = 9;

  bool self_check = false;
  std::optional<std::string> oeis_id;
  bool online = false;
  std::size_t cells = 45;
  std::filesystem::path fixture_dir;
};

/// Exit codes returned by run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Parses @p args (argv without the program name) and executes the
/// subcommand. Results go to @p out, diagnostics to @p err.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// Executes an already validated configuration.
int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Fixture directory used when --fixtures is not given: $WORPITZKY_FIXTURE_DIR
/// if set, otherwise the data/oeis directory of the source tree.
std::filesystem::path default_fixture_dir();

}  // namespace worpitzky::cli
