#include "worpitzky/cli.hpp"

#include "worpitzky/difftable.hpp"
#include "worpitzky/errors.hpp"
#include "worpitzky/oeis.hpp"
#include "worpitzky/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#ifndef WORPITZKY_FIXTURE_DIR
#define WORPITZKY_FIXTURE_DIR "data/oeis"
#endif

namespace worpitzky::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kExamples = R"(Examples:
  # 4x^6 + 5x^5 + ... + 10 sampled at x = 0..7 (AWNT back-substitution)
  printf '10\n49\n628\n4915\n23662\n83005\n235144\n571903\n' | worpitzky fit --start 0 --step 1
  # integers starting at 1 (MWNT back-substitution)
  worpitzky fit samples.txt --start 1 --step 1 --convention start-one
  # x = 3.3, 3.4, ..., 3.9
  worpitzky fit samples.txt --start 3.3 --step 0.1 --format json
  worpitzky triangle --kind mwnt --rows 9
  worpitzky verify --self
  worpitzky verify --oeis A019538 --cells 45)";

/// Error tagged with the pipeline stage that raised it.
struct StageError {
  std::string stage;
  int code;
  std::string message;
};

std::string read_all(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string read_input(const CliConfig& config, std::istream& in) {
  if (!config.input_path || *config.input_path == "-") return read_all(in);
  std::ifstream file(*config.input_path, std::ios::binary);
  if (!file) throw StageError{"input", kExitUsage, "cannot open " + config.input_path->string()};
  return read_all(file);
}

std::vector<Rational> read_values(const CliConfig& config, std::istream& in) {
  const std::string text = read_input(config, in);
  std::vector<Rational> values;
  try {
    values = parse_scalar_list(text);
  } catch (const ParseError& e) {
    throw StageError{"input", kExitUsage, e.what()};
  } catch (const ZeroDenominatorError& e) {
    throw StageError{"input", kExitUsage, e.what()};
  }
  if (values.empty()) throw StageError{"input", kExitUsage, "no values in input"};
  return values;
}

ordered_json rational_array(const std::vector<Rational>& values) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : values) arr.push_back(v.to_string());
  return arr;
}

std::string join_display(const std::vector<Rational>& values, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i].to_display_string();
  }
  return out;
}

std::string describe_map(const AffineMap& map) {
  std::string shift = map.x0().is_zero() ? "x"
                      : map.x0().sign() < 0
                          ? "x + " + (-map.x0()).to_display_string()
                          : "x - " + map.x0().to_display_string();
  if (map.h() == Rational(1)) return shift;
  return "(" + shift + ")/" + map.h().to_display_string();
}

int run_fit(const CliConfig& config, std::istream& in, std::ostream& out) {
  const std::vector<Rational> values = read_values(config, in);
  if (values.size() < 2) {
    throw StageError{"input", kExitUsage, "fit needs at least two values, got 1"};
  }

  FitResult result;
  try {
    result = fit(Sequence(values), AffineMap(config.start, config.step), config.convention,
                 config.min_witnesses);
  } catch (const NotPolynomialError& e) {
    throw StageError{"degree detection", kExitDomain, e.what()};
  } catch (const InconsistencyError& e) {
    throw StageError{"solve", kExitDomain, e.what()};
  }

  if (config.format == Format::kJson) {
    ordered_json doc;
    doc["degree"] = result.degree_report.degree;
    doc["basis_g"] = {{"x0", result.map.x0().to_string()}, {"h", result.map.h().to_string()}};
    doc["coefficients_g"] = rational_array(result.poly_in_g.coefficients());
    doc["coefficients_x"] = rational_array(result.poly_in_x.coefficients());
    doc["verified"] = true;
    out << doc.dump(2) << '\n';
    return kExitOk;
  }

  const DegreeReport& report = result.degree_report;
  out << "degree: " << report.degree << " (row " << report.degree << " constant at "
      << report.constant_row_value.to_display_string() << ", " << report.witnesses
      << " witnesses)\n";
  out << "g(x) = " << describe_map(result.map) << '\n';
  out << "p(g) = " << result.poly_in_g.to_string("g") << '\n';
  out << "p(x) = " << result.poly_in_x.to_string("x") << '\n';
  out << "coefficients_g: " << join_display(result.poly_in_g.coefficients()) << '\n';
  out << "coefficients_x: " << join_display(result.poly_in_x.coefficients()) << '\n';
  out << "verified: true\n";
  return kExitOk;
}

int run_difftable(const CliConfig& config, std::istream& in, std::ostream& out) {
  const Sequence seq(read_values(config, in));
  const DifferenceTable table = build_table(seq);

  std::optional<DegreeReport> report;
  std::string no_degree;
  if (seq.size() >= 2) {
    try {
      report = detect_degree(table, config.min_witnesses);
    } catch (const NotPolynomialError& e) {
      no_degree = e.what();
    }
  } else {
    no_degree = "a single value has no difference rows";
  }

  if (config.format == Format::kJson) {
    ordered_json doc;
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.rows) rows.push_back(rational_array(row));
    doc["rows"] = std::move(rows);
    doc["main_diagonal"] = rational_array(table.main_diagonal);
    if (report) {
      doc["degree"] = {{"degree", report->degree},
                       {"constant_row_value", report->constant_row_value.to_string()},
                       {"witnesses", report->witnesses}};
    } else {
      doc["degree"] = nullptr;
    }
    out << doc.dump(2) << '\n';
    return kExitOk;
  }

  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << "row " << r << ": " << join_display(table.rows[r], " ") << '\n';
  }
  out << "main diagonal: " << join_display(table.main_diagonal, " ") << '\n';
  if (report) {
    out << "degree: " << report->degree << " (constant "
        << report->constant_row_value.to_display_string() << ", " << report->witnesses
        << " witnesses)\n";
  } else {
    out << "degree: not detected (" << no_degree << ")\n";
  }
  return kExitOk;
}

int run_triangle(const CliConfig& config, std::ostream& out) {
  if (config.rows == 0) throw StageError{"triangle", kExitUsage, "--rows must be at least 1"};
  const Triangle triangle = build_triangle(config.kind, config.rows);

  switch (config.format) {
    case Format::kBfile: {
      std::size_t index = 1;
      for (const auto& v : triangle.linearize()) out << index++ << ' ' << v.str() << '\n';
      return kExitOk;
    }
    case Format::kJson: {
      ordered_json doc;
      doc["kind"] = std::string(to_string(config.kind));
      ordered_json rows = ordered_json::array();
      for (unsigned n = 1; n <= triangle.max_n(); ++n) {
        ordered_json row = ordered_json::array();
        for (const auto& v : triangle.row(n)) row.push_back(v.str());
        rows.push_back(std::move(row));
      }
      doc["rows"] = std::move(rows);
      out << doc.dump(2) << '\n';
      return kExitOk;
    }
    case Format::kText: {
      std::vector<std::size_t> width(triangle.max_n(), 1);
      for (unsigned n = 1; n <= triangle.max_n(); ++n) {
        const auto& row = triangle.row(n);
        for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].str().size());
      }
      for (unsigned n = 1; n <= triangle.max_n(); ++n) {
        const auto& row = triangle.row(n);
        for (std::size_t k = 0; k < row.size(); ++k) {
          if (k) out << ' ';
          out << std::setw(static_cast<int>(width[k])) << row[k].str();
        }
        out << '\n';
      }
      return kExitOk;
    }
  }
  return kExitOk;
}

int run_verify(const CliConfig& config, std::ostream& out) {
  bool all_passed = true;

  if (config.self_check) {
    for (const auto& outcome : run_self_checks()) {
      out << (outcome.passed ? "PASS " : "FAIL ") << outcome.name;
      if (!outcome.detail.empty()) out << ": " << outcome.detail;
      out << '\n';
      all_passed = all_passed && outcome.passed;
    }
  }

  if (config.oeis_id) {
    const std::string& id = *config.oeis_id;
    if (!oeis::is_valid_sequence_id(id)) {
      throw StageError{"oeis", kExitUsage, "invalid OEIS id '" + id + "', expected A + 6 digits"};
    }
    const auto known = oeis::known_triangle(id);
    if (!known) throw StageError{"oeis", kExitUsage, id + " is not a supported triangle"};

    oeis::BFile bfile;
    try {
      bfile = oeis::fetch_bfile(id, config.online ? oeis::Source::kNetwork : oeis::Source::kFixture,
                                config.fixture_dir);
    } catch (const Error& e) {
      throw StageError{"oeis", kExitDomain, e.what()};
    }
    if (config.cells > bfile.entries.size()) {
      throw StageError{"oeis", kExitUsage,
                       "--cells " + std::to_string(config.cells) + " exceeds the " +
                           std::to_string(bfile.entries.size()) + " entries of " + id};
    }
    const auto report = oeis::crosscheck_triangle(known->kind, bfile, config.cells, known->orientation);
    out << (report.ok() ? "PASS " : "FAIL ") << id << " vs " << to_string(known->kind) << ": "
        << report.matched << "/" << report.cells_checked << " cells matched";
    if (report.first_mismatch) {
      const auto& m = *report.first_mismatch;
      out << "; first mismatch at index " << m.index << " (n = " << m.n << ", k = " << m.k
          << "): b-file " << m.actual.str() << ", generated " << m.expected.str();
    }
    out << '\n';
    all_passed = all_passed && report.ok();
  }

  return all_passed ? kExitOk : kExitDomain;
}

}  // namespace

std::filesystem::path default_fixture_dir() {
  if (const char* env = std::getenv("WORPITZKY_FIXTURE_DIR"); env && *env) return env;
  return WORPITZKY_FIXTURE_DIR;
}

int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    switch (config.subcommand) {
      case Subcommand::kFit:
        return run_fit(config, in, out);
      case Subcommand::kDifftable:
        return run_difftable(config, in, out);
      case Subcommand::kTriangle:
        return run_triangle(config, out);
      case Subcommand::kVerify:
        return run_verify(config, out);
    }
  } catch (const StageError& e) {
    err << "error: " << e.stage << ": " << e.message << '\n';
    return e.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Recover exact polynomial coefficients from sequence values using difference "
               "tables and Worpitzky number triangles.",
               "worpitzky"};
  app.footer(kExamples);
  app.set_version_flag("--version", std::string("worpitzky ") + kVersion);
  app.require_subcommand(1);

  CliConfig config;
  config.fixture_dir = default_fixture_dir();
  std::string input;
  std::string start = "0";
  std::string step = "1";
  std::string format;
  std::string kind;

  const std::map<std::string, Convention> conventions{{"auto", Convention::kAuto},
                                                      {"start-zero", Convention::kStartZero},
                                                      {"start-one", Convention::kStartOne}};

  auto* fit_cmd = app.add_subcommand("fit", "Fit a polynomial to equally spaced samples");
  fit_cmd->add_option("input", input, "Input file, one scalar per line or comma-separated ('-' or absent: stdin)");
  fit_cmd->add_option("--start", start, "First input value x0 (integer, fraction or decimal)")
      ->capture_default_str();
  fit_cmd->add_option("--step", step, "Constant differential h between inputs")->capture_default_str();
  fit_cmd->add_option("--convention", config.convention, "Index convention")
      ->transform(CLI::CheckedTransformer(conventions, CLI::ignore_case));
  fit_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  fit_cmd->add_option("--min-witnesses", config.min_witnesses,
                      "Entries required in the constant row")
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));

  auto* diff_cmd = app.add_subcommand("difftable", "Print the difference table of a sequence");
  diff_cmd->add_option("input", input, "Input file ('-' or absent: stdin)");
  diff_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
  diff_cmd->add_option("--min-witnesses", config.min_witnesses,
                       "Entries required in the constant row")
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));

  auto* tri_cmd = app.add_subcommand("triangle", "Print a number triangle");
  tri_cmd->add_option("--kind", kind, "Triangle")
      ->required()
      ->check(CLI::IsMember({"mwnt", "awnt", "stirling2"}));
  tri_cmd->add_option("--rows", config.rows, "Number of rows")->required()->check(CLI::PositiveNumber);
  tri_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json", "bfile"}));

  auto* verify_cmd = app.add_subcommand("verify", "Run identity self-checks or OEIS cross-checks");
  verify_cmd->add_flag("--self", config.self_check, "Run the identity suites");
  verify_cmd->add_option("--oeis", input, "Cross-check against an OEIS b-file (A019538 or A028246)");
  verify_cmd->add_flag("--online", config.online, "Download the b-file instead of using fixtures");
  verify_cmd->add_option("--cells", config.cells, "Number of linearized cells to compare")
      ->capture_default_str();
  verify_cmd->add_option("--fixtures", config.fixture_dir, "Directory holding b-file fixtures");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  if (fit_cmd->parsed()) config.subcommand = Subcommand::kFit;
  if (diff_cmd->parsed()) config.subcommand = Subcommand::kDifftable;
  if (tri_cmd->parsed()) config.subcommand = Subcommand::kTriangle;
  if (verify_cmd->parsed()) config.subcommand = Subcommand::kVerify;

  if (config.subcommand == Subcommand::kFit || config.subcommand == Subcommand::kDifftable) {
    if (!input.empty()) config.input_path = input;
  }
  if (config.subcommand == Subcommand::kVerify) {
    if (!input.empty()) config.oeis_id = input;
    if (!config.self_check && !config.oeis_id) {
      err << "error: verify needs --self and/or --oeis <id>\n";
      return kExitUsage;
    }
  }
  if (config.subcommand == Subcommand::kTriangle) config.kind = *parse_triangle_kind(kind);

  if (format == "json") {
    config.format = Format::kJson;
  } else if (format == "bfile") {
    config.format = Format::kBfile;
  } else {
    config.format = Format::kText;
  }

  try {
    config.start = parse_scalar(start);
    config.step = parse_scalar(step);
  } catch (const Error& e) {
    err << "error: arguments: " << e.what() << '\n';
    return kExitUsage;
  }
  if (config.step.is_zero()) {
    err << "error: arguments: --step must be nonzero\n";
    return kExitUsage;
  }

  return run(config, in, out, err);
}

}  // namespace worpitzky::cli
