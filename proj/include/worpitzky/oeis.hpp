#pragma once

/**
 * @file oeis.hpp
 * @brief OEIS b-file reading and triangle cross-checks.
 *
 * A b-file is plain text, one `index value` pair per line, with optional
 * `#` comment lines. Fixtures for A019538 and A028246 ship under
 * data/oeis/ so nothing here needs the network unless asked to.
 */

#include "worpitzky/numeric.hpp"
#include "worpitzky/triangles.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace worpitzky::oeis {

struct Entry {
  long long index = 0;
  BigInt value;
  friend bool operator==(const Entry&, const Entry&) = default;
};

struct BFile {
  std::string sequence_id;
  /// Strictly increasing indices.
  std::vector<Entry> entries;
};

/// Throws ParseError with the 1-based line number on anything other than
/// blank lines, `#` comments and `index value` pairs, or on non-increasing
/// indices.
BFile parse_bfile(std::string_view text, std::string sequence_id);

/// One `index value` line per entry, newline-terminated.
std::string serialize_bfile(const BFile& bfile);

/// True for "A" followed by exactly six digits.
bool is_valid_sequence_id(std::string_view id);

enum class Source { kFixture, kNetwork };

/// Reads <fixture_dir>/b<digits>.txt or downloads
/// https://oeis.org/<id>/b<digits>.txt. Throws ParseError on a malformed id,
/// FixtureMissingError when no fixture exists and TransportError when the
/// download fails.
BFile fetch_bfile(std::string_view sequence_id, Source source,
                  const std::filesystem::path& fixture_dir);

/// Row order used when linearizing a triangle for comparison.
enum class Orientation {
  kAsPrinted,  // k = 1..n within each row
  kMirrored,   // k = n..1 within each row
};

struct Mismatch {
  long long index = 0;
  unsigned n = 0;
  unsigned k = 0;
  BigInt expected;
  BigInt actual;
};

struct CrosscheckReport {
  std::size_t cells_checked = 0;
  std::size_t matched = 0;
  std::optional<Mismatch> first_mismatch;
  bool ok() const { return !first_mismatch.has_value() && matched == cells_checked; }
};

/// Compares the first @p cells b-file entries with the locally generated
/// triangle. The b-file index L maps to cell (n, k) by L = n(n-1)/2 + k.
/// Throws OutOfRangeError when the b-file holds fewer than @p cells entries.
CrosscheckReport crosscheck_triangle(TriangleKind kind, const BFile& bfile, std::size_t cells,
                                     Orientation orientation = Orientation::kAsPrinted);

/// Triangle kind and orientation pinned for a known sequence id.
struct KnownTriangle {
  TriangleKind kind;
  Orientation orientation;
};
std::optional<KnownTriangle> known_triangle(std::string_view sequence_id);

}  // namespace worpitzky::oeis
