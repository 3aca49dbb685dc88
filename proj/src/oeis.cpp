#include "worpitzky/oeis.hpp"

#include "worpitzky/errors.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace worpitzky::oeis {

namespace {

bool is_integer_token(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

BigInt parse_integer(std::string_view s) {
  const bool negative = !s.empty() && s.front() == '-';
  if (negative) s.remove_prefix(1);
  const auto first = s.find_first_not_of('0');
  const BigInt magnitude = first == std::string_view::npos ? BigInt(0) : BigInt(std::string(s.substr(first)));
  return negative ? BigInt(-magnitude) : magnitude;
}

std::string bfile_name(std::string_view id) { return "b" + std::string(id.substr(1)) + ".txt"; }

void require_valid_id(std::string_view id) {
  if (!is_valid_sequence_id(id)) {
    throw ParseError("invalid OEIS id '" + std::string(id) + "', expected A followed by 6 digits");
  }
}

}  // namespace

BFile parse_bfile(std::string_view text, std::string sequence_id) {
  BFile out{std::move(sequence_id), {}};
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string index_text;
    if (!(fields >> index_text) || index_text.front() == '#') continue;

    std::string value_text;
    std::string trailing;
    if (!(fields >> value_text) || (fields >> trailing) || !is_integer_token(index_text) ||
        !is_integer_token(value_text)) {
      throw ParseError(out.sequence_id + " b-file line " + std::to_string(line_no) +
                       ": expected 'index value', got '" + line + "'");
    }
    Entry entry{std::stoll(index_text), parse_integer(value_text)};
    if (!out.entries.empty() && entry.index <= out.entries.back().index) {
      throw ParseError(out.sequence_id + " b-file line " + std::to_string(line_no) +
                       ": index " + index_text + " does not increase");
    }
    out.entries.push_back(std::move(entry));
  }
  return out;
}

std::string serialize_bfile(const BFile& bfile) {
  std::string out;
  for (const auto& e : bfile.entries) {
    out += std::to_string(e.index);
    out += ' ';
    out += e.value.str();
    out += '\n';
  }
  return out;
}

bool is_valid_sequence_id(std::string_view id) {
  return id.size() == 7 && id.front() == 'A' &&
         std::all_of(id.begin() + 1, id.end(), [](unsigned char c) { return std::isdigit(c); });
}

BFile fetch_bfile(std::string_view sequence_id, Source source,
                  const std::filesystem::path& fixture_dir) {
  require_valid_id(sequence_id);
  const std::string name = bfile_name(sequence_id);

  if (source == Source::kFixture) {
    const auto path = fixture_dir / name;
    std::ifstream in(path);
    if (!in) throw FixtureMissingError("no fixture for " + std::string(sequence_id) + " at " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_bfile(text.str(), std::string(sequence_id));
  }

  httplib::Client client("https://oeis.org");
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  client.set_follow_location(true);
  const std::string url = "/" + std::string(sequence_id) + "/" + name;
  auto response = client.Get(url);
  if (!response) {
    throw TransportError("GET https://oeis.org" + url + " failed: " +
                         httplib::to_string(response.error()));
  }
  if (response->status != 200) {
    throw TransportError("GET https://oeis.org" + url + " returned HTTP " +
                         std::to_string(response->status));
  }
  return parse_bfile(response->body, std::string(sequence_id));
}

CrosscheckReport crosscheck_triangle(TriangleKind kind, const BFile& bfile, std::size_t cells,
                                     Orientation orientation) {
  if (cells > bfile.entries.size()) {
    throw OutOfRangeError(bfile.sequence_id + " b-file has " +
                          std::to_string(bfile.entries.size()) + " entries, " +
                          std::to_string(cells) + " requested");
  }

  unsigned rows = 0;
  for (std::size_t i = 0; i < cells; ++i) {
    if (bfile.entries[i].index >= 1) {
      rows = std::max(rows, cell_position(static_cast<std::size_t>(bfile.entries[i].index)).n);
    }
  }
  const Triangle triangle = build_triangle(kind, std::max(rows, 1u));

  CrosscheckReport report;
  report.cells_checked = cells;
  for (std::size_t i = 0; i < cells; ++i) {
    const Entry& entry = bfile.entries[i];
    if (entry.index < 1) {
      report.first_mismatch = Mismatch{entry.index, 0, 0, BigInt(0), entry.value};
      break;
    }
    const CellPosition pos = cell_position(static_cast<std::size_t>(entry.index));
    const unsigned k = orientation == Orientation::kAsPrinted ? pos.k : pos.n + 1 - pos.k;
    const BigInt expected = triangle.at(pos.n, k);
    if (expected != entry.value) {
      report.first_mismatch = Mismatch{entry.index, pos.n, pos.k, expected, entry.value};
      break;
    }
    ++report.matched;
  }
  return report;
}

std::optional<KnownTriangle> known_triangle(std::string_view sequence_id) {
  // A028246 lists each row with k ascending, exactly as the local MWNT.
  if (sequence_id == "A028246") return KnownTriangle{TriangleKind::kMwnt, Orientation::kAsPrinted};
  if (sequence_id == "A019538") return KnownTriangle{TriangleKind::kAwnt, Orientation::kAsPrinted};
  return std::nullopt;
}

}  // namespace worpitzky::oeis
