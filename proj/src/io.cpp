#include "zerosquare/io.hpp"

#include <algorithm>
#include <sstream>

namespace zsq {

using nlohmann::json;

json matrix_to_json(const Matrix& m) {
  json entries = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j)
      row.push_back(m.ring().to_string(m.at(i, j)));
    entries.push_back(std::move(row));
  }
  return json{{"ring", m.ring().selector()},
              {"rows", m.rows()},
              {"cols", m.cols()},
              {"entries", std::move(entries)}};
}

namespace {

std::string entry_text(const json& cell, int i, int j) {
  if (cell.is_string()) return cell.get<std::string>();
  if (cell.is_number_integer() || cell.is_number_unsigned()) {
    std::ostringstream os;
    os << cell;
    return os.str();
  }
  fail(Errc::ParseError, "entries[" + std::to_string(i) + "][" +
                             std::to_string(j) +
                             "] must be a string or an integer");
}

}  // namespace

Matrix matrix_from_json(const json& j) {
  if (!j.is_object()) fail(Errc::ParseError, "matrix JSON must be an object");
  for (const char* key : {"ring", "rows", "cols", "entries"})
    if (!j.contains(key))
      fail(Errc::ParseError, std::string("matrix JSON lacks \"") + key + "\"");
  if (!j["ring"].is_string())
    fail(Errc::ParseError, "\"ring\" must be a selector string");
  Ring ring = Ring::parse_selector(j["ring"].get<std::string>());
  if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer())
    fail(Errc::ParseError, "\"rows\" and \"cols\" must be integers");
  const int rows = j["rows"].get<int>();
  const int cols = j["cols"].get<int>();
  if (rows < 1 || cols < 1) fail(Errc::ParseError, "rows and cols must be >= 1");
  const json& entries = j["entries"];
  if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
    fail(Errc::ParseError, "\"entries\" must be an array of " +
                               std::to_string(rows) + " rows");
  Matrix m(ring, rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = entries[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      fail(Errc::ParseError, "entries[" + std::to_string(i) + "] must hold " +
                                 std::to_string(cols) + " entries");
    for (int jcol = 0; jcol < cols; ++jcol) {
      try {
        m.set(i, jcol,
              ring.parse_elem(entry_text(row[static_cast<std::size_t>(jcol)], i, jcol)));
      } catch (const Error& e) {
        if (e.code() != Errc::ParseError) throw;
        fail(Errc::ParseError, "entries[" + std::to_string(i) + "][" +
                                   std::to_string(jcol) + "]: " + e.what());
      }
    }
  }
  return m;
}

Matrix matrix_from_text(const std::string& text, const Ring& ring) {
  if (ring.kind() != RingKind::Int)
    fail(Errc::ParseError,
         "plain-text matrix input is supported for ring \"int\" only");
  std::vector<std::vector<RingElem>> rows;
  std::istringstream lines(text);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    std::istringstream words(line);
    std::vector<RingElem> row;
    std::string tok;
    while (words >> tok) {
      try {
        row.push_back(ring.parse_elem(tok));
      } catch (const Error&) {
        fail(Errc::ParseError, "line " + std::to_string(lineno) + ": bad entry '" +
                                   tok + "'");
      }
    }
    if (row.empty()) continue;  // blank line
    if (!rows.empty() && rows.front().size() != row.size())
      fail(Errc::ParseError,
           "line " + std::to_string(lineno) + ": expected " +
               std::to_string(rows.front().size()) + " entries, found " +
               std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(Errc::ParseError, "no matrix rows in input");
  return Matrix::from_rows(ring, std::move(rows));
}

Matrix parse_matrix(const std::string& src, const std::optional<Ring>& ring_hint) {
  auto first = std::find_if(src.begin(), src.end(),
                            [](unsigned char c) { return !std::isspace(c); });
  if (first == src.end()) fail(Errc::ParseError, "empty matrix input");
  if (*first == '{') {
    json j;
    try {
      j = json::parse(src);
    } catch (const json::parse_error& e) {
      fail(Errc::ParseError, e.what());  // message carries the byte position
    }
    Matrix m = matrix_from_json(j);
    if (ring_hint && !(m.ring() == *ring_hint))
      fail(Errc::ParseError, "matrix declares ring " + m.ring().selector() +
                                 " but " + ring_hint->selector() +
                                 " was requested");
    return m;
  }
  return matrix_from_text(src, ring_hint.value_or(Ring::integers()));
}

std::string matrix_to_bracket_text(const Matrix& m) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  cells.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      cells.push_back(m.ring().to_string(m.at(i, j)));
      width = std::max(width, cells.back().size());
    }
  std::string out;
  for (int i = 0; i < m.rows(); ++i) {
    out += "[";
    for (int j = 0; j < m.cols(); ++j) {
      const std::string& c = cells[static_cast<std::size_t>(i * m.cols() + j)];
      out += "  ";
      out.append(width - c.size(), ' ');
      out += c;
    }
    out += "  ]\n";
  }
  return out;
}

json certificate_to_json(const Matrix& t, const SimilarityCertificate& cert) {
  const Ring& r = cert.U.ring();
  return json{{"n", cert.n},
              {"r", r.to_string(cert.r)},
              {"U", matrix_to_json(cert.U)},
              {"det_unit", r.to_string(cert.det_unit)},
              {"verified", verify_certificate(t, cert)}};
}

SimilarityCertificate certificate_from_json(const json& j) {
  if (!j.is_object()) fail(Errc::ParseError, "certificate JSON must be an object");
  for (const char* key : {"n", "r", "U", "det_unit"})
    if (!j.contains(key))
      fail(Errc::ParseError, std::string("certificate JSON lacks \"") + key + "\"");
  if (!j["n"].is_number_integer())
    fail(Errc::ParseError, "\"n\" must be an integer");
  Matrix u = matrix_from_json(j["U"]);
  const Ring& ring = u.ring();
  if (!j["r"].is_string() || !j["det_unit"].is_string())
    fail(Errc::ParseError, "\"r\" and \"det_unit\" must be element strings");
  RingElem r = ring.parse_elem(j["r"].get<std::string>());
  RingElem det_unit = ring.parse_elem(j["det_unit"].get<std::string>());
  return SimilarityCertificate{j["n"].get<int>(), std::move(r), std::move(u),
                               std::move(det_unit)};
}

}  // namespace zsq
