#include "orthogen/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include <json.hpp>

#include "orthogen/error.hpp"

namespace orthogen {

using nlohmann::json;

std::string formatFixed(double v, int decimals) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, decimals);
  std::string s(buf, res.ptr);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string formatShortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

template <typename Cell>
std::string joinRows(std::size_t rows, std::size_t cols, std::string_view sep, Cell cell) {
  std::string out;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (j) out += sep;
      out += cell(i, j);
    }
    out += '\n';
  }
  return out;
}

std::string padLeft(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

json rowsJson(const DenseMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    rows.push_back(std::vector<double>(r.begin(), r.end()));
  }
  return rows;
}

bool parseNumber(std::string_view tok, double& out) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return res.ec == std::errc() && res.ptr == tok.data() + tok.size();
}

DenseMatrix fromRows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw Error(ErrorKind::Parse, "no matrix rows found");
  const std::size_t cols = rows.front().size();
  std::vector<double> flat;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols || cols == 0) {
      throw Error(ErrorKind::Parse, "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                        " entries, expected " + std::to_string(cols));
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  try {
    return DenseMatrix(rows.size(), cols, std::move(flat));
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

DenseMatrix parseJsonGrid(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
  const json& entries = doc.is_object() ? doc.value("entries", json()) : doc;
  if (!entries.is_array()) throw Error(ErrorKind::Parse, "JSON matrix needs an array of rows");
  std::vector<std::vector<double>> rows;
  for (const auto& r : entries) {
    if (!r.is_array()) throw Error(ErrorKind::Parse, "JSON matrix row is not an array");
    std::vector<double> row;
    for (const auto& v : r) {
      if (!v.is_number()) throw Error(ErrorKind::Parse, "JSON matrix entry is not a number");
      row.push_back(v.get<double>());
    }
    rows.push_back(std::move(row));
  }
  return fromRows(rows);
}

DenseMatrix parseCsvGrid(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t lineNo = 0;
  while (!text.empty()) {
    ++lineNo;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<double> row;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (std::isspace(static_cast<unsigned char>(line[i])) || line[i] == ',')) ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != ',') ++j;
      double v = 0.0;
      if (!parseNumber(line.substr(i, j - i), v)) {
        throw Error(ErrorKind::Parse, "line " + std::to_string(lineNo) + ": cannot parse '" +
                                          std::string(line.substr(i, j - i)) + "' as a number");
      }
      row.push_back(v);
      i = j;
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return fromRows(rows);
}

// Next whitespace-delimited header token, skipping '#' comments.
std::string_view pgmToken(std::string_view bytes, std::size_t& pos) {
  while (pos < bytes.size()) {
    if (bytes[pos] == '#') {
      while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
    } else if (std::isspace(static_cast<unsigned char>(bytes[pos]))) {
      ++pos;
    } else {
      break;
    }
  }
  const std::size_t start = pos;
  while (pos < bytes.size() && !std::isspace(static_cast<unsigned char>(bytes[pos]))) ++pos;
  if (start == pos) throw Error(ErrorKind::Parse, "truncated PGM header");
  return bytes.substr(start, pos - start);
}

long pgmInt(std::string_view tok) {
  long v = 0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size() || v < 0) {
    throw Error(ErrorKind::Parse, "bad PGM header field '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

std::string toCsv(const DenseMatrix& m) {
  return joinRows(m.rows(), m.cols(), ",", [&](std::size_t i, std::size_t j) { return formatFixed(m(i, j)); });
}

std::string toCsv(const IntMatrix& m) {
  return joinRows(m.n, m.n, ",", [&](std::size_t i, std::size_t j) { return std::to_string(m(i, j)); });
}

std::string toPretty(const DenseMatrix& m) {
  return joinRows(m.rows(), m.cols(), " ",
                  [&](std::size_t i, std::size_t j) { return padLeft(formatFixed(m(i, j)), 10); });
}

std::string toPretty(const IntMatrix& m) {
  std::size_t width = 1;
  for (auto v : m.entries) width = std::max(width, std::to_string(v).size());
  return joinRows(m.n, m.n, " ",
                  [&](std::size_t i, std::size_t j) { return padLeft(std::to_string(m(i, j)), width); });
}

std::string toJson(const OrthoMatrix& m, const ReducedBasis* basis) {
  json doc;
  doc["n"] = m.n();
  doc["values"] = m.values;
  doc["entries"] = rowsJson(m.entries);
  doc["normScales"] = m.normScales;
  doc["warnings"] = m.warnings;
  if (basis != nullptr) {
    json polys = json::array();
    for (std::size_t d = 0; d < 2 * basis->m(); ++d) polys.push_back(basis->polynomial(d));
    doc["polynomials"] = std::move(polys);
  }
  return doc.dump(2) + "\n";
}

std::string toJson(const IntMatrix& m) {
  json doc;
  doc["n"] = m.n;
  doc["scale"] = m.scale;
  json rows = json::array();
  for (std::size_t i = 0; i < m.n; ++i) {
    rows.push_back(std::vector<std::int64_t>(m.entries.begin() + i * m.n, m.entries.begin() + (i + 1) * m.n));
  }
  doc["entries"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string toJson(const DenseMatrix& m) {
  json doc;
  doc["rows"] = m.rows();
  doc["cols"] = m.cols();
  doc["entries"] = rowsJson(m);
  return doc.dump(2) + "\n";
}

std::string toCHeader(const IntMatrix& m, std::string_view macroName) {
  std::size_t width = 1;
  for (auto v : m.entries) width = std::max(width, std::to_string(v).size());
  const std::string n = std::to_string(m.n);

  std::string out;
  out += "// " + n + "x" + n + " integer transform matrix, scale " + formatShortest(m.scale) + "\n";
  out += "#define " + std::string(macroName) + " \\\n{ \\\n";
  for (std::size_t i = 0; i < m.n; ++i) {
    out += "  {";
    for (std::size_t j = 0; j < m.n; ++j) {
      out += (j ? ", " : " ") + padLeft(std::to_string(m(i, j)), width);
    }
    out += " }, \\\n";
  }
  out += "}\n\n";
  out += "static const int g_mat[" + n + "][" + n + "] = " + std::string(macroName) + ";\n";
  return out;
}

DenseMatrix parseGrid(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw Error(ErrorKind::Parse, "empty matrix input");
  if (text[first] == '{' || text[first] == '[') return parseJsonGrid(text);
  return parseCsvGrid(text);
}

DenseMatrix parseMatrix(std::string_view text) {
  DenseMatrix m = parseGrid(text);
  if (!m.square()) {
    throw Error(ErrorKind::Parse,
                "matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected square");
  }
  return m;
}

PgmImage parsePgm(std::string_view bytes) {
  std::size_t pos = 0;
  const auto magic = pgmToken(bytes, pos);
  if (magic != "P2" && magic != "P5") throw Error(ErrorKind::Parse, "not a PGM file (magic '" + std::string(magic) + "')");
  PgmImage img;
  img.width = static_cast<std::size_t>(pgmInt(pgmToken(bytes, pos)));
  img.height = static_cast<std::size_t>(pgmInt(pgmToken(bytes, pos)));
  img.maxval = static_cast<int>(pgmInt(pgmToken(bytes, pos)));
  if (img.width == 0 || img.height == 0 || img.maxval < 1 || img.maxval > 65535) {
    throw Error(ErrorKind::Parse, "invalid PGM dimensions or maxval");
  }
  const std::size_t count = img.width * img.height;
  img.pixels.reserve(count);

  if (magic == "P2") {
    for (std::size_t i = 0; i < count; ++i) {
      const long v = pgmInt(pgmToken(bytes, pos));
      if (v > img.maxval) throw Error(ErrorKind::Parse, "PGM sample exceeds maxval");
      img.pixels.push_back(static_cast<int>(v));
    }
    return img;
  }

  ++pos;  // single whitespace byte before the raster
  const std::size_t bps = img.maxval > 255 ? 2 : 1;
  if (bytes.size() < pos + count * bps) throw Error(ErrorKind::Parse, "truncated PGM raster");
  for (std::size_t i = 0; i < count; ++i) {
    const auto* p = reinterpret_cast<const unsigned char*>(bytes.data() + pos + i * bps);
    const int v = bps == 2 ? (p[0] << 8) | p[1] : p[0];
    if (v > img.maxval) throw Error(ErrorKind::Parse, "PGM sample exceeds maxval");
    img.pixels.push_back(v);
  }
  return img;
}

std::string writePgm(const PgmImage& img, bool binary) {
  std::string out = std::string(binary ? "P5" : "P2") + "\n" + std::to_string(img.width) + " " +
                    std::to_string(img.height) + "\n" + std::to_string(img.maxval) + "\n";
  if (binary) {
    for (int v : img.pixels) {
      if (img.maxval > 255) out += static_cast<char>((v >> 8) & 0xff);
      out += static_cast<char>(v & 0xff);
    }
    return out;
  }
  for (std::size_t r = 0; r < img.height; ++r) {
    for (std::size_t c = 0; c < img.width; ++c) {
      if (c) out += ' ';
      out += std::to_string(img.pixels[r * img.width + c]);
    }
    out += '\n';
  }
  return out;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void writeFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

}  // namespace orthogen
