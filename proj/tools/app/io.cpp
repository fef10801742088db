#include "io.hpp"

#include <unistd.h>

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dillab/error.hpp"

namespace dillab::app {

Json rational_json(const Rational& q, Rounding dir) {
  Json j;
  j["decimal"] = to_decimal_sig(q, kDecimalDigits, dir);
  j["num"] = q.get_num().get_str();
  j["den"] = q.get_den().get_str();
  return j;
}

Json interval_json(const Interval& iv) {
  Json j;
  j["lo"] = rational_json(iv.lo, Rounding::Down);
  j["hi"] = rational_json(iv.hi, Rounding::Up);
  return j;
}

Json enclosure_json(const PFEnclosure& e) {
  Json j = interval_json(e.interval());
  j["iterations"] = e.iterations;
  j["relative_width"] = to_decimal_sig(e.relative_width(), 6, Rounding::Up);
  return j;
}

Json root_json(const RootEnclosure& r) {
  Json j = interval_json(r.interval());
  j["sign_lo"] = r.sign_lo;
  j["sign_hi"] = r.sign_hi;
  j["certified_largest"] = r.certified_largest();
  j["mesh_positive"] = r.mesh_positive;
  return j;
}

Json poly_json(const IntPoly& p) {
  Json coeffs = Json::object();
  for (const auto& [e, c] : p.terms()) coeffs[std::to_string(e)] = c.get_str();
  return Json{{"coeffs", coeffs}};
}

IntPoly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_object()) {
    throw Error(Errc::ParseError, "polynomial JSON needs an object field \"coeffs\"");
  }
  IntPoly p;
  for (const auto& [key, value] : j["coeffs"].items()) {
    const Integer e = parse_integer(key);
    if (e < 0 || !e.fits_ulong_p()) throw Error(Errc::ParseError, "bad exponent '" + key + "'");
    if (!value.is_string() && !value.is_number_integer()) {
      throw Error(Errc::ParseError, "coefficient of x^" + key + " must be an integer string");
    }
    const std::string text = value.is_string() ? value.get<std::string>() : value.dump();
    p.add_term(e.get_ui(), parse_integer(text));
  }
  return p;
}

namespace {

Integer json_entry(const Json& v) {
  if (v.is_number_unsigned() || v.is_number_integer()) return parse_integer(v.dump());
  if (v.is_string()) return parse_integer(v.get<std::string>());
  throw Error(Errc::ParseError, "matrix entries must be integers");
}

IntMatrix parse_matrix_json(const std::string& content) {
  Json j;
  try {
    j = Json::parse(content);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("k") || !j.contains("rows") || !j["rows"].is_array()) {
    throw Error(Errc::ParseError, "matrix JSON needs fields \"k\" and \"rows\"");
  }
  const Integer k = json_entry(j["k"]);
  if (k < 1 || !k.fits_ulong_p()) throw Error(Errc::ParseError, "k must be a positive integer");
  std::vector<std::vector<Integer>> rows;
  for (const auto& row : j["rows"]) {
    if (!row.is_array()) throw Error(Errc::ParseError, "each row must be an array");
    auto& r = rows.emplace_back();
    for (const auto& v : row) r.push_back(json_entry(v));
  }
  if (rows.size() != k.get_ui()) throw Error(Errc::ParseError, "row count differs from k");
  for (const auto& r : rows) {
    if (r.size() != k.get_ui()) throw Error(Errc::ParseError, "row length differs from k");
  }
  return IntMatrix::from_rows(rows);
}

IntMatrix parse_matrix_text(const std::string& content) {
  std::istringstream in(content);
  std::string token;
  if (!(in >> token)) throw Error(Errc::ParseError, "empty matrix file");
  const Integer k = parse_integer(token);
  if (k < 1 || !k.fits_ulong_p()) throw Error(Errc::ParseError, "k must be a positive integer");
  const std::size_t n = k.get_ui();
  std::vector<std::vector<Integer>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!(in >> token)) throw Error(Errc::ParseError, "matrix text ends early");
      rows[i].push_back(parse_integer(token));
    }
  }
  if (in >> token) throw Error(Errc::ParseError, "trailing data after the matrix");
  return IntMatrix::from_rows(rows);
}

}  // namespace

IntMatrix parse_matrix(const std::string& content) {
  for (char c : content) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    IntMatrix m = c == '{' ? parse_matrix_json(content) : parse_matrix_text(content);
    return m;
  }
  throw Error(Errc::ParseError, "empty matrix file");
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const Integer& v = m(i, j);
      if (fits_int64(v)) {
        row.push_back(to_int64(v));
      } else {
        row.push_back(v.get_str());
      }
    }
    rows.push_back(std::move(row));
  }
  return Json{{"k", m.dim()}, {"rows", rows}};
}

std::string matrix_text(const IntMatrix& m) {
  std::string out = std::to_string(m.dim()) + "\n";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j > 0) out += ' ';
      out += m(i, j).get_str();
    }
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path + "'");
  return ss.str();
}

void write_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp + "' for writing");
    out << content;
    out.flush();
    if (!out) {
      std::remove(tmp.c_str());
      throw IoError("error while writing '" + tmp + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::remove(tmp.c_str());
    throw IoError("cannot rename '" + tmp + "' to '" + path + "': " + ec.message());
  }
}

void append_csv_atomic(const std::string& path, const std::string& header, const std::string& lines) {
  std::string existing;
  std::error_code ec;
  if (std::filesystem::exists(path, ec)) existing = read_file(path);
  if (existing.empty()) existing = header + "\n";
  if (existing.back() != '\n') existing += '\n';
  write_atomic(path, existing + lines);
}

}  // namespace dillab::app
