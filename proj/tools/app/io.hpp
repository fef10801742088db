#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "dillab/intmatrix.hpp"
#include "dillab/intpoly.hpp"
#include "dillab/interval.hpp"

namespace dillab::app {

using Json = nlohmann::ordered_json;

/// File-system failure; maps to exit status 3.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Significant digits used for every decimal rendering.
inline constexpr unsigned kDecimalDigits = 20;

/// {"decimal", "num", "den"}; the decimal is rounded in direction `dir`.
Json rational_json(const Rational& q, Rounding dir = Rounding::Nearest);
/// {"lo", "hi"} with lo rounded down and hi rounded up.
Json interval_json(const Interval& iv);
Json enclosure_json(const PFEnclosure& e);
Json root_json(const RootEnclosure& r);

Json poly_json(const IntPoly& p);
IntPoly poly_from_json(const Json& j);

/// Text ("k" then k rows) or JSON ({"k", "rows"}); detected by the first
/// non-blank character. ParseError on malformed input.
IntMatrix parse_matrix(const std::string& content);
Json matrix_json(const IntMatrix& m);
std::string matrix_text(const IntMatrix& m);

std::string read_file(const std::string& path);
/// Writes to path.tmp.<pid> and renames over path.
void write_atomic(const std::string& path, const std::string& content);
/// Appends lines, writing `header` first when the file is new or empty.
void append_csv_atomic(const std::string& path, const std::string& header, const std::string& lines);

}  // namespace dillab::app
