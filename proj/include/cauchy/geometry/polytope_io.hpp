#pragma once

// Plain-text polytope files:
//
//   # optional comment lines
//   d n
//   x_1 ... x_d      (n lines)
//
// '#' starts a comment that runs to end of line; blank lines are ignored.

#include <Eigen/Dense>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cauchy/errors.hpp"
#include "cauchy/geometry/polytope.hpp"

namespace cauchy {

namespace detail {

inline std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line.substr(0, line.find('#')));
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

inline double parse_real(const std::string& tok, std::size_t line) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str() || *end != '\0') throw parse_error(line, "not a number: '" + tok + "'");
  if (errno == ERANGE || !std::isfinite(v)) throw parse_error(line, "coordinate out of range: '" + tok + "'");
  return v;
}

inline long parse_count(const std::string& tok, std::size_t line, const char* what) {
  char* end = nullptr;
  const long v = std::strtol(tok.c_str(), &end, 10);
  if (end == tok.c_str() || *end != '\0') throw parse_error(line, std::string(what) + " must be an integer, got '" + tok + "'");
  return v;
}

}  // namespace detail

namespace detail {

inline Polytope read_polytope_impl(std::istream& in, const std::string& label) {
  std::string line;
  std::size_t lineno = 0;
  long d = 0, n = 0;
  bool have_header = false;
  std::vector<Eigen::VectorXd> pts;
  std::size_t header_line = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto fields = detail::split_fields(line);
    if (fields.empty()) continue;
    if (!have_header) {
      if (fields.size() != 2) throw parse_error(lineno, "header must be 'd n'");
      d = detail::parse_count(fields[0], lineno, "dimension");
      n = detail::parse_count(fields[1], lineno, "vertex count");
      if (d < kMinPolytopeDim || d > kMaxPolytopeDim)
        throw parse_error(lineno, "dimension must be in [2, 4], got " + std::to_string(d));
      if (n < d + 1) throw parse_error(lineno, "need at least d+1 = " + std::to_string(d + 1) + " vertices");
      have_header = true;
      header_line = lineno;
      continue;
    }
    if (static_cast<long>(pts.size()) == n) throw parse_error(lineno, "more than the declared " + std::to_string(n) + " vertices");
    if (static_cast<long>(fields.size()) != d)
      throw parse_error(lineno, "expected " + std::to_string(d) + " coordinates, got " + std::to_string(fields.size()));
    Eigen::VectorXd v(d);
    for (long i = 0; i < d; ++i) v(i) = detail::parse_real(fields[i], lineno);
    pts.push_back(std::move(v));
  }
  if (!have_header) throw parse_error(lineno, "missing header line 'd n'");
  if (static_cast<long>(pts.size()) != n)
    throw parse_error(header_line, "declared " + std::to_string(n) + " vertices, found " + std::to_string(pts.size()));
  try {
    return Polytope(std::move(pts), label);
  } catch (const std::exception& e) {
    throw parse_error(0, e.what());
  }
}

}  // namespace detail

/// Parses a polytope file. Diagnostics carry the 1-based line number and
/// `source` (typically the file name).
inline Polytope read_polytope(std::istream& in, const std::string& source = {}) {
  try {
    return detail::read_polytope_impl(in, source);
  } catch (const parse_error& e) {
    throw parse_error(e.line(), e.message(), source);
  }
}

inline Polytope read_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(0, "cannot open file", path);
  return read_polytope(in, path);
}

/// Writes `p`'s vertices with round-trip (17 significant digit) precision.
inline void write_polytope(std::ostream& out, const Polytope& p) {
  if (!p.label().empty()) out << "# " << p.label() << '\n';
  out << p.dim() << ' ' << p.vertices().size() << '\n';
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const auto& v : p.vertices()) {
    for (int i = 0; i < v.size(); ++i) out << (i ? " " : "") << v(i);
    out << '\n';
  }
}

}  // namespace cauchy
