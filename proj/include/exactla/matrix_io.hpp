#ifndef EXACTLA_MATRIX_IO_HPP
#define EXACTLA_MATRIX_IO_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "exactla/errors.hpp"
#include "exactla/matrix.hpp"

namespace exactla {

// Per-ring element parsing. The modulus argument is ignored for the integers.
template <typename S>
struct ElementIo;

template <>
struct ElementIo<mpz_class> {
  static mpz_class parse(std::string_view tok, std::uint64_t) { return parse_integer(tok); }
};

template <>
struct ElementIo<PolyFp> {
  static PolyFp parse(std::string_view tok, std::uint64_t p) { return parse_poly(tok, p); }
};

template <>
struct ElementIo<Fp> {
  static Fp parse(std::string_view tok, std::uint64_t p) {
    const mpz_class v = parse_integer(tok);
    const mpz_class r = ((v % p) + p) % p;
    return Fp::make(p, r.get_ui());
  }
};

/*
 * Matrix text format: a header line "<rows> <cols>" followed by one line per
 * row with whitespace-separated entries in the element syntax of the ring.
 */
template <typename S>
Mat<S> read_matrix(std::istream& in, std::uint64_t modulus = 0) {
  Index rows = 0, cols = 0;
  if (!(in >> rows >> cols)) throw ParseError("matrix header: expected '<rows> <cols>'");
  if (rows <= 0 || cols <= 0) throw ParseError("matrix header: dimensions must be positive");
  if (rows > 4096 || cols > 4096) throw ParseError("matrix header: dimensions too large");
  Mat<S> m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      std::string tok;
      if (!(in >> tok))
        throw ParseError("matrix body: ran out of entries at row " + std::to_string(i));
      try {
        m(i, j) = ElementIo<S>::parse(tok, modulus);
      } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()) + " (row " + std::to_string(i) +
                         ", col " + std::to_string(j) + ")");
      }
    }
  }
  return m;
}

template <typename S>
Mat<S> read_matrix_from_string(const std::string& text, std::uint64_t modulus = 0) {
  std::istringstream in(text);
  return read_matrix<S>(in, modulus);
}

template <typename S>
void write_matrix(std::ostream& out, const Mat<S>& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << format_element(m(i, j));
    }
    out << '\n';
  }
}

// Structured form: {"rows": r, "cols": c, "entries": [...]} with entries as
// strings in row-major order.
template <typename S>
nlohmann::ordered_json matrix_to_json(const Mat<S>& m) {
  nlohmann::ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  std::vector<std::string> entries;
  entries.reserve(static_cast<std::size_t>(m.size()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index jc = 0; jc < m.cols(); ++jc) entries.push_back(format_element(m(i, jc)));
  j["entries"] = entries;
  return j;
}

}  // namespace exactla

#endif  // EXACTLA_MATRIX_IO_HPP
