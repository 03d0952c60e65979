// Text rendering and parsing of field elements, polynomials and matrices.
// GF(4) uses the symbols 0, 1, a, b; other fields use canonical values.

#ifndef QT2W_RENDER_HPP
#define QT2W_RENDER_HPP

#include <iosfwd>
#include <string>

#include "qt2w/matrix.hpp"
#include "qt2w/poly.hpp"

namespace qt2w {

std::string element_symbol(const Field& f, gfelem v);

// Accepts canonical decimal values; for GF(4), "a" and "b" are aliases for
// 2 and 3.
gfelem parse_element(const Field& f, const std::string& token);

// "c0 + c1*x + ..." with ascending powers, e.g. "1 + b*x + x^3".
std::string to_string(const Poly& p);

// Rows of space-separated symbols, one line per row.
std::string to_string(const GfMatrix& m);

}  // namespace qt2w

#endif
