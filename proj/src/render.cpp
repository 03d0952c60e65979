#include "qt2w/render.hpp"

#include <sstream>
#include <stdexcept>

namespace qt2w {

std::string element_symbol(const Field& f, gfelem v) {
    f.check_element(v);
    if (f.q() == 4) {
        static const char* names[] = {"0", "1", "a", "b"};
        return names[v];
    }
    return std::to_string(v);
}

gfelem parse_element(const Field& f, const std::string& token) {
    if (token == "a") {
        if (f.q() < 3) throw std::invalid_argument("parse_element: 'a' undefined for q=" + std::to_string(f.q()));
        return 2;
    }
    if (token == "b") {
        if (f.q() < 4) throw std::invalid_argument("parse_element: 'b' undefined for q=" + std::to_string(f.q()));
        return 3;
    }
    std::size_t used = 0;
    unsigned long v;
    try {
        v = std::stoul(token, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_element: bad token '" + token + "'");
    }
    if (used != token.size() || v >= f.q())
        throw std::invalid_argument("parse_element: bad token '" + token + "' for q=" + std::to_string(f.q()));
    return (gfelem)v;
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    const Field& f = p.field();
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        gfelem c = p.coeff(i);
        if (c == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (i == 0) {
            out << element_symbol(f, c);
            continue;
        }
        if (c != 1) out << element_symbol(f, c) << "*";
        out << "x";
        if (i > 1) out << "^" << i;
    }
    return out.str();
}

std::string to_string(const GfMatrix& m) {
    const Field& f = m.field();
    std::ostringstream out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out << ' ';
            out << element_symbol(f, m.at(r, c));
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace qt2w
