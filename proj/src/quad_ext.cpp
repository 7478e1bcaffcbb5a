#include "wheelmp/quad_ext.hpp"

#include <cctype>

namespace wheelmp {

QuadExt QuadExt::pow(unsigned long k) const {
    QuadExt base = *this;
    QuadExt acc = QuadExt::one(d_);
    while (k > 0) {
        if (k & 1) acc *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return acc;
}

std::string QuadExt::str() const {
    return a_.str() + " + " + b_.str() + "*sqrt(" + d_.get_str() + ")";
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Splits off the top-level "+ ..." or "- ..." term holding the surd. The
// split point is the last +/- with whitespace on both sides, so a sign glued
// onto "a" or "b" (as in "1/4 + -1/2*sqrt(5)") is never mistaken for the
// separator.
std::size_t find_term_split(std::string_view s) {
    for (std::size_t i = s.size() - 1; i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') &&
            std::isspace(static_cast<unsigned char>(s[i - 1])) &&
            std::isspace(static_cast<unsigned char>(s[i + 1]))) {
            return i;
        }
    }
    return std::string_view::npos;
}

}  // namespace

QuadExt QuadExt::parse(std::string_view text) {
    std::string_view s = trim(text);
    auto star = s.rfind("*sqrt(");
    if (star == std::string_view::npos || s.back() != ')') {
        throw ParseError("malformed quadratic-extension literal '" + std::string(text) + "'");
    }
    std::string_view disc_part = s.substr(star + 6, s.size() - star - 7);
    std::string_view head = trim(s.substr(0, star));

    auto split = find_term_split(head);
    if (split == std::string_view::npos) {
        throw ParseError("malformed quadratic-extension literal '" + std::string(text) + "'");
    }
    char op = head[split];
    std::string_view a_part = trim(head.substr(0, split));
    std::string_view b_part = trim(head.substr(split + 1));

    Rational a = Rational::parse(a_part);
    Rational b = Rational::parse(b_part);
    if (op == '-') b = -b;
    mpz_class d;
    try {
        d = mpz_class(std::string(trim(disc_part)), 10);
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed discriminant in '" + std::string(text) + "'");
    }
    return QuadExt(std::move(a), std::move(b), std::move(d));
}

}  // namespace wheelmp
