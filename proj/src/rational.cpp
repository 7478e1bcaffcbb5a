#include "wheelmp/rational.hpp"

#include <cctype>

namespace wheelmp {

namespace {

// Strict integer literal: optional sign followed by at least one digit.
// GMP's own parser silently ignores embedded whitespace, so validate here.
bool valid_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty rational literal");

    std::string_view num_part = s;
    std::string_view den_part;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num_part = trim(s.substr(0, slash));
        den_part = trim(s.substr(slash + 1));
        if (den_part.empty()) throw ParseError("missing denominator in '" + std::string(text) + "'");
    }
    if (!valid_integer(num_part)) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class num(std::string(num_part), 10);
    if (den_part.empty()) return Rational(std::move(num));

    if (!valid_integer(den_part)) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class den(std::string(den_part), 10);
    if (sgn(den) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(std::move(num), std::move(den));
}

Rational Rational::pow2(long k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k >= 0 ? k : -k));
    if (k >= 0) return Rational(std::move(p));
    return Rational(mpz_class(1), std::move(p));
}

}  // namespace wheelmp
