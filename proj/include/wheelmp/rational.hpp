#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>

#include "wheelmp/errors.hpp"

namespace wheelmp {

/// Arbitrary-precision rational number, always kept in canonical form:
/// positive denominator, gcd(|num|, den) = 1, zero stored as 0/1.
///
/// Backed by GMP's mpq_class; every constructor canonicalizes, and the
/// arithmetic operators preserve canonical form. Values are immutable in
/// spirit: operations return new values and there is no shared state, so
/// Rationals can be copied across threads freely.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long value) : v_(value) {}  // NOLINT: implicit by design
    Rational(long num, long den) { init(mpz_class(num), mpz_class(den)); }
    Rational(mpz_class num, mpz_class den) { init(std::move(num), std::move(den)); }
    explicit Rational(mpz_class value) : v_(std::move(value)) {}

    /// Parses "p/q" or "p" (optional sign, decimal digits). Throws ParseError
    /// on malformed input or a zero denominator.
    static Rational parse(std::string_view text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// Renders as "p/q", or just "p" when the denominator is 1.
    std::string str() const { return v_.get_str(); }

    /// Lossy conversion for display only; never used in computation.
    double to_double() const { return v_.get_d(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.v_;
    }

    /// 2^k as an exact rational, k may be negative.
    static Rational pow2(long k);

private:
    void init(mpz_class num, mpz_class den) {
        if (sgn(den) == 0) throw DivisionByZero("rational with zero denominator");
        v_ = mpq_class(std::move(num), std::move(den));
        v_.canonicalize();
    }

    mpq_class v_;
};

}  // namespace wheelmp
