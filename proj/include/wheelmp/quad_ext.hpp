#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>

#include "wheelmp/errors.hpp"
#include "wheelmp/rational.hpp"

namespace wheelmp {

/// Element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)).
///
/// d is a positive non-square integer carried per value, so the
/// representation is unique and two values may only combine arithmetically
/// when their discriminants agree (rational scalars combine with anything).
/// Division multiplies by the conjugate; the field norm a^2 - d*b^2 vanishes
/// only at zero because d is not a square, so division by any nonzero value
/// is exact.
class QuadExt {
public:
    QuadExt(Rational rat, Rational surd, mpz_class disc)
        : a_(std::move(rat)), b_(std::move(surd)), d_(std::move(disc)) {
        validate_disc(d_);
    }

    static QuadExt from_rational(Rational r, mpz_class disc) {
        return QuadExt(std::move(r), Rational(), std::move(disc));
    }
    static QuadExt zero(mpz_class disc) { return from_rational(Rational(), std::move(disc)); }
    static QuadExt one(mpz_class disc) { return from_rational(Rational(1), std::move(disc)); }
    /// sqrt(d) itself.
    static QuadExt root(mpz_class disc) { return QuadExt(Rational(), Rational(1), std::move(disc)); }

    const Rational& rat_part() const { return a_; }
    const Rational& surd_part() const { return b_; }
    const mpz_class& disc() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    /// Conjugate a - b*sqrt(d); a ring homomorphism of Q(sqrt(d)).
    QuadExt conj() const { return QuadExt(a_, -b_, d_, unchecked{}); }

    /// Field norm a^2 - d*b^2; zero iff the value is zero.
    Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

    /// k-th power by repeated squaring; x^0 = 1 for every x.
    QuadExt pow(unsigned long k) const;

    /// Returns the rational part when the sqrt(d) coefficient is exactly
    /// zero; otherwise throws SurdNotZero carrying the offending coefficient.
    Rational to_rational() const {
        if (!b_.is_zero()) {
            throw SurdNotZero("nonzero sqrt(" + d_.get_str() +
                              ") coefficient " + b_.str() + " in rational extraction");
        }
        return a_;
    }

    /// Renders as "a + b*sqrt(d)" with "p/q" syntax for a and b.
    std::string str() const;

    /// Parses "a + b*sqrt(d)" and the "a - b*sqrt(d)" variant.
    static QuadExt parse(std::string_view text);

    QuadExt& operator+=(const QuadExt& o) {
        check_same_disc(o);
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    QuadExt& operator-=(const QuadExt& o) {
        check_same_disc(o);
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    QuadExt& operator*=(const QuadExt& o) {
        check_same_disc(o);
        Rational a = a_ * o.a_ + Rational(d_) * b_ * o.b_;
        Rational b = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }
    QuadExt& operator/=(const QuadExt& o) {
        check_same_disc(o);
        if (o.is_zero()) throw DivisionByZero("quadratic-extension division by zero");
        Rational n = o.norm();  // nonzero since o != 0 and d non-square
        QuadExt c = o.conj();
        *this *= c;
        a_ /= n;
        b_ /= n;
        return *this;
    }

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { x += y; return x; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { x -= y; return x; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { x *= y; return x; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { x /= y; return x; }
    friend QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a_, -x.b_, x.d_, unchecked{}); }

    // Rational scalars live in every Q(sqrt(d)); no discriminant check applies.
    friend QuadExt operator+(QuadExt x, const Rational& r) { x.a_ += r; return x; }
    friend QuadExt operator+(const Rational& r, QuadExt x) { x.a_ += r; return x; }
    friend QuadExt operator-(QuadExt x, const Rational& r) { x.a_ -= r; return x; }
    friend QuadExt operator-(const Rational& r, const QuadExt& x) { return -x + r; }
    friend QuadExt operator*(QuadExt x, const Rational& r) {
        x.a_ *= r;
        x.b_ *= r;
        return x;
    }
    friend QuadExt operator*(const Rational& r, QuadExt x) { return std::move(x) * r; }
    friend QuadExt operator/(QuadExt x, const Rational& r) {
        if (r.is_zero()) throw DivisionByZero("quadratic-extension division by zero");
        x.a_ /= r;
        x.b_ /= r;
        return x;
    }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    friend std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

private:
    struct unchecked {};
    QuadExt(Rational a, Rational b, mpz_class d, unchecked)
        : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

    static void validate_disc(const mpz_class& d) {
        if (sgn(d) <= 0) throw DomainError("discriminant must be positive, got " + d.get_str());
        if (mpz_perfect_square_p(d.get_mpz_t())) {
            throw DomainError("discriminant " + d.get_str() + " is a perfect square");
        }
    }

    void check_same_disc(const QuadExt& o) const {
        if (d_ != o.d_) {
            throw DiscriminantMismatch("mixed discriminants sqrt(" + d_.get_str() +
                                       ") and sqrt(" + o.d_.get_str() + ")");
        }
    }

    Rational a_;   // coefficient of 1
    Rational b_;   // coefficient of sqrt(d)
    mpz_class d_;  // positive non-square
};

}  // namespace wheelmp
