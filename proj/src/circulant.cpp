#include "wheelmp/circulant.hpp"

#include <utility>

#include "wheelmp/quad_ext.hpp"

namespace wheelmp {

Circulant::Circulant(std::vector<Rational> generator) : gen_(std::move(generator)) {
    if (gen_.empty()) throw DomainError("circulant generator must be nonempty");
}

Circulant Circulant::identity(int order) {
    std::vector<Rational> g(order);
    g.at(0) = Rational(1);
    return Circulant(std::move(g));
}

Circulant Circulant::all_ones(int order) {
    return Circulant(std::vector<Rational>(order, Rational(1)));
}

Circulant Circulant::tridiagonal(const Rational& a, const Rational& b, const Rational& c,
                                 int order) {
    if (order < 1) throw DomainError("circulant order must be positive");
    std::vector<Rational> g(order);
    g[0] += a;
    g[1 % order] += b;
    g[(order - 1) % order] += c;
    return Circulant(std::move(g));
}

DenseMatrix Circulant::realize() const {
    const int k = order();
    DenseMatrix m(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m.at(i, j) = gen_[(j - i + k) % k];
    return m;
}

Circulant Circulant::transpose() const {
    const int k = order();
    std::vector<Rational> g(k);
    g[0] = gen_[0];
    for (int j = 1; j < k; ++j) g[j] = gen_[k - j];
    return Circulant(std::move(g));
}

Rational Circulant::row_sum() const {
    Rational s;
    for (const auto& v : gen_) s += v;
    return s;
}

bool Circulant::is_symmetric() const {
    const int k = order();
    for (int j = 1; j < k; ++j)
        if (gen_[j] != gen_[k - j]) return false;
    return true;
}

namespace {

void require_same_order(const Circulant& a, const Circulant& b, const char* op) {
    if (a.order() != b.order()) {
        throw DimensionMismatch(std::string(op) + ": orders " + std::to_string(a.order()) +
                                " and " + std::to_string(b.order()));
    }
}

}  // namespace

Circulant& Circulant::operator+=(const Circulant& o) {
    require_same_order(*this, o, "circulant addition");
    for (int j = 0; j < order(); ++j) gen_[j] += o.gen_[j];
    return *this;
}

Circulant& Circulant::operator-=(const Circulant& o) {
    require_same_order(*this, o, "circulant subtraction");
    for (int j = 0; j < order(); ++j) gen_[j] -= o.gen_[j];
    return *this;
}

Circulant& Circulant::operator*=(const Rational& s) {
    for (auto& v : gen_) v *= s;
    return *this;
}

Circulant operator*(const Circulant& a, const Circulant& b) {
    require_same_order(a, b, "circulant product");
    const int k = a.order();
    std::vector<Rational> g(k);
    for (int i = 0; i < k; ++i) {
        if (a.gen_[i].is_zero()) continue;
        for (int j = 0; j < k; ++j) {
            if (b.gen_[j].is_zero()) continue;
            g[(i + j) % k] += a.gen_[i] * b.gen_[j];
        }
    }
    return Circulant(std::move(g));
}

std::optional<TridiagCircSpec> tridiagonal_pattern(const Circulant& c) {
    const int k = c.order();
    if (k < 4) return std::nullopt;
    const auto& g = c.generator();
    for (int j = 2; j < k - 1; ++j)
        if (!g[j].is_zero()) return std::nullopt;
    return TridiagCircSpec{g[0], g[1], g[k - 1], k};
}

std::optional<std::string> searle_inapplicable_reason(const TridiagCircSpec& spec) {
    const Rational& a = spec.diag;
    const Rational& b = spec.super;
    const Rational& c = spec.sub;
    if (spec.order <= 3) return "order must exceed 3, got " + std::to_string(spec.order);
    if (b.is_zero()) return "b = 0 (superdiagonal entry must be nonzero)";
    if (c.is_zero()) return "c = 0 (z1, z2 are undefined)";
    Rational disc = a * a - Rational(4) * b * c;
    if (disc.sign() <= 0) return "a^2 > 4bc violated (a^2 - 4bc = " + disc.str() + ")";
    if ((a + b + c).is_zero()) return "a + b + c = 0 excluded";
    if (spec.order % 2 == 0 && a == b + c) return "order even with a = b + c excluded";
    // Both named exclusions imply a rational square discriminant, so this
    // guard comes last and only catches the remaining rational-root cases.
    if (mpz_perfect_square_p(disc.num().get_mpz_t()) &&
        mpz_perfect_square_p(disc.den().get_mpz_t())) {
        return "a^2 - 4bc = " + disc.str() + " is a perfect square";
    }
    return std::nullopt;
}

Circulant inverse_searle(const TridiagCircSpec& spec) {
    if (auto reason = searle_inapplicable_reason(spec)) {
        throw HypothesisViolation("closed-form circulant inverse: " + *reason);
    }
    const int k = spec.order;
    const Rational& a = spec.diag;
    const Rational& b = spec.super;
    const Rational& c = spec.sub;

    // sqrt(p/q) = sqrt(p*q)/q, so the whole evaluation lives in Q(sqrt(p*q)).
    Rational disc = a * a - Rational(4) * b * c;
    mpz_class d = disc.num() * disc.den();
    QuadExt sqrt_disc(Rational(), Rational(mpz_class(1), disc.den()), d);

    Rational two_c = Rational(2) * c;
    QuadExt z1 = (sqrt_disc - a) / two_c;
    QuadExt z2 = (-sqrt_disc - a) / two_c;

    QuadExt prefactor = (z1 * z2) / ((z1 - z2) * b);
    QuadExt w1 = QuadExt::one(d) / (QuadExt::one(d) - z1.pow(static_cast<unsigned long>(k)));
    QuadExt w2 = QuadExt::one(d) / (QuadExt::one(d) - z2.pow(static_cast<unsigned long>(k)));

    std::vector<Rational> g(k);
    QuadExt p1 = QuadExt::one(d);  // z1^j
    QuadExt p2 = QuadExt::one(d);  // z2^j
    for (int j = 0; j < k; ++j) {
        QuadExt value = prefactor * (p1 * w1 - p2 * w2);
        g[j] = value.to_rational();
        if (j + 1 < k) {
            p1 *= z1;
            p2 *= z2;
        }
    }
    return Circulant(std::move(g));
}

Circulant inverse_gauss(const Circulant& c) {
    const int k = c.order();
    DenseMatrix m = c.realize();
    DenseMatrix inv = DenseMatrix::identity(k);

    // Gauss-Jordan with the first nonzero pivot in column order.
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int i = col; i < k; ++i) {
            if (!m.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) throw SingularMatrix("circulant of order " + std::to_string(k) +
                                            " is singular");
        if (pivot != col) {
            for (int j = 0; j < k; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        Rational p = m.at(col, col);
        for (int j = 0; j < k; ++j) {
            m.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (int i = 0; i < k; ++i) {
            if (i == col || m.at(i, col).is_zero()) continue;
            Rational f = m.at(i, col);
            for (int j = 0; j < k; ++j) {
                m.at(i, j) -= f * m.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }

    // The inverse of a circulant is circulant; verify each row is the
    // cyclic shift of row 0 before reading the generator back.
    for (int i = 1; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (inv.at(i, j) != inv.at(0, (j - i + k) % k)) {
                throw Error("internal: inverse of a circulant lost circulant shape");
            }

    std::vector<Rational> g(k);
    for (int j = 0; j < k; ++j) g[j] = inv.at(0, j);
    return Circulant(std::move(g));
}

Circulant inverse(const Circulant& c) {
    if (auto spec = tridiagonal_pattern(c)) {
        if (!searle_inapplicable_reason(*spec)) return inverse_searle(*spec);
    }
    return inverse_gauss(c);
}

}  // namespace wheelmp
