#include "wheelmp/closed_form.hpp"

#include "wheelmp/quad_ext.hpp"

namespace wheelmp {

std::string to_string(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::incidence: return "incidence";
        case MatrixKind::oriented: return "oriented";
        case MatrixKind::signless_laplacian: return "signless_laplacian";
        case MatrixKind::laplacian: return "laplacian";
    }
    return "?";
}

std::string to_string(Route route) {
    switch (route) {
        case Route::block: return "block";
        case Route::entrywise: return "entrywise";
        case Route::automatic: return "auto";
    }
    return "?";
}

std::optional<MatrixKind> matrix_kind_from_string(const std::string& s) {
    if (s == "incidence") return MatrixKind::incidence;
    if (s == "oriented") return MatrixKind::oriented;
    if (s == "signless_laplacian" || s == "signless-laplacian") return MatrixKind::signless_laplacian;
    if (s == "laplacian") return MatrixKind::laplacian;
    return std::nullopt;
}

std::optional<Route> route_from_string(const std::string& s) {
    if (s == "block") return Route::block;
    if (s == "entrywise") return Route::entrywise;
    if (s == "auto") return Route::automatic;
    return std::nullopt;
}

DenseMatrix build_matrix(MatrixKind kind, int n) {
    WheelSpec spec(n);
    switch (kind) {
        case MatrixKind::incidence: return incidence_matrix(spec);
        case MatrixKind::oriented: return oriented_incidence_matrix(spec);
        case MatrixKind::signless_laplacian: return signless_laplacian_matrix(spec);
        case MatrixKind::laplacian: return laplacian_matrix(spec);
    }
    throw DomainError("unknown matrix kind");
}

GeneratorPair incidence_generators_block(int n) {
    WheelSpec spec(n);
    const int k = spec.rim_order();
    Circulant c = rim_cycle_incidence(k, false);
    Circulant gram = c * c.transpose() + Circulant::identity(k);  // circ(3,1,0,...,0,1)
    Circulant gram_inv = inverse(gram);
    // (n-1) I - J has generator (n-2, -1, ..., -1).
    std::vector<Rational> g(k, Rational(-1));
    g[0] = Rational(n - 2);
    Circulant x = (gram_inv * Circulant(std::move(g))) * Rational(2);
    Circulant y = Circulant::all_ones(k) + c.transpose() * x;
    return {std::move(x), std::move(y)};
}

GeneratorPair oriented_generators_block(int n) {
    WheelSpec spec(n);
    const int k = spec.rim_order();
    Circulant c = rim_cycle_incidence(k, true);
    Circulant gram = c * c.transpose() + Circulant::identity(k);  // circ(3,-1,0,...,0,-1)
    Circulant gram_inv = inverse(gram);
    // J - n I has generator (1-n, 1, ..., 1).
    std::vector<Rational> g(k, Rational(1));
    g[0] = Rational(1 - n);
    Circulant x = gram_inv * Circulant(std::move(g));
    Circulant y = (c.transpose() * x) * Rational(-1);
    return {std::move(x), std::move(y)};
}

namespace {

void require_entrywise_n(int n, const char* block_name) {
    if (n < 4) WheelSpec{n};  // throws with the size message
    if (n < 5) {
        throw DomainError("entrywise route requires n >= 5 (order n-1 > 3); use " +
                          std::string(block_name) + " for n = 4");
    }
}

const mpz_class kDisc5 = 5;

struct EntrywiseBasis {
    QuadExt root;         // w or u, the +sqrt(5) branch
    QuadExt root_conj;    // its conjugate
    QuadExt inv_den;      // 1 / (2^{n-1} - root^{n-1})
    QuadExt inv_den_conj; // 1 / (2^{n-1} - root_conj^{n-1})
    QuadExt inv_sqrt5;    // 1 / sqrt(5)
};

EntrywiseBasis make_basis(int n, const Rational& root_rat_part) {
    QuadExt root(root_rat_part, Rational(1), kDisc5);
    QuadExt root_conj = root.conj();
    Rational p = Rational::pow2(n - 1);
    QuadExt den = p - root.pow(static_cast<unsigned long>(n - 1));
    QuadExt den_conj = p - root_conj.pow(static_cast<unsigned long>(n - 1));
    QuadExt one = QuadExt::one(kDisc5);
    return {root, root_conj, one / den, one / den_conj, one / QuadExt::root(kDisc5)};
}

}  // namespace

GeneratorPair incidence_generators_entrywise(int n) {
    require_entrywise_n(n, "the block incidence route");
    const int k = n - 1;
    // X = circ(b_0..b_{n-2}) with
    // b_j = -2/5 + 2^{n-j}(n-1)/sqrt(5) * (w^j/(2^{n-1}-w^{n-1}) - cj(w)^j/(2^{n-1}-cj(w)^{n-1})),
    // w = -3 + sqrt(5).
    EntrywiseBasis f = make_basis(n, Rational(-3));
    const Rational n_minus_1(n - 1);
    const Rational minus_two_fifths(-2, 5);
    const Rational one_fifth(1, 5);

    std::vector<Rational> b(k);
    {
        QuadExt p1 = QuadExt::one(kDisc5);
        QuadExt p2 = QuadExt::one(kDisc5);
        Rational pw = Rational::pow2(n);  // 2^{n-j}
        for (int j = 0; j < k; ++j) {
            QuadExt t = p1 * f.inv_den - p2 * f.inv_den_conj;
            QuadExt value = minus_two_fifths + (pw * n_minus_1) * (t * f.inv_sqrt5);
            b[j] = value.to_rational();
            if (j + 1 < k) {
                p1 *= f.root;
                p2 *= f.root_conj;
                pw /= Rational(2);
            }
        }
    }

    // Y = circ(d_0..d_{n-2}); d_0 has its own display, then for j >= 1
    // d_j = 1/5 + 2^{n+1-j}(n-1)/(5+sqrt(5)) * (2 w^{j-1}/den - cj(w)^j/den_conj).
    std::vector<Rational> d(k);
    {
        Rational pw_nm2 = Rational::pow2(n - 2);
        QuadExt t0 = (pw_nm2 + f.root.pow(static_cast<unsigned long>(n - 2))) * f.inv_den -
                     (pw_nm2 + f.root_conj.pow(static_cast<unsigned long>(n - 2))) * f.inv_den_conj;
        QuadExt v0 = one_fifth + (Rational(4) * n_minus_1) * (t0 * f.inv_sqrt5);
        d[0] = v0.to_rational();

        QuadExt inv_5_plus_sqrt5 = QuadExt::one(kDisc5) / QuadExt(Rational(5), Rational(1), kDisc5);
        QuadExt q1 = QuadExt::one(kDisc5);  // w^{j-1}
        QuadExt q2 = f.root_conj;           // cj(w)^j
        Rational pw = Rational::pow2(n);    // 2^{n+1-j}
        for (int j = 1; j < k; ++j) {
            QuadExt t = Rational(2) * (q1 * f.inv_den) - q2 * f.inv_den_conj;
            QuadExt value = one_fifth + (pw * n_minus_1) * (t * inv_5_plus_sqrt5);
            d[j] = value.to_rational();
            if (j + 1 < k) {
                q1 *= f.root;
                q2 *= f.root_conj;
                pw /= Rational(2);
            }
        }
    }
    return {Circulant(std::move(b)), Circulant(std::move(d))};
}

GeneratorPair oriented_generators_entrywise(int n) {
    require_entrywise_n(n, "the block oriented route");
    const int k = n - 1;
    // X = circ(b_0..b_{n-2}) with
    // b_j = 1 + n 2^{n-1-j}/sqrt(5) * (u^j/(2^{n-1}-u^{n-1}) - cj(u)^j/(2^{n-1}-cj(u)^{n-1})),
    // u = 3 + sqrt(5).
    EntrywiseBasis f = make_basis(n, Rational(3));
    const Rational n_rat(n);

    std::vector<Rational> b(k);
    {
        QuadExt p1 = QuadExt::one(kDisc5);
        QuadExt p2 = QuadExt::one(kDisc5);
        Rational pw = Rational::pow2(n - 1);  // 2^{n-1-j}
        for (int j = 0; j < k; ++j) {
            QuadExt t = p1 * f.inv_den - p2 * f.inv_den_conj;
            QuadExt value = Rational(1) + (n_rat * pw) * (t * f.inv_sqrt5);
            b[j] = value.to_rational();
            if (j + 1 < k) {
                p1 *= f.root;
                p2 *= f.root_conj;
                pw /= Rational(2);
            }
        }
    }

    // d_0 = 2n/sqrt(5) * ((u^{n-2}-2^{n-2})/den - (cj(u)^{n-2}-2^{n-2})/den_conj);
    // d_j = -n 2^{n-j}/(5+sqrt(5)) * (u^j/den + 2 cj(u)^{j-1}/den_conj) for j >= 1.
    std::vector<Rational> d(k);
    {
        Rational pw_nm2 = Rational::pow2(n - 2);
        QuadExt t0 = (f.root.pow(static_cast<unsigned long>(n - 2)) - pw_nm2) * f.inv_den -
                     (f.root_conj.pow(static_cast<unsigned long>(n - 2)) - pw_nm2) * f.inv_den_conj;
        QuadExt v0 = (Rational(2) * n_rat) * (t0 * f.inv_sqrt5);
        d[0] = v0.to_rational();

        QuadExt inv_5_plus_sqrt5 = QuadExt::one(kDisc5) / QuadExt(Rational(5), Rational(1), kDisc5);
        QuadExt q1 = f.root;                // u^j
        QuadExt q2 = QuadExt::one(kDisc5);  // cj(u)^{j-1}
        Rational pw = Rational::pow2(n - 1);  // 2^{n-j}
        for (int j = 1; j < k; ++j) {
            QuadExt t = q1 * f.inv_den + Rational(2) * (q2 * f.inv_den_conj);
            QuadExt value = (-n_rat * pw) * (t * inv_5_plus_sqrt5);
            d[j] = value.to_rational();
            if (j + 1 < k) {
                q1 *= f.root;
                q2 *= f.root_conj;
                pw /= Rational(2);
            }
        }
    }
    return {Circulant(std::move(b)), Circulant(std::move(d))};
}

namespace {

// (2n-2) x n assembly shared by both incidence kinds: the prefactor times
// (top_corner * 1 | X ; bottom_corner * 1 | Y).
DenseMatrix assemble_tall(int n, const Rational& prefactor, const Rational& top_corner,
                          const Rational& bottom_corner, const Circulant& x, const Circulant& y) {
    const int k = n - 1;
    DenseMatrix h(2 * n - 2, n);
    const auto& xg = x.generator();
    const auto& yg = y.generator();
    for (int i = 0; i < k; ++i) {
        h.at(i, 0) = top_corner * prefactor;
        h.at(k + i, 0) = bottom_corner * prefactor;
        for (int j = 0; j < k; ++j) {
            h.at(i, 1 + j) = xg[(j - i + k) % k] * prefactor;
            h.at(k + i, 1 + j) = yg[(j - i + k) % k] * prefactor;
        }
    }
    return h;
}

// n x n assembly shared by both Laplacian kinds: the prefactor times
// (corner | -1^T ; -1 | diag_shift * J + x_scale * X).
DenseMatrix assemble_square(int n, const Rational& prefactor, const Rational& corner,
                            const Rational& diag_shift, const Rational& x_scale,
                            const Circulant& x) {
    const int k = n - 1;
    DenseMatrix h(n, n);
    h.at(0, 0) = corner * prefactor;
    for (int i = 1; i < n; ++i) {
        h.at(0, i) = -prefactor;
        h.at(i, 0) = -prefactor;
    }
    const auto& xg = x.generator();
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            h.at(1 + i, 1 + j) = (diag_shift + x_scale * xg[(j - i + k) % k]) * prefactor;
    return h;
}

GeneratorPair incidence_generators(int n, Route route) {
    return route == Route::entrywise ? incidence_generators_entrywise(n)
                                     : incidence_generators_block(n);
}

GeneratorPair oriented_generators(int n, Route route) {
    return route == Route::entrywise ? oriented_generators_entrywise(n)
                                     : oriented_generators_block(n);
}

Route resolve(int n, Route route) {
    if (route != Route::automatic) return route;
    return n >= 5 ? Route::entrywise : Route::block;
}

PinvBundle make_incidence_bundle(int n, Route route) {
    GeneratorPair g = incidence_generators(n, route);
    Rational prefactor(1, 2 * (n - 1));
    DenseMatrix h = assemble_tall(n, prefactor, Rational(2), Rational(-1), g.x, g.y);
    return {MatrixKind::incidence, n, route, std::move(h), std::move(g.x), std::move(g.y)};
}

PinvBundle make_oriented_bundle(int n, Route route) {
    GeneratorPair g = oriented_generators(n, route);
    Rational prefactor(1, n);
    DenseMatrix h = assemble_tall(n, prefactor, Rational(1), Rational(0), g.x, g.y);
    return {MatrixKind::oriented, n, route, std::move(h), std::move(g.x), std::move(g.y)};
}

PinvBundle make_signless_bundle(int n, Route route) {
    Circulant x = incidence_generators(n, route).x;
    Rational prefactor(1, 4 * (n - 1));
    DenseMatrix h = assemble_square(n, prefactor, Rational(5), Rational(1), Rational(2), x);
    return {MatrixKind::signless_laplacian, n, route, std::move(h), std::move(x), std::nullopt};
}

PinvBundle make_laplacian_bundle(int n, Route route) {
    Circulant x = oriented_generators(n, route).x;
    Rational prefactor(1, static_cast<long>(n) * n);
    DenseMatrix h = assemble_square(n, prefactor, Rational(n - 1), Rational(-1), Rational(-n), x);
    return {MatrixKind::laplacian, n, route, std::move(h), std::move(x), std::nullopt};
}

}  // namespace

PinvBundle pinv_incidence(int n) { return make_incidence_bundle(n, Route::block); }
PinvBundle pinv_incidence_entrywise(int n) { return make_incidence_bundle(n, Route::entrywise); }

PinvBundle pinv_signless_laplacian(int n, Route route) {
    return make_signless_bundle(n, resolve(n, route));
}

PinvBundle pinv_oriented(int n) { return make_oriented_bundle(n, Route::block); }
PinvBundle pinv_oriented_entrywise(int n) { return make_oriented_bundle(n, Route::entrywise); }

PinvBundle pinv_laplacian(int n, Route route) {
    return make_laplacian_bundle(n, resolve(n, route));
}

PinvBundle pseudoinverse(MatrixKind kind, int n, Route route) {
    Route r = resolve(n, route);
    switch (kind) {
        case MatrixKind::incidence: return make_incidence_bundle(n, r);
        case MatrixKind::oriented: return make_oriented_bundle(n, r);
        case MatrixKind::signless_laplacian: return make_signless_bundle(n, r);
        case MatrixKind::laplacian: return make_laplacian_bundle(n, r);
    }
    throw DomainError("unknown matrix kind");
}

}  // namespace wheelmp
