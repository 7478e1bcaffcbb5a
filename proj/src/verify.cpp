#include "wheelmp/verify.hpp"

#include "wheelmp/oracle.hpp"
#include "wheelmp/wheel.hpp"

namespace wheelmp {

namespace {

void add(std::vector<CheckResult>& out, MatrixKind kind, int n, std::string check, bool pass,
         std::string note = {}) {
    out.push_back({kind, n, std::move(check), pass, std::move(note)});
}

bool is_incidence_kind(MatrixKind kind) {
    return kind == MatrixKind::incidence || kind == MatrixKind::oriented;
}

// Both sections prove their block identities against the same rim objects:
// C is the rim-cycle incidence circulant and S = C C^T + I its gram-plus-
// identity circulant, unoriented for the section-2 kinds and oriented for
// the section-3 kinds.
bool oriented_section(MatrixKind kind) {
    return kind == MatrixKind::oriented || kind == MatrixKind::laplacian;
}

void check_penrose(std::vector<CheckResult>& out, const DenseMatrix& base,
                   const PinvBundle& b) {
    oracle::PenroseReport rep = oracle::penrose_check(base, b.matrix);
    add(out, b.kind, b.n, "penrose_aha", rep.aha);
    add(out, b.kind, b.n, "penrose_hah", rep.hah);
    add(out, b.kind, b.n, "penrose_ah_sym", rep.ah_symmetric);
    add(out, b.kind, b.n, "penrose_ha_sym", rep.ha_symmetric);
}

void check_incidence_bundle(std::vector<CheckResult>& out, const PinvBundle& b,
                            const DenseMatrix& base) {
    const int n = b.n;
    const int k = n - 1;
    const Circulant& x = b.x_gen;
    const Circulant& y = *b.y_gen;
    Circulant c = rim_cycle_incidence(k, false);

    add(out, b.kind, n, "mh_identity", base * b.matrix == DenseMatrix::identity(n));
    add(out, b.kind, n, "x_column_sums_zero", x.row_sum() == Rational(0));
    add(out, b.kind, n, "x_plus_cy", x + c * y == Rational(2 * (n - 1)) * Circulant::identity(k));
    add(out, b.kind, n, "x2_plus_yty",
        x * x + y.transpose() * y ==
            Rational(n - 1) * (Circulant::all_ones(k) + Rational(2) * x));

    bool shifts = true;
    const auto& bg = x.generator();
    const auto& dg = y.generator();
    for (int j = 0; j < k; ++j) {
        if (dg[j] != Rational(1) + bg[j] + bg[(j - 1 + k) % k]) shifts = false;
    }
    add(out, b.kind, n, "y_from_x_shifts", shifts, "d_j = 1 + b_j + b_{j-1}");
}

void check_oriented_bundle(std::vector<CheckResult>& out, const PinvBundle& b,
                           const DenseMatrix& base) {
    const int n = b.n;
    const int k = n - 1;
    const Circulant& x = b.x_gen;
    const Circulant& y = *b.y_gen;
    Circulant c = rim_cycle_incidence(k, true);

    DenseMatrix projector = DenseMatrix::identity(n) -
                            DenseMatrix::constant(n, n, Rational(1, n));
    add(out, b.kind, n, "nh_projector", base * b.matrix == projector);
    add(out, b.kind, n, "x_column_sums_minus_one", x.row_sum() == Rational(-1));
    {
        // n I - J has generator (n-1, -1, ..., -1).
        std::vector<Rational> g(k, Rational(-1));
        g[0] = Rational(n - 1);
        add(out, b.kind, n, "cy_minus_x", c * y - x == Circulant(std::move(g)));
    }
    add(out, b.kind, n, "x2_plus_yty",
        x * x + y.transpose() * y ==
            Rational(-1) * Circulant::all_ones(k) - Rational(n) * x);

    bool shifts = true;
    const auto& bg = x.generator();
    const auto& dg = y.generator();
    for (int j = 0; j < k; ++j) {
        if (dg[j] != bg[(j - 1 + k) % k] - bg[j]) shifts = false;
    }
    add(out, b.kind, n, "y_from_x_shifts", shifts, "d_j = b_{j-1} - b_j");
}

void check_square_bundle(std::vector<CheckResult>& out, const PinvBundle& b) {
    const int n = b.n;
    const bool laplacian = b.kind == MatrixKind::laplacian;
    Rational prefactor = laplacian ? Rational(1, static_cast<long>(n) * n)
                                   : Rational(1, 4 * (n - 1));
    Rational corner = laplacian ? Rational(n - 1) : Rational(5);

    bool hub = b.matrix.at(0, 0) == corner * prefactor;
    for (int j = 1; j < n && hub; ++j) hub = b.matrix.at(0, j) == -prefactor;
    add(out, b.kind, n, "hub_row", hub);
    add(out, b.kind, n, "symmetric", b.matrix.is_symmetric());
    if (laplacian) {
        bool zero_sums = true;
        for (int i = 0; i < n; ++i) zero_sums = zero_sums && b.matrix.row_sum(i).is_zero();
        add(out, b.kind, n, "row_sums_zero", zero_sums);
    }
}

}  // namespace

std::vector<CheckResult> check_bundle(const PinvBundle& b) {
    std::vector<CheckResult> out;
    DenseMatrix base = build_matrix(b.kind, b.n);
    check_penrose(out, base, b);
    add(out, b.kind, b.n, "x_symmetric", b.x_gen.is_symmetric());
    switch (b.kind) {
        case MatrixKind::incidence: check_incidence_bundle(out, b, base); break;
        case MatrixKind::oriented: check_oriented_bundle(out, b, base); break;
        case MatrixKind::signless_laplacian:
        case MatrixKind::laplacian: check_square_bundle(out, b); break;
    }
    return out;
}

std::vector<CheckResult> verify_one(MatrixKind kind, int n, int oracle_cutoff) {
    PinvBundle block = pseudoinverse(kind, n, Route::block);
    std::vector<CheckResult> out = check_bundle(block);

    if (n <= oracle_cutoff) {
        DenseMatrix wanted = oracle::pseudoinverse(build_matrix(kind, n));
        add(out, kind, n, "oracle_equality", block.matrix == wanted);
    } else {
        add(out, kind, n, "oracle_equality", true,
            "skipped: n exceeds oracle cutoff " + std::to_string(oracle_cutoff));
    }

    if (n >= 5) {
        PinvBundle entry = pseudoinverse(kind, n, Route::entrywise);
        bool same = entry.matrix == block.matrix && entry.x_gen == block.x_gen &&
                    entry.y_gen == block.y_gen;
        add(out, kind, n, "route_equivalence", same);
    } else {
        add(out, kind, n, "route_equivalence", true,
            "skipped: entrywise route requires n >= 5");
    }

    {
        Circulant c = rim_cycle_incidence(n - 1, oriented_section(kind));
        Circulant gram = c * c.transpose() + Circulant::identity(n - 1);
        add(out, kind, n, "row_sum_law",
            inverse(gram).row_sum() * gram.row_sum() == Rational(1));
    }

    if (!is_incidence_kind(kind)) {
        PinvBundle tall = kind == MatrixKind::signless_laplacian ? pinv_incidence(n)
                                                                 : pinv_oriented(n);
        add(out, kind, n, "product_form",
            block.matrix == tall.matrix.transpose() * tall.matrix,
            "equals (tall pinv)^T (tall pinv)");
    }
    return out;
}

std::vector<CheckResult> verify_range(const VerifyOptions& options) {
    std::vector<CheckResult> out;
    static constexpr MatrixKind kinds[] = {MatrixKind::incidence, MatrixKind::oriented,
                                           MatrixKind::signless_laplacian,
                                           MatrixKind::laplacian};
    for (int n = options.lo; n <= options.hi; ++n) {
        for (MatrixKind kind : kinds) {
            if (options.only_kind && *options.only_kind != kind) continue;
            std::vector<CheckResult> one = verify_one(kind, n, options.oracle_cutoff);
            out.insert(out.end(), std::make_move_iterator(one.begin()),
                       std::make_move_iterator(one.end()));
        }
    }
    return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

nlohmann::json report_json(const std::vector<CheckResult>& results) {
    nlohmann::json items = nlohmann::json::array();
    int failures = 0;
    for (const auto& r : results) {
        if (!r.pass) ++failures;
        nlohmann::json item = {{"kind", to_string(r.kind)},
                               {"n", r.n},
                               {"check", r.check},
                               {"pass", r.pass}};
        if (!r.note.empty()) item["note"] = r.note;
        items.push_back(std::move(item));
    }
    return {{"results", std::move(items)}, {"failures", failures}, {"pass", failures == 0}};
}

}  // namespace wheelmp
