#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wheelmp/closed_form.hpp"

namespace wheelmp {

/// Outcome of one named check for one (kind, n) pair.
struct CheckResult {
    MatrixKind kind;
    int n = 0;
    std::string check;
    bool pass = false;
    std::string note;
};

struct VerifyOptions {
    int lo = 4;
    int hi = 16;
    /// Largest n for which the rank-factorization oracle runs; above it the
    /// oracle-equality check is skipped with a note.
    int oracle_cutoff = 16;
    std::optional<MatrixKind> only_kind;
};

/// Checks that depend only on the bundle itself: the four Moore-Penrose
/// equations against the base matrix, the block-identity and generator
/// identities of the bundle's kind, and structural facts (X symmetric,
/// hub row shape, zero row sums). Accepts any bundle, so tests can feed a
/// tampered one and watch the specific failing check.
std::vector<CheckResult> check_bundle(const PinvBundle& bundle);

/// Full check set for one (kind, n): check_bundle on the block-route bundle,
/// plus oracle equality (when n <= oracle_cutoff), block/entrywise route
/// equivalence (n >= 5, skipped-and-noted at n = 4), the circulant row-sum
/// reciprocal law, and the product-form identities for the Laplacian kinds.
std::vector<CheckResult> verify_one(MatrixKind kind, int n, int oracle_cutoff);

std::vector<CheckResult> verify_range(const VerifyOptions& options);

bool all_pass(const std::vector<CheckResult>& results);

/// {"results": [{kind, n, check, pass, note}...], "failures": k, "pass": bool}
nlohmann::json report_json(const std::vector<CheckResult>& results);

}  // namespace wheelmp
