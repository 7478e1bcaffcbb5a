#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "wheelmp/circulant.hpp"
#include "wheelmp/closed_form.hpp"
#include "wheelmp/dense_matrix.hpp"
#include "wheelmp/oracle.hpp"

namespace wheelmp {

enum class EmitFormat { csv, json, latex };

std::optional<EmitFormat> emit_format_from_string(const std::string& s);

/// How entries are rendered: exact "p/q" strings by default, or lossy
/// decimals with a fixed number of fractional digits when float_digits >= 0.
struct Render {
    int float_digits = -1;

    bool exact() const { return float_digits < 0; }
};

/// Decimal rendering with `digits` digits after the point, rounded half away
/// from zero. Lossy; display only.
std::string to_decimal(const Rational& value, int digits);

std::string entry_string(const Rational& value, const Render& render);

// CSV: one row per line, comma-separated "p/q" entries.
std::string to_csv(const DenseMatrix& m, const Render& render = {});
DenseMatrix matrix_from_csv(std::string_view text);

// JSON schemas:
//   DenseMatrix  {"rows": r, "cols": c, "entries": [["p/q", ...], ...]}
//   Circulant    {"order": k, "generator": ["p/q", ...]}
//   PinvBundle   {"kind", "n", "route", "matrix", "x_generator", "y_generator"}
nlohmann::json to_json(const DenseMatrix& m, const Render& render = {});
DenseMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Circulant& c);
Circulant circulant_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PinvBundle& b, const Render& render = {});

/// {"AHA": bool, "HAH": bool, "AH_sym": bool, "HA_sym": bool}
nlohmann::json to_json(const oracle::PenroseReport& report);

/// LaTeX array source in the block-partitioned style: a vertical rule after
/// `col_rule_after` columns and a horizontal rule after `row_rule_after`
/// rows (pass 0 to omit either). With exact rendering the least common
/// denominator is factored out as a \frac{1}{D} prefactor, so integer
/// matrices print without one.
std::string to_latex(const DenseMatrix& m, int row_rule_after, int col_rule_after,
                     const Render& render = {});

}  // namespace wheelmp
