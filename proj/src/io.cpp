#include "wheelmp/io.hpp"

#include <sstream>

namespace wheelmp {

std::optional<EmitFormat> emit_format_from_string(const std::string& s) {
    if (s == "csv") return EmitFormat::csv;
    if (s == "json") return EmitFormat::json;
    if (s == "latex") return EmitFormat::latex;
    return std::nullopt;
}

std::string to_decimal(const Rational& value, int digits) {
    if (digits < 0) digits = 0;
    // Round |num|/den * 10^digits half away from zero, then place the point.
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class num = abs(value.num()) * scale;
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), value.den().get_mpz_t());
    if (2 * r >= value.den()) ++q;

    std::string body = q.get_str();
    if (digits > 0) {
        if (static_cast<int>(body.size()) <= digits) {
            body.insert(0, static_cast<std::size_t>(digits) - body.size() + 1, '0');
        }
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    bool negative = value.sign() < 0 && q != 0;
    return negative ? "-" + body : body;
}

std::string entry_string(const Rational& value, const Render& render) {
    return render.exact() ? value.str() : to_decimal(value, render.float_digits);
}

std::string to_csv(const DenseMatrix& m, const Render& render) {
    std::ostringstream out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j > 0) out << ',';
            out << entry_string(m.at(i, j), render);
        }
        out << '\n';
    }
    return out.str();
}

DenseMatrix matrix_from_csv(std::string_view text) {
    std::vector<std::vector<Rational>> rows;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        if (line.empty()) continue;
        std::vector<Rational> row;
        std::size_t start = 0;
        while (true) {
            auto comma = line.find(',', start);
            row.push_back(Rational::parse(
                line.substr(start, comma == std::string_view::npos ? comma : comma - start)));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (!rows.empty() && rows.front().size() != row.size()) {
            throw ParseError("ragged CSV: row " + std::to_string(rows.size() + 1) + " has " +
                             std::to_string(row.size()) + " entries, expected " +
                             std::to_string(rows.front().size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty CSV matrix");
    DenseMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = std::move(rows[i][j]);
    return m;
}

nlohmann::json to_json(const DenseMatrix& m, const Render& render) {
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(entry_string(m.at(i, j), render));
        entries.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

DenseMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
        throw ParseError("matrix JSON must carry rows, cols and entries");
    }
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    const auto& entries = j.at("entries");
    if (rows < 0 || cols < 0 || static_cast<int>(entries.size()) != rows) {
        throw ParseError("matrix JSON row count mismatch");
    }
    DenseMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const auto& row = entries.at(i);
        if (static_cast<int>(row.size()) != cols) throw ParseError("matrix JSON column count mismatch");
        for (int jx = 0; jx < cols; ++jx) {
            m.at(i, jx) = Rational::parse(row.at(jx).get_ref<const std::string&>());
        }
    }
    return m;
}

nlohmann::json to_json(const Circulant& c) {
    nlohmann::json gen = nlohmann::json::array();
    for (const auto& v : c.generator()) gen.push_back(v.str());
    return {{"order", c.order()}, {"generator", std::move(gen)}};
}

Circulant circulant_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("generator")) {
        throw ParseError("circulant JSON must carry order and generator");
    }
    const auto& gen = j.at("generator");
    if (static_cast<int>(gen.size()) != j.at("order").get<int>()) {
        throw ParseError("circulant JSON order does not match generator length");
    }
    std::vector<Rational> g;
    g.reserve(gen.size());
    for (const auto& v : gen) g.push_back(Rational::parse(v.get_ref<const std::string&>()));
    return Circulant(std::move(g));
}

nlohmann::json to_json(const PinvBundle& b, const Render& render) {
    nlohmann::json j = {{"kind", to_string(b.kind)},
                        {"n", b.n},
                        {"route", to_string(b.route)},
                        {"matrix", to_json(b.matrix, render)},
                        {"x_generator", to_json(b.x_gen)},
                        {"y_generator", nullptr}};
    if (b.y_gen) j["y_generator"] = to_json(*b.y_gen);
    return j;
}

nlohmann::json to_json(const oracle::PenroseReport& report) {
    return {{"AHA", report.aha},
            {"HAH", report.hah},
            {"AH_sym", report.ah_symmetric},
            {"HA_sym", report.ha_symmetric}};
}

namespace {

// Least common multiple of all entry denominators; 1 for integer matrices.
mpz_class common_denominator(const DenseMatrix& m) {
    mpz_class d = 1;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), m.at(i, j).den().get_mpz_t());
    return d;
}

}  // namespace

std::string to_latex(const DenseMatrix& m, int row_rule_after, int col_rule_after,
                     const Render& render) {
    std::ostringstream out;
    mpz_class scale = 1;
    if (render.exact()) {
        scale = common_denominator(m);
        if (scale != 1) out << "\\frac{1}{" << scale.get_str() << "}";
    }
    out << "\\left[\\begin{array}{";
    for (int j = 0; j < m.cols(); ++j) {
        if (j == col_rule_after && j > 0) out << '|';
        out << 'r';
    }
    out << "}\n";
    for (int i = 0; i < m.rows(); ++i) {
        if (i == row_rule_after && i > 0) out << "\\hline\n";
        for (int j = 0; j < m.cols(); ++j) {
            if (j > 0) out << " & ";
            if (render.exact()) {
                // Scaled entries are integers by choice of the prefactor.
                mpz_class v = m.at(i, j).num() * (scale / m.at(i, j).den());
                out << v.get_str();
            } else {
                out << entry_string(m.at(i, j), render);
            }
        }
        out << " \\\\\n";
    }
    out << "\\end{array}\\right]";
    return out.str();
}

}  // namespace wheelmp
