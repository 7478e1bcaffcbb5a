// wheelmp command-line tool: emit wheel-graph matrices and their
// Moore-Penrose inverses, run the verification suite, benchmark routes.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wheelmp/closed_form.hpp"
#include "wheelmp/io.hpp"
#include "wheelmp/oracle.hpp"
#include "wheelmp/verify.hpp"
#include "wheelmp/wheel.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct EmitKind {
    wheelmp::MatrixKind kind;
    bool pinv;
};

std::optional<EmitKind> parse_emit_kind(const std::string& s) {
    bool pinv = s.rfind("pinv-", 0) == 0;
    auto kind = wheelmp::matrix_kind_from_string(pinv ? s.substr(5) : s);
    if (!kind) return std::nullopt;
    return EmitKind{*kind, pinv};
}

std::optional<std::pair<int, int>> parse_range(const std::string& s) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            int n = std::stoi(s);
            return std::make_pair(n, n);
        }
        int lo = std::stoi(s.substr(0, dots));
        int hi = std::stoi(s.substr(dots + 2));
        return std::make_pair(lo, hi);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

int default_oracle_cutoff() {
    if (const char* env = std::getenv("WHEELMP_ORACLE_CUTOFF")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring non-numeric WHEELMP_ORACLE_CUTOFF\n";
        }
    }
    return 16;
}

int write_output(const std::string& payload, const std::string& path) {
    if (path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return kExitOk;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot open '" << path << "' for writing\n";
        return kExitUsage;
    }
    out << payload;
    if (!out) {
        std::cerr << "error: failed writing '" << path << "'\n";
        return kExitUsage;
    }
    return kExitOk;
}

// LaTeX rule placement mirroring the hub/rim block partition.
std::pair<int, int> latex_rules(bool pinv, wheelmp::MatrixKind kind, int n) {
    bool tall = kind == wheelmp::MatrixKind::incidence || kind == wheelmp::MatrixKind::oriented;
    if (!tall) return {1, 1};
    if (pinv) return {n - 1, 1};
    return {1, n - 1};
}

struct EmitConfig {
    std::string kind_str;
    int n = 0;
    std::string route_str = "auto";
    std::string format_str = "json";
    std::string output;
    int float_digits = -1;
};

int run_emit(const EmitConfig& cfg) {
    auto kind = parse_emit_kind(cfg.kind_str);
    if (!kind) {
        std::cerr << "error: unknown kind '" << cfg.kind_str << "'\n";
        return kExitUsage;
    }
    auto format = wheelmp::emit_format_from_string(cfg.format_str);
    if (!format) {
        std::cerr << "error: unknown format '" << cfg.format_str << "'\n";
        return kExitUsage;
    }
    auto route = wheelmp::route_from_string(cfg.route_str);
    if (!route) {
        std::cerr << "error: unknown route '" << cfg.route_str << "'\n";
        return kExitUsage;
    }
    if (*route == wheelmp::Route::entrywise && cfg.n == 4) {
        std::cerr << "error: the entrywise route needs n >= 5 (the underlying closed-form "
                     "circulant inverse needs order above 3); use --route block for n = 4\n";
        return kExitUsage;
    }

    wheelmp::Render render{cfg.float_digits};
    std::string payload;
    auto [row_rule, col_rule] = latex_rules(kind->pinv, kind->kind, cfg.n);
    if (kind->pinv) {
        wheelmp::PinvBundle bundle = wheelmp::pseudoinverse(kind->kind, cfg.n, *route);
        switch (*format) {
            case wheelmp::EmitFormat::csv: payload = to_csv(bundle.matrix, render); break;
            case wheelmp::EmitFormat::json: payload = to_json(bundle, render).dump(2); break;
            case wheelmp::EmitFormat::latex:
                payload = to_latex(bundle.matrix, row_rule, col_rule, render);
                break;
        }
        if (*format != wheelmp::EmitFormat::json) {
            std::cerr << "route: " << to_string(bundle.route) << "\n";
        }
    } else {
        wheelmp::DenseMatrix m = wheelmp::build_matrix(kind->kind, cfg.n);
        switch (*format) {
            case wheelmp::EmitFormat::csv: payload = to_csv(m, render); break;
            case wheelmp::EmitFormat::json: payload = to_json(m, render).dump(2); break;
            case wheelmp::EmitFormat::latex: payload = to_latex(m, row_rule, col_rule, render); break;
        }
    }
    return write_output(payload, cfg.output);
}

struct VerifyConfig {
    std::string range_str = "4..16";
    std::string kind_str = "all";
    int oracle_cutoff = default_oracle_cutoff();
    std::string output;
};

int run_verify(const VerifyConfig& cfg) {
    auto range = parse_range(cfg.range_str);
    if (!range || range->first < 4 || range->first > range->second) {
        std::cerr << "error: --range must be LO..HI with 4 <= LO <= HI\n";
        return kExitUsage;
    }
    wheelmp::VerifyOptions options;
    options.lo = range->first;
    options.hi = range->second;
    options.oracle_cutoff = cfg.oracle_cutoff;
    if (cfg.kind_str != "all") {
        auto kind = wheelmp::matrix_kind_from_string(cfg.kind_str);
        if (!kind) {
            std::cerr << "error: unknown kind '" << cfg.kind_str << "'\n";
            return kExitUsage;
        }
        options.only_kind = *kind;
    }

    std::vector<wheelmp::CheckResult> results = wheelmp::verify_range(options);
    nlohmann::json report = wheelmp::report_json(results);
    int rc = write_output(report.dump(2), cfg.output);
    if (rc != kExitOk) return rc;

    for (const auto& r : results) {
        if (!r.pass) {
            std::cerr << "FAIL " << to_string(r.kind) << " n=" << r.n << " " << r.check << "\n";
        }
    }
    return wheelmp::all_pass(results) ? kExitOk : kExitVerificationFailure;
}

struct BenchConfig {
    std::string range_str;
    std::string kind_str = "incidence";
    std::string format_str = "json";
    int oracle_cutoff = default_oracle_cutoff();
    std::string output;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

nlohmann::json bench_row(wheelmp::MatrixKind kind, int n, int oracle_cutoff) {
    using clock = std::chrono::steady_clock;
    bool section2 = kind == wheelmp::MatrixKind::incidence ||
                    kind == wheelmp::MatrixKind::signless_laplacian;

    nlohmann::json row{{"kind", to_string(kind)}, {"n", n}};
    std::string note;
    if (n >= 5) {
        auto t0 = clock::now();
        auto g = section2 ? wheelmp::incidence_generators_entrywise(n)
                          : wheelmp::oriented_generators_entrywise(n);
        row["entrywise_seconds"] = seconds_since(t0);
        (void)g;
    } else {
        row["entrywise_seconds"] = nullptr;
        note = "entrywise route needs n >= 5";
    }
    {
        auto t0 = clock::now();
        auto g = section2 ? wheelmp::incidence_generators_block(n)
                          : wheelmp::oriented_generators_block(n);
        row["block_seconds"] = seconds_since(t0);
        (void)g;
    }
    if (n <= oracle_cutoff) {
        auto t0 = clock::now();
        wheelmp::oracle::pseudoinverse(wheelmp::build_matrix(kind, n));
        row["oracle_seconds"] = seconds_since(t0);
    } else {
        row["oracle_seconds"] = nullptr;
        if (!note.empty()) note += "; ";
        note += "oracle skipped above cutoff " + std::to_string(oracle_cutoff);
    }
    if (!note.empty()) row["note"] = note;
    return row;
}

int run_bench(const BenchConfig& cfg) {
    auto range = parse_range(cfg.range_str);
    if (!range || range->first < 4 || range->first > range->second) {
        std::cerr << "error: --range must be LO..HI with 4 <= LO <= HI\n";
        return kExitUsage;
    }
    std::vector<wheelmp::MatrixKind> kinds;
    if (cfg.kind_str == "all") {
        kinds = {wheelmp::MatrixKind::incidence, wheelmp::MatrixKind::oriented,
                 wheelmp::MatrixKind::signless_laplacian, wheelmp::MatrixKind::laplacian};
    } else {
        auto kind = wheelmp::matrix_kind_from_string(cfg.kind_str);
        if (!kind) {
            std::cerr << "error: unknown kind '" << cfg.kind_str << "'\n";
            return kExitUsage;
        }
        kinds = {*kind};
    }
    if (cfg.format_str != "json" && cfg.format_str != "csv") {
        std::cerr << "error: bench format must be json or csv\n";
        return kExitUsage;
    }

    nlohmann::json rows = nlohmann::json::array();
    for (int n = range->first; n <= range->second; ++n) {
        for (auto kind : kinds) rows.push_back(bench_row(kind, n, cfg.oracle_cutoff));
    }

    if (cfg.format_str == "json") {
        return write_output(rows.dump(2), cfg.output);
    }
    std::ostringstream csv;
    csv << "kind,n,entrywise_seconds,block_seconds,oracle_seconds,note\n";
    for (const auto& row : rows) {
        auto cell = [&row](const char* key) -> std::string {
            if (!row.contains(key) || row.at(key).is_null()) return "";
            std::ostringstream v;
            v << row.at(key);
            std::string s = v.str();
            if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
                s = s.substr(1, s.size() - 2);
            }
            return s;
        };
        csv << cell("kind") << ',' << cell("n") << ',' << cell("entrywise_seconds") << ','
            << cell("block_seconds") << ',' << cell("oracle_seconds") << ',' << cell("note")
            << '\n';
    }
    return write_output(csv.str(), cfg.output);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact wheel-graph matrices and their Moore-Penrose inverses"};
    app.require_subcommand(1);

    EmitConfig emit_cfg;
    CLI::App* emit = app.add_subcommand("emit", "Emit a matrix or pseudoinverse");
    emit->add_option("--kind", emit_cfg.kind_str,
                     "incidence | oriented | signless-laplacian | laplacian, or pinv-<kind>")
        ->required();
    emit->add_option("--n", emit_cfg.n, "wheel size (vertices), n >= 4")->required();
    emit->add_option("--route", emit_cfg.route_str, "block | entrywise | auto (default auto)");
    emit->add_option("--format", emit_cfg.format_str, "csv | json | latex (default json)");
    emit->add_option("--output", emit_cfg.output, "output file (default stdout)");
    emit->add_option("--float", emit_cfg.float_digits,
                     "render lossy decimals with this many fractional digits");

    VerifyConfig verify_cfg;
    CLI::App* verify = app.add_subcommand("verify", "Run the verification suite over a range of n");
    verify->add_option("--range", verify_cfg.range_str, "LO..HI (default 4..16)");
    verify->add_option("--kind", verify_cfg.kind_str, "restrict to one kind (default all)");
    verify->add_option("--oracle-cutoff", verify_cfg.oracle_cutoff,
                       "largest n for the exact oracle (default 16, env WHEELMP_ORACLE_CUTOFF)");
    verify->add_option("--output", verify_cfg.output, "report file (default stdout)");

    BenchConfig bench_cfg;
    CLI::App* bench = app.add_subcommand("bench", "Time the routes per n");
    bench->add_option("--range", bench_cfg.range_str, "LO..HI")->required();
    bench->add_option("--kind", bench_cfg.kind_str, "kind or all (default incidence)");
    bench->add_option("--format", bench_cfg.format_str, "json | csv (default json)");
    bench->add_option("--oracle-cutoff", bench_cfg.oracle_cutoff,
                      "largest n for the exact oracle (default 16)");
    bench->add_option("--output", bench_cfg.output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (emit->parsed()) return run_emit(emit_cfg);
        if (verify->parsed()) return run_verify(verify_cfg);
        if (bench->parsed()) return run_bench(bench_cfg);
    } catch (const wheelmp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
