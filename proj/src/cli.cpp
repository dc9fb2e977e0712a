#include "pue/cli.hpp"

#include "pue/channel_sim.hpp"
#include "pue/constructions.hpp"
#include "pue/ue_bounds.hpp"
#include "pue/verifier.hpp"
#include "pue/weight_enum.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

namespace pue::cli {
namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

unsigned to_uint(const Token& t, std::size_t line, const char* what) {
    if (t.text.empty() || t.text.size() > 9
        || !std::all_of(t.text.begin(), t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw ParseError(line, t.column, std::string("expected non-negative integer ") + what + ", got '" + t.text + "'");
    }
    return static_cast<unsigned>(std::stoul(t.text));
}

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

void write_or_print(const std::optional<std::string>& path, const std::string& text, std::ostream& out) {
    if (!path) {
        out << text;
        return;
    }
    std::ofstream f(*path);
    if (!f) throw ParameterError("cannot open '" + *path + "' for writing");
    f << text;
}

std::string join_positions(const std::vector<std::size_t>& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << s[i] + 1;
    return os.str();
}

}  // namespace

GeneratorMatrix parse_matrix(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::size_t q = 0, n = 0, k = 0;
    bool have_header = false;
    std::vector<std::vector<unsigned>> rows;
    FieldPtr field;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line)) continue;
        const auto tokens = tokenize(line);
        if (!have_header) {
            if (tokens.size() != 3) throw ParseError(lineno, 0, "header must be 'q n k'");
            q = to_uint(tokens[0], lineno, "q");
            n = to_uint(tokens[1], lineno, "n");
            k = to_uint(tokens[2], lineno, "k");
            try {
                field = make_field(static_cast<unsigned>(q));
            } catch (const NotAPrimePower& e) {
                throw ParseError(lineno, tokens[0].column, e.what());
            }
            if (n < 1) throw ParseError(lineno, tokens[1].column, "n must be at least 1");
            if (k < 1 || k > n) throw ParseError(lineno, tokens[2].column, "k must satisfy 1 <= k <= n");
            have_header = true;
            continue;
        }
        if (rows.size() == k) throw ParseError(lineno, 1, "more than k = " + std::to_string(k) + " rows");
        if (tokens.size() != n) {
            const std::size_t col = tokens.size() > n ? tokens[n].column : line.size() + 1;
            throw ParseError(lineno, col, "expected " + std::to_string(n) + " symbols, got " + std::to_string(tokens.size()));
        }
        std::vector<unsigned> row;
        for (const auto& t : tokens) {
            const unsigned v = to_uint(t, lineno, "symbol");
            if (v >= q) throw ParseError(lineno, t.column, "symbol " + t.text + " not in [0, " + std::to_string(q) + ")");
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    if (!have_header) throw ParseError(lineno + 1, 0, "missing header 'q n k'");
    if (rows.size() != k) {
        throw ParseError(lineno + 1, 0, "expected " + std::to_string(k) + " rows, got " + std::to_string(rows.size()));
    }
    return GeneratorMatrix(Matrix::from_codes(field, rows));
}

GeneratorMatrix read_matrix_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError(0, 0, "cannot open '" + path + "'");
    return parse_matrix(f);
}

std::string format_matrix(const GeneratorMatrix& g) {
    std::ostringstream os;
    os << g.q() << ' ' << g.n() << ' ' << g.k() << '\n';
    for (std::size_t r = 0; r < g.k(); ++r) {
        for (std::size_t j = 0; j < g.n(); ++j) os << (j ? " " : "") << unsigned{g.matrix()(r, j).code};
        os << '\n';
    }
    return os.str();
}

LinearCode construct(const std::string& family, std::size_t n, std::size_t k, unsigned q,
                     const std::optional<std::vector<unsigned>>& v) {
    const FieldPtr field = make_field(q);
    if (family == "C") {
        if (v) throw ParameterError("C_{n,k} takes no vector");
        return build_C(n, k, field);
    }
    if (family == "D") {
        if (k < 1 || n <= k) throw ParameterError("D_{n,k,v} needs 1 <= k < n");
        return build_D(n, k, v ? FullSupportVector::from_codes(field, *v) : FullSupportVector::all_ones(field, n - k));
    }
    if (family == "E") {
        return build_E(n, k, v ? FullSupportVector::from_codes(field, *v) : FullSupportVector::all_ones(field, k));
    }
    throw ParameterError("unknown family '" + family + "' (expected C, D or E)");
}

AnalyzeOutput analyze(const LinearCode& code, std::size_t grid_points) {
    const WeightDistribution w = weight_distribution(code);
    std::ostringstream rep;
    rep << "q: " << code.q() << '\n'
        << "n: " << code.n() << '\n'
        << "k: " << code.k() << '\n'
        << "support: " << join_positions(code.support()) << '\n'
        << "support_size: " << code.support().size() << '\n'
        << "full_support: " << (has_full_support(code) ? "true" : "false") << '\n'
        << "min_distance: " << min_distance(code) << '\n'
        << "weight_distribution:";
    for (auto a : w.counts) rep << ' ' << a;
    rep << '\n';

    const auto grid = p_grid(code.q(), grid_points);
    BoundCurve curve = p_bound_curve(code.n(), code.k(), code.q(), grid);
    std::vector<double> pue_values;
    for (double p : grid) pue_values.push_back(p_ue(w, ChannelParameter(p, code.q())));
    curve.labels.insert(curve.labels.begin(), "p_ue");
    curve.columns.insert(curve.columns.begin(), std::move(pue_values));
    return {rep.str(), curve.to_csv()};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Undetected-error analysis of linear codes over GF(q)", "pue"};
    app.require_subcommand(1);

    std::string path;
    std::size_t grid = 101;
    std::optional<std::string> out_path;
    unsigned workers = 1;

    auto* analyze_cmd = app.add_subcommand("analyze", "Weight distribution, support and P_ue curves of a matrix file");
    analyze_cmd->add_option("file", path, "Matrix file")->required();
    analyze_cmd->add_option("--grid", grid, "Number of p-grid points")->check(CLI::Range(2, 1000000));
    analyze_cmd->add_option("--out", out_path, "Write the CSV here instead of standard output");

    std::string family;
    std::size_t n = 0, k = 0;
    unsigned q = 2;
    std::optional<std::vector<unsigned>> v;
    auto* construct_cmd = app.add_subcommand("construct", "Emit the generator of C_{n,k}, D_{n,k,v} or E_{n,k,v}");
    construct_cmd->add_option("family", family, "C, D or E")->required();
    construct_cmd->add_option("n", n, "Length")->required();
    construct_cmd->add_option("k", k, "Dimension")->required();
    construct_cmd->add_option("-q,--q", q, "Field order");
    construct_cmd->add_option("--v", v, "Full-support vector, comma separated")->delimiter(',');
    construct_cmd->add_option("--out", out_path, "Output matrix file");

    int theorem = 4;
    auto* verify_cmd = app.add_subcommand("verify", "Exhaustively certify a bound: 2 = full support, 4 = minimum distance 2");
    verify_cmd->add_option("theorem", theorem, "2 (full support) or 4 (minimum distance 2)")
        ->required()
        ->check(CLI::IsMember({2, 4}));
    verify_cmd->add_option("-q,--q", q, "Field order")->required();
    verify_cmd->add_option("-n,--n", n, "Length")->required();
    verify_cmd->add_option("-k,--k", k, "Dimension")->required();
    verify_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1u, 256u));
    verify_cmd->add_option("--grid", grid, "Number of grid points")->check(CLI::Range(2, 1000000));
    verify_cmd->add_option("--out", out_path, "Write machine-readable certificate lines here");

    double p = 0.0;
    std::uint64_t trials = 1000000;
    std::uint64_t seed = 1;
    auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo P_ue over the q-ary symmetric channel");
    simulate_cmd->add_option("file", path, "Matrix file")->required();
    simulate_cmd->add_option("-p,--p", p, "Symbol error probability")->required();
    simulate_cmd->add_option("--trials", trials, "Number of transmissions")->check(CLI::PositiveNumber);
    simulate_cmd->add_option("--seed", seed, "RNG seed");
    simulate_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1u, 256u));
    simulate_cmd->add_option("--out", out_path, "Write the CSV here instead of standard output");

    auto* bounds_cmd = app.add_subcommand("bounds", "CSV of the bounds on a p-grid and f, g on a z-grid");
    bounds_cmd->add_option("-q,--q", q, "Field order")->required();
    bounds_cmd->add_option("-n,--n", n, "Length")->required();
    bounds_cmd->add_option("-k,--k", k, "Dimension")->required();
    bounds_cmd->add_option("--grid", grid, "Number of grid points")->check(CLI::Range(2, 1000000));
    bounds_cmd->add_option("--out", out_path, "Prefix: writes <prefix>_p.csv and <prefix>_z.csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (analyze_cmd->parsed()) {
            const LinearCode code(read_matrix_file(path));
            const AnalyzeOutput res = analyze(code, grid);
            out << res.report;
            if (out_path) {
                write_or_print(out_path, res.csv, out);
            } else {
                out << '\n' << res.csv;
            }
        } else if (construct_cmd->parsed()) {
            write_or_print(out_path, format_matrix(construct(family, n, k, q, v).generator()), out);
        } else if (verify_cmd->parsed()) {
            const VerifyOptions opts{workers, kDefaultBudget, grid};
            const VerificationCertificate cert =
                theorem == 2 ? verify_theorem2(q, n, k, opts) : verify_theorem4(q, n, k, opts);
            out << cert.to_text();
            if (out_path) write_or_print(out_path, cert.to_lines(), out);
            return cert.certified() ? kSuccess : kViolation;
        } else if (simulate_cmd->parsed()) {
            const LinearCode code(read_matrix_file(path));
            const SimulationReport r = simulate_ue(code, ChannelParameter(p, code.q()), trials, seed, workers, path);
            write_or_print(out_path, SimulationReport::csv_header() + '\n' + r.csv_row() + '\n', out);
        } else if (bounds_cmd->parsed()) {
            make_field(q);
            const std::string pcsv = p_bound_curve(n, k, q, p_grid(q, grid)).to_csv();
            const std::string zcsv = z_bound_curve(k, q, z_grid(grid)).to_csv();
            if (out_path) {
                write_or_print(*out_path + "_p.csv", pcsv, out);
                write_or_print(*out_path + "_z.csv", zcsv, out);
            } else {
                out << pcsv << '\n' << zcsv;
            }
        }
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kBudgetExceeded;
    } catch (const ParseError& e) {
        err << path << ": " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kSuccess;
}

}  // namespace pue::cli
