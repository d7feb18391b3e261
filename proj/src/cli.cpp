#include "ncps/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>

#include "ncps/combinatorics.hpp"
#include "ncps/cumulants.hpp"
#include "ncps/json_io.hpp"
#include "ncps/series.hpp"
#include "ncps/verify.hpp"

namespace ncps {

namespace {

struct ConvertArgs {
    std::string kind;
    std::string direction;
    std::string input;
    std::string output;
    bool pretty = false;
};

struct OpArgs {
    std::string name;
    std::vector<std::string> inputs;
    std::string output;
    bool t_param = false;
    bool pretty = false;
};

struct OracleArgs {
    std::string name;
    std::string input;
    std::string output;
    int formula_n = 0;
    int max_degree = 10;
    int cap = 0; // 0 -> per-oracle default
};

CumulantKind parse_kind(const std::string& kind) {
    if (kind == "free") return CumulantKind::free;
    if (kind == "boolean") return CumulantKind::boolean;
    if (kind == "monotone") return CumulantKind::monotone;
    throw std::invalid_argument("unknown cumulant kind '" + kind + "'");
}

const QSeries& as_rational(const SeriesDocument& doc, const std::string& context) {
    if (!std::holds_alternative<QSeries>(doc)) {
        throw std::invalid_argument(context + ": expected ring \"rational\"");
    }
    return std::get<QSeries>(doc);
}

int run_convert(const ConvertArgs& args, std::ostream& out) {
    const CumulantKind kind = parse_kind(args.kind);
    const QSeries input = as_rational(load_series_document(args.input), args.input);
    QSeries result(input.alphabet(), input.degree_cap());
    if (args.direction == "m2c") {
        const MomentSeries moments(input);
        switch (kind) {
            case CumulantKind::free: result = free_from_moments(moments).series(); break;
            case CumulantKind::boolean: result = boolean_from_moments(moments).series(); break;
            case CumulantKind::monotone: result = monotone_from_moments(moments).series(); break;
        }
    } else if (args.direction == "c2m") {
        const CumulantSeries cumulants(input, kind);
        switch (kind) {
            case CumulantKind::free: result = moments_from_free(cumulants).series(); break;
            case CumulantKind::boolean: result = moments_from_boolean(cumulants).series(); break;
            case CumulantKind::monotone: result = moments_from_monotone(cumulants).series(); break;
        }
    } else {
        throw std::invalid_argument("direction must be m2c or c2m");
    }
    save_series_document(SeriesDocument(result), args.output);
    if (args.pretty) out << pretty_series(result) << "\n";
    return 0;
}

template <typename R>
TruncatedSeries<R> apply_op(const std::string& name,
                            const std::vector<TruncatedSeries<R>>& operands) {
    const auto& a = operands.front();
    if (name == "inv") return cauchy_inv(a);
    if (name == "sinv") return shifted_inverse(a);
    if (name == "exp") return group_exp(a);
    if (name == "log") return group_log(a);
    const auto& b = operands.back();
    if (name == "mul") return cauchy_mul(a, b);
    if (name == "compose") return shifted_compose(a, b);
    if (name == "substitute") return shifted_substitute(a, b);
    if (name == "prelie") return pre_lie(a, b);
    if (name == "bracket") return lie_bracket(a, b);
    if (name == "bch") return group_bch(a, b);
    throw std::invalid_argument("unknown operation '" + name + "'");
}

int run_op(const OpArgs& args, std::ostream& out) {
    static const std::vector<std::string> unary{"inv", "sinv", "exp", "log", "flow"};
    static const std::vector<std::string> binary{"mul",    "compose", "substitute",
                                                 "prelie", "bracket", "bch"};
    const bool is_unary = std::find(unary.begin(), unary.end(), args.name) != unary.end();
    const bool is_binary = std::find(binary.begin(), binary.end(), args.name) != binary.end();
    if (!is_unary && !is_binary) throw std::invalid_argument("unknown operation '" + args.name + "'");
    const size_t expected = is_unary ? 1 : 2;
    if (args.inputs.size() != expected) {
        throw std::invalid_argument("operation '" + args.name + "' takes " +
                                    std::to_string(expected) + " operand(s)");
    }

    std::vector<SeriesDocument> docs;
    for (const std::string& path : args.inputs) docs.push_back(load_series_document(path));
    if (args.t_param) {
        for (auto& doc : docs) {
            if (std::holds_alternative<QSeries>(doc)) {
                doc = SeriesDocument(embed_poly(std::get<QSeries>(doc)));
            }
        }
    }

    SeriesDocument result = [&]() -> SeriesDocument {
        if (args.name == "flow") {
            return SeriesDocument(flow(as_rational(docs.front(), args.inputs.front())));
        }
        const bool all_rational = std::all_of(docs.begin(), docs.end(), [](const auto& d) {
            return std::holds_alternative<QSeries>(d);
        });
        const bool all_poly = std::all_of(docs.begin(), docs.end(), [](const auto& d) {
            return std::holds_alternative<PolySeries>(d);
        });
        if (all_rational) {
            std::vector<QSeries> operands;
            for (const auto& d : docs) operands.push_back(std::get<QSeries>(d));
            return SeriesDocument(apply_op(args.name, operands));
        }
        if (all_poly) {
            std::vector<PolySeries> operands;
            for (const auto& d : docs) operands.push_back(std::get<PolySeries>(d));
            return SeriesDocument(apply_op(args.name, operands));
        }
        throw std::invalid_argument("operands use different rings; pass --t-param to promote");
    }();

    save_series_document(result, args.output);
    if (args.pretty) out << pretty_series(result) << "\n";
    return 0;
}

std::string render_formula(const std::vector<MonotoneFormulaTerm>& terms) {
    std::ostringstream out;
    bool first = true;
    for (const MonotoneFormulaTerm& term : terms) {
        if (!first) out << " + ";
        first = false;
        std::vector<std::string> parts;
        if (term.coefficient != 1) parts.push_back(to_string(term.coefficient));
        for (const auto& [index, power] : term.h_powers) {
            std::string part = "h" + std::to_string(index);
            if (power > 1) part += "^" + std::to_string(power);
            parts.push_back(std::move(part));
        }
        parts.push_back(term.t_power == 1 ? "t" : "t^" + std::to_string(term.t_power));
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i > 0) out << "*";
            out << parts[i];
        }
    }
    if (first) out << "0";
    return out.str();
}

void emit_series(const QSeries& series, const std::string& output_path, int table_degree,
                 std::ostream& out) {
    if (!output_path.empty()) {
        save_series_document(SeriesDocument(series), output_path);
        return;
    }
    for (const Word& w : all_words(series.alphabet(), table_degree)) {
        out << to_string(w) << "\t" << to_string(series.coefficient(w)) << "\n";
    }
}

int run_oracle(const OracleArgs& args, std::ostream& out) {
    if (args.name == "monotone-formula") {
        if (args.formula_n < 1) throw std::invalid_argument("monotone-formula requires --n >= 1");
        out << "m_" << args.formula_n << "(t) = "
            << render_formula(monotone_formula_symbolic(args.formula_n)) << "\n";
        return 0;
    }
    if (args.input.empty()) throw std::invalid_argument("oracle '" + args.name + "' requires -i");
    const QSeries input = as_rational(load_series_document(args.input), args.input);

    if (args.name == "nc-free") {
        const int cap = args.cap > 0 ? args.cap : 10;
        const int max_degree = std::min({input.degree_cap(), args.max_degree, cap});
        const CumulantSeries cumulants(input, CumulantKind::free);
        QSeries moments = QSeries::one(input.alphabet(), std::max(max_degree, 1));
        for (const Word& w : all_words(input.alphabet(), max_degree)) {
            moments.set_coefficient(w, free_oracle_nc(cumulants, w, cap));
        }
        emit_series(moments, args.output, max_degree, out);
        return 0;
    }
    if (args.name == "boolean-recursion") {
        const int max_degree = std::min(input.degree_cap(), args.max_degree);
        const CumulantSeries cumulants(input.truncated(max_degree), CumulantKind::boolean);
        emit_series(boolean_recursion_oracle(cumulants).series(), args.output, max_degree, out);
        return 0;
    }
    if (args.name == "monotone-trees") {
        const int cap = args.cap > 0 ? args.cap : 8;
        if (input.degree_cap() > cap) {
            throw std::invalid_argument("monotone-trees: truncation exceeds the tree cap " +
                                        std::to_string(cap) + " (raise with --cap)");
        }
        emit_series(monotone_tree_expansion(input).series(), args.output, input.degree_cap(),
                    out);
        return 0;
    }
    throw std::invalid_argument("unknown oracle '" + args.name + "'");
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact truncated non-commutative power series toolkit"};
    app.require_subcommand(1);

    ConvertArgs convert_args;
    auto* convert = app.add_subcommand("convert", "moment/cumulant transforms");
    convert->add_option("--kind", convert_args.kind, "free|boolean|monotone")->required();
    convert->add_option("--direction", convert_args.direction, "m2c|c2m")->required();
    convert->add_option("-i,--input", convert_args.input, "input series document")->required();
    convert->add_option("-o,--output", convert_args.output, "output series document")->required();
    convert->add_flag("--pretty", convert_args.pretty, "also print a readable rendering");

    OpArgs op_args;
    auto* op = app.add_subcommand("op", "series algebra operations");
    op->add_option("name", op_args.name,
                   "mul|inv|compose|sinv|substitute|prelie|bracket|exp|log|bch|flow")
        ->required();
    op->add_option("inputs", op_args.inputs, "operand document(s)")->expected(1, 2);
    op->add_option("-o,--output", op_args.output, "output series document")->required();
    op->add_flag("--t-param", op_args.t_param, "promote rational operands to the t-polynomial ring");
    op->add_flag("--pretty", op_args.pretty, "also print a readable rendering");

    OracleArgs oracle_args;
    auto* oracle = app.add_subcommand("oracle", "independent brute-force checks");
    oracle->add_option("name", oracle_args.name,
                       "nc-free|boolean-recursion|monotone-formula|monotone-trees")
        ->required();
    oracle->add_option("-i,--input", oracle_args.input, "input series document");
    oracle->add_option("-o,--output", oracle_args.output, "output series document");
    oracle->add_option("--n", oracle_args.formula_n, "degree for monotone-formula");
    oracle->add_option("--max-degree", oracle_args.max_degree, "table degree limit");
    oracle->add_option("--cap", oracle_args.cap, "enumeration cap override");

    VerifyOptions verify_options;
    auto* verify = app.add_subcommand("verify", "run the seeded property suites");
    verify->add_option("--alphabet", verify_options.alphabet, "alphabet size")
        ->check(CLI::PositiveNumber);
    verify->add_option("--degree", verify_options.degree, "truncation degree")
        ->check(CLI::PositiveNumber);
    verify->add_option("--trials", verify_options.trials, "trials per property")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", verify_options.seed, "random seed");

    std::vector<std::string> argv{"ncps"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::vector<const char*> raw;
    raw.reserve(argv.size());
    for (const std::string& arg : argv) raw.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (const CLI::CallForHelp& help) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& error) {
        err << "error: " << error.what() << "\n";
        return 2;
    }

    try {
        if (convert->parsed()) return run_convert(convert_args, out);
        if (op->parsed()) return run_op(op_args, out);
        if (oracle->parsed()) return run_oracle(oracle_args, out);
        if (verify->parsed()) {
            const auto results = run_verification(verify_options);
            out << format_report(results, verify_options);
            return all_passed(results) ? 0 : 1;
        }
    } catch (const std::exception& error) {
        err << "error: " << error.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

} // namespace ncps
