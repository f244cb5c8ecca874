#include "minorlab/cli.hpp"

#include "minorlab/claims.hpp"
#include "minorlab/identities.hpp"
#include "minorlab/minors.hpp"
#include "minorlab/solver.hpp"
#include "minorlab/spec_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>

namespace minorlab {

namespace {

using nlohmann::json;

void require_inputs(const RunConfig& cfg, std::size_t at_least, const char* flag)
{
    if (cfg.inputs.size() < at_least)
        throw std::invalid_argument(std::string("missing ") + flag);
}

json scalar_array(const std::vector<QuadScalar>& xs)
{
    json out = json::array();
    for (const auto& x : xs)
        out.push_back(to_string(x));
    return out;
}

void print_indexed(std::ostream& out, OutputFormat format, const char* key, const std::vector<QuadScalar>& xs,
                   json extra = json::object())
{
    if (format == OutputFormat::json) {
        extra[key] = scalar_array(xs);
        out << extra.dump(2) << '\n';
        return;
    }
    out << "index,value\n";
    for (std::size_t k = 0; k < xs.size(); ++k)
        out << k << ',' << to_string(xs[k]) << '\n';
}

int cmd_seq(const RunConfig& cfg, std::ostream& out)
{
    require_inputs(cfg, 1, "--spec");
    const auto spec = load_sequence_spec(cfg.inputs.front());
    const std::size_t count = cfg.bound.value_or(11);
    std::vector<QuadScalar> terms;
    if (count > 0)
        terms = materialize(spec, count - 1).terms;
    print_indexed(out, cfg.format, "terms", terms);
    return exit_code::ok;
}

int cmd_build(const RunConfig& cfg, std::ostream& out)
{
    require_inputs(cfg, 1, "--spec");
    const auto m = build(load_matrix_spec(cfg.inputs.front()));
    if (cfg.format == OutputFormat::json) {
        json rows = json::array();
        for (std::size_t i = 0; i < m.order(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < m.order(); ++j)
                row.push_back(to_string(m(i, j)));
            rows.push_back(row);
        }
        out << json{{"field", {{"d", m.field().d()}}}, {"order", m.order()}, {"rows", rows}}.dump(2) << '\n';
        return exit_code::ok;
    }
    for (std::size_t i = 0; i < m.order(); ++i) {
        for (std::size_t j = 0; j < m.order(); ++j)
            out << (j ? "," : "") << to_string(m(i, j));
        out << '\n';
    }
    return exit_code::ok;
}

bool same_params(const GibonacciParams& x, const GibonacciParams& y)
{
    return x.a == y.a && x.b == y.b && x.r == y.r && x.s == y.s;
}

/// Recognizes T_{G~,G} with G = G^(a,b,r,1).
std::optional<GibonacciParams> as_toeplitz_gibonacci(const MatrixSpec& spec)
{
    const auto* t = std::get_if<family::Toeplitz>(&spec.family);
    if (!t || !spec.modifiers.empty())
        return std::nullopt;
    const auto* wrap = std::get_if<seq::Transformed>(&t->alpha.kind());
    const auto* beta = std::get_if<seq::Gibonacci>(&t->beta.kind());
    if (!wrap || wrap->kind != TransformKind::alternate || !beta || beta->shift != 0 || !beta->params.s.is_one())
        return std::nullopt;
    const auto* inner = std::get_if<seq::Gibonacci>(&wrap->inner->kind());
    if (!inner || inner->shift != 0 || !same_params(inner->params, beta->params))
        return std::nullopt;
    return beta->params;
}

MinorSequence compute_minors(MatrixSpec spec, std::size_t count, EngineChoice engine)
{
    MinorSequence result;
    if (count == 0)
        return result;
    spec.order = std::max(spec.order, count);
    if (engine == EngineChoice::automatic) {
        if (const auto* t = std::get_if<family::ToeplitzAbc>(&spec.family); t && spec.modifiers.empty()) {
            result.engine = MinorEngine::toeplitz_closed;
            for (std::size_t k = 1; k <= count; ++k)
                result.values.push_back(det_toeplitz_abc(t->a, t->b, t->c, static_cast<long>(k), ToeplitzMethod::closed));
            return result;
        }
        if (auto p = as_toeplitz_gibonacci(spec)) {
            result.engine = MinorEngine::toeplitz_gibonacci;
            for (std::size_t k = 0; k < count; ++k)
                result.values.push_back(det_toeplitz_gibonacci(p->a, p->b, p->r, k));
            return result;
        }
    }
    const DenseMatrix m = build(spec);
    if (engine == EngineChoice::automatic && m.is_upper_hessenberg())
        result = det_hessenberg(m);
    else
        result = leading_minors(m, engine == EngineChoice::automatic ? MinorStrategy::single_pass
                                                                      : MinorStrategy::per_block);
    result.values.resize(count, QuadScalar::zero(m.field()));
    return result;
}

int cmd_minors(const RunConfig& cfg, std::ostream& out)
{
    require_inputs(cfg, 1, "--spec");
    const auto spec = load_matrix_spec(cfg.inputs.front());
    const auto minors = compute_minors(spec, cfg.bound.value_or(spec.order), cfg.engine);
    print_indexed(out, cfg.format, "minors", minors.values, json{{"engine", engine_name(minors.engine)}});
    return exit_code::ok;
}

int cmd_equimodular(const RunConfig& cfg, std::ostream& out)
{
    require_inputs(cfg, 2, "--specs (at least two)");
    std::vector<MatrixSpec> specs;
    for (const auto& p : cfg.inputs)
        specs.push_back(load_matrix_spec(p));
    const std::size_t upto = cfg.bound.value_or(10);
    const auto report = check_equimodular(specs, upto);

    if (cfg.format == OutputFormat::json) {
        json j{{"upto", upto}, {"verdict", report.verdict}, {"common_minors", scalar_array(report.common_minors)}};
        if (report.first_divergence) {
            const auto& d = *report.first_divergence;
            j["first_divergence"] = {{"index", d.index},
                                     {"spec", cfg.inputs[d.spec_b].string()},
                                     {"reference", to_string(d.value_a)},
                                     {"value", to_string(d.value_b)}};
        }
        out << j.dump(2) << '\n';
    } else {
        out << "verdict," << (report.verdict ? "true" : "false") << '\n';
        if (report.first_divergence) {
            const auto& d = *report.first_divergence;
            out << "divergence," << d.index << ',' << cfg.inputs[d.spec_b].string() << ',' << to_string(d.value_a)
                << ',' << to_string(d.value_b) << '\n';
        } else {
            out << "index,value\n";
            for (std::size_t k = 0; k < report.common_minors.size(); ++k)
                out << k << ',' << to_string(report.common_minors[k]) << '\n';
        }
    }
    return report.verdict ? exit_code::ok : exit_code::failed;
}

int cmd_factorcheck(const RunConfig& cfg, std::ostream& out)
{
    const FieldTag f(cfg.d);
    const QuadScalar a = parse_scalar(cfg.a, f), b = parse_scalar(cfg.b, f), r = parse_scalar(cfg.r, f);
    const std::size_t n = cfg.bound.value_or(10);
    const bool factor = verify_factorization(a, b, r, n);
    const auto minors = leading_minors(build(toeplitz_alternating_gibonacci(a, b, r, n))).values;
    bool closed = true;
    std::vector<QuadScalar> predicted;
    for (std::size_t k = 0; k <= n; ++k) {
        predicted.push_back(det_toeplitz_gibonacci(a, b, r, k));
        closed = closed && predicted.back() == minors[k];
    }

    if (cfg.format == OutputFormat::json) {
        out << json{{"n", n},
                    {"factorization", factor},
                    {"closed_form", closed},
                    {"oracle", scalar_array(minors)},
                    {"predicted", scalar_array(predicted)}}
                   .dump(2)
            << '\n';
    } else {
        out << "factorization," << (factor ? "true" : "false") << '\n';
        out << "closed_form," << (closed ? "true" : "false") << '\n';
        out << "index,oracle,predicted\n";
        for (std::size_t k = 0; k <= n; ++k)
            out << k << ',' << to_string(minors[k]) << ',' << to_string(predicted[k]) << '\n';
    }
    return factor && closed ? exit_code::ok : exit_code::failed;
}

/// One value per line: either "value" or "index,value". A first line that does
/// not parse is taken as a header.
std::vector<QuadScalar> read_values(const std::filesystem::path& path, FieldTag f)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path.string() + "'");
    std::vector<QuadScalar> values;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        const auto comma = line.rfind(',');
        const std::string cell = comma == std::string::npos ? line : line.substr(comma + 1);
        try {
            values.push_back(parse_scalar(cell, f));
        } catch (const ParseError& e) {
            if (lineno != 1)
                throw ParseError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return values;
}

int cmd_identify(const RunConfig& cfg, std::ostream& out)
{
    require_inputs(cfg, 1, "--values-from");
    const auto values = read_values(cfg.inputs.front(), FieldTag(cfg.d));
    const auto matches = identify_minor_sequence(values);
    if (cfg.format == OutputFormat::json) {
        json list = json::array();
        for (const auto& m : matches)
            list.push_back({{"form", m.describe()},
                            {"sequence", sequence_symbol(m.sequence)},
                            {"sigma", m.sigma},
                            {"tau", m.tau},
                            {"rho", to_string(m.rho)},
                            {"coeff", m.coeff}});
        out << json{{"values", values.size()}, {"matches", list}}.dump(2) << '\n';
    } else {
        for (const auto& m : matches)
            out << m.describe() << '\n';
        if (matches.empty())
            out << "no match\n";
    }
    return matches.empty() ? exit_code::failed : exit_code::ok;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out)
{
    const FieldTag f(cfg.d);
    const RecurrenceTarget target{parse_scalar(cfg.r, f), parse_scalar(cfg.s, f), parse_scalar(cfg.c, f)};
    const auto fam = solve_family(target);
    const FieldTag field = fam.extension_needed.value_or(f);
    const QuadScalar c = target.c.in_field(field);
    const RecurrenceTarget lifted{target.r.in_field(field), target.s.in_field(field), c};
    const std::size_t count = cfg.bound.value_or(10);

    bool agree = true;
    json rows = json::array();
    std::ostringstream table;
    table << "n,predicted";
    for (std::size_t k = 0; k < fam.solutions.size(); ++k)
        table << ",oracle" << k;
    table << '\n';
    std::vector<std::vector<QuadScalar>> oracle;
    for (const auto& [a, b] : fam.solutions)
        oracle.push_back(count ? leading_minors(build(MatrixSpec{field, count, family::ToeplitzAbc{a, b, c}, {}})).values
                               : std::vector<QuadScalar>{});
    for (std::size_t n = 1; n <= count; ++n) {
        const QuadScalar want = predicted_minor(lifted, static_cast<long>(n));
        table << n << ',' << to_string(want);
        json row{{"n", n}, {"predicted", to_string(want)}, {"oracle", json::array()}};
        for (const auto& seqv : oracle) {
            table << ',' << to_string(seqv[n - 1]);
            row["oracle"].push_back(to_string(seqv[n - 1]));
            agree = agree && seqv[n - 1] == want;
        }
        table << '\n';
        rows.push_back(row);
    }

    if (cfg.format == OutputFormat::json) {
        json sols = json::array();
        for (const auto& [a, b] : fam.solutions)
            sols.push_back({{"a", to_string(a)}, {"b", to_string(b)}, {"c", to_string(c)}});
        out << json{{"discriminant", to_string(fam.discriminant)},
                    {"field", {{"d", field.d()}}},
                    {"repeated_root", fam.repeated_root},
                    {"solutions", sols},
                    {"agree", agree},
                    {"minors", rows}}
                   .dump(2)
            << '\n';
    } else {
        out << "discriminant," << to_string(fam.discriminant) << '\n';
        out << "field," << field.d() << '\n';
        for (const auto& [a, b] : fam.solutions)
            out << "solution," << to_string(a) << ',' << to_string(b) << ',' << to_string(c) << '\n';
        out << table.str();
    }
    return agree ? exit_code::ok : exit_code::failed;
}

int cmd_verify_paper(const RunConfig& cfg, std::ostream& out)
{
    const auto results = cfg.suite ? run_suite(*cfg.suite) : run_all_suites();
    bool all = true;
    json list = json::array();
    for (const auto& r : results) {
        all = all && r.passed;
        if (cfg.format == OutputFormat::json) {
            json item{{"suite", r.suite}, {"claim", r.name}, {"passed", r.passed}, {"cases", r.cases}};
            if (!r.passed)
                item["counterexample"] = r.counterexample;
            list.push_back(item);
        } else {
            out << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.name << " (" << r.cases << " cases)";
            if (!r.passed)
                out << " -- first counterexample: " << r.counterexample;
            out << '\n';
        }
    }
    if (cfg.format == OutputFormat::json)
        out << json{{"passed", all}, {"claims", list}}.dump(2) << '\n';
    return all ? exit_code::ok : exit_code::failed;
}

} // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    try {
        switch (cfg.command) {
        case Command::seq:
            return cmd_seq(cfg, out);
        case Command::build:
            return cmd_build(cfg, out);
        case Command::minors:
            return cmd_minors(cfg, out);
        case Command::equimodular:
            return cmd_equimodular(cfg, out);
        case Command::factorcheck:
            return cmd_factorcheck(cfg, out);
        case Command::identify:
            return cmd_identify(cfg, out);
        case Command::solve:
            return cmd_solve(cfg, out);
        case Command::verify_paper:
            return cmd_verify_paper(cfg, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::error;
    }
    return exit_code::error;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact leading principal minors of structured matrices", "minorlab"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string spec;
    std::vector<std::string> paths;
    std::size_t bound = 0;

    const std::map<std::string, OutputFormat> formats{{"csv", OutputFormat::csv}, {"json", OutputFormat::json}};
    const std::map<std::string, EngineChoice> engines{{"oracle", EngineChoice::oracle},
                                                      {"auto", EngineChoice::automatic}};
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "csv or json")->transform(CLI::CheckedTransformer(formats));
    };
    auto add_field = [&](CLI::App* sub) { sub->add_option("--d", cfg.d, "radicand of the scalar field (0 = Q)"); };

    auto* seq = app.add_subcommand("seq", "print terms of a sequence spec");
    seq->add_option("--spec", spec, "sequence JSON")->required();
    seq->add_option("--n", bound, "number of terms (default 11)");
    add_format(seq);

    auto* bld = app.add_subcommand("build", "print a matrix spec as a grid");
    bld->add_option("--spec", spec, "matrix JSON")->required();
    add_format(bld);

    auto* min = app.add_subcommand("minors", "leading principal minors of a matrix spec");
    min->add_option("--spec", spec, "matrix JSON")->required();
    min->add_option("--n", bound, "number of minors (default: spec order)");
    min->add_option("--engine", cfg.engine, "oracle or auto")->transform(CLI::CheckedTransformer(engines));
    add_format(min);

    auto* eq = app.add_subcommand("equimodular", "compare leading minors of several specs");
    eq->add_option("--specs", paths, "matrix JSON files")->required();
    eq->add_option("--upto", bound, "largest minor index (default 10)");
    add_format(eq);

    auto* fc = app.add_subcommand("factorcheck", "check T = L H and the closed form for G^(a,b,r,1)");
    fc->add_option("--a", cfg.a)->required();
    fc->add_option("--b", cfg.b)->required();
    fc->add_option("--r", cfg.r)->required();
    fc->add_option("--n", bound, "largest minor index (default 10)");
    add_field(fc);
    add_format(fc);

    auto* id = app.add_subcommand("identify", "match a minor sequence against named families");
    id->add_option("--values-from", spec, "CSV of values")->required();
    add_field(id);
    add_format(id);

    auto* sv = app.add_subcommand("solve", "Toeplitz families whose minors follow X_n = r X_{n-1} + s X_{n-2}");
    sv->add_option("--r", cfg.r)->required();
    sv->add_option("--s", cfg.s)->required();
    sv->add_option("--c", cfg.c)->required();
    sv->add_option("--n", bound, "number of minors (default 10)");
    add_field(sv);
    add_format(sv);

    auto* vp = app.add_subcommand("verify-paper", "run the reproduction suites");
    vp->add_option("--suite", cfg.suite, "one suite")->check(CLI::IsMember(suite_names()));
    add_format(vp);

    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i)
        args.emplace_back(argv[i]);
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_code::error;
    }

    const std::pair<CLI::App*, Command> table[] = {
        {seq, Command::seq},         {bld, Command::build},          {min, Command::minors},
        {eq, Command::equimodular},  {fc, Command::factorcheck},     {id, Command::identify},
        {sv, Command::solve},        {vp, Command::verify_paper},
    };
    for (const auto& [sub, command] : table)
        if (sub->parsed()) {
            cfg.command = command;
            for (const char* flag : {"--n", "--upto"})
                if (const auto* opt = sub->get_option_no_throw(flag); opt && opt->count() > 0)
                    cfg.bound = bound;
        }
    if (!spec.empty())
        cfg.inputs.emplace_back(spec);
    for (const auto& p : paths)
        cfg.inputs.emplace_back(p);
    return run(cfg, out, err);
}

} // namespace minorlab
