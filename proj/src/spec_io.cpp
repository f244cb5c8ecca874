#include "minorlab/spec_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace minorlab {

namespace {

using nlohmann::json;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const json& member(const json& obj, const char* key)
{
    if (!obj.is_object())
        throw ParseError(std::string("expected an object holding '") + key + "'");
    auto it = obj.find(key);
    if (it == obj.end())
        throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

QuadScalar scalar_of(const json& v, FieldTag f)
{
    if (v.is_string())
        return parse_scalar(v.get<std::string>(), f);
    if (v.is_number_integer())
        return QuadScalar(f, Rational(v.get<long>()));
    throw ParseError("scalar must be a string or an integer, got " + v.dump());
}

std::vector<QuadScalar> scalars_of(const json& v, FieldTag f)
{
    if (!v.is_array())
        throw ParseError("expected an array of scalars, got " + v.dump());
    std::vector<QuadScalar> out;
    for (const auto& x : v)
        out.push_back(scalar_of(x, f));
    return out;
}

std::size_t index_of(const json& v, const char* what)
{
    if (!v.is_number_integer() || v.get<long>() < 0)
        throw ParseError(std::string(what) + " must be a non-negative integer");
    return v.get<std::size_t>();
}

FieldTag field_of(const json& v)
{
    const json& d = member(v, "d");
    if (!d.is_number_integer())
        throw ParseError("field radicand must be an integer");
    try {
        return FieldTag(d.get<std::int64_t>());
    } catch (const MathError& e) {
        throw ParseError(e.what());
    }
}

SequenceSpec sequence_of(const json& v, FieldTag f)
{
    const std::string kind = member(v, "kind").get<std::string>();
    auto S = [&](const char* key) { return scalar_of(member(v, key), f); };
    if (kind == "gibonacci") {
        std::size_t shift = v.contains("shift") ? index_of(v["shift"], "shift") : 0;
        return SequenceSpec::gibonacci({S("a"), S("b"), S("r"), S("s")}, shift);
    }
    if (kind == "head_then_constant")
        return SequenceSpec::head_then_constant(scalars_of(member(v, "head"), f), S("tail"));
    if (kind == "periodic") {
        auto cycle = scalars_of(member(v, "cycle"), f);
        if (cycle.empty())
            throw ParseError("periodic cycle must not be empty");
        return SequenceSpec::periodic(scalars_of(member(v, "head"), f), std::move(cycle));
    }
    if (kind == "arithmetic")
        return SequenceSpec::arithmetic(S("start"), S("step"));
    if (kind == "geometric_affine")
        return SequenceSpec::geometric_affine(S("u"), S("t"), S("v"));
    if (kind == "explicit")
        return SequenceSpec::explicit_terms(scalars_of(member(v, "terms"), f));
    if (kind == "alternate")
        return SequenceSpec::alternate(sequence_of(member(v, "inner"), f));
    if (kind == "binomial")
        return SequenceSpec::binomial(sequence_of(member(v, "inner"), f));
    if (kind == "inverse_binomial")
        return SequenceSpec::inverse_binomial(sequence_of(member(v, "inner"), f));
    throw ParseError("unknown sequence kind '" + kind + "'");
}

Family family_of(const json& v, FieldTag f)
{
    const std::string kind = member(v, "kind").get<std::string>();
    auto S = [&](const char* key) { return scalar_of(member(v, key), f); };
    auto Q = [&](const char* key) { return sequence_of(member(v, key), f); };
    if (kind == "pascal")
        return family::Pascal{Q("alpha"), Q("beta")};
    if (kind == "seven")
        return family::Seven{Q("alpha"), Q("beta")};
    if (kind == "toeplitz")
        return family::Toeplitz{Q("alpha"), Q("beta")};
    if (kind == "toeplitz_abc")
        return family::ToeplitzAbc{S("a"), S("b"), S("c")};
    if (kind == "bespoke_A")
        return family::BespokeA{};
    if (kind == "bespoke_B")
        return family::BespokeB{};
    if (kind == "bespoke_C")
        return family::BespokeC{};
    if (kind == "bespoke_D")
        return family::BespokeD{};
    if (kind == "unipotent_L")
        return family::UnipotentL{};
    if (kind == "unipotent_U")
        return family::UnipotentU{};
    if (kind == "factor_L")
        return family::FactorL{S("a"), S("b"), S("r")};
    if (kind == "factor_H")
        return family::FactorH{S("a"), S("b"), S("r")};
    throw ParseError("unknown matrix family '" + kind + "'");
}

json parse_text(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

/// Converts nlohmann type errors (wrong JSON type for a key) into ParseError.
template <class F>
auto guarded(F&& f)
{
    try {
        return f();
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed spec: ") + e.what());
    }
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json encode(const QuadScalar& x)
{
    return to_string(x);
}

json encode(const std::vector<QuadScalar>& xs)
{
    json out = json::array();
    for (const auto& x : xs)
        out.push_back(to_string(x));
    return out;
}

json encode(const SequenceSpec& spec)
{
    return std::visit(
        overloaded{
            [](const seq::Gibonacci& g) {
                return json{{"kind", "gibonacci"}, {"a", encode(g.params.a)}, {"b", encode(g.params.b)},
                            {"r", encode(g.params.r)}, {"s", encode(g.params.s)}, {"shift", g.shift}};
            },
            [](const seq::HeadThenConstant& h) {
                return json{{"kind", "head_then_constant"}, {"head", encode(h.head)}, {"tail", encode(h.tail)}};
            },
            [](const seq::Periodic& p) {
                return json{{"kind", "periodic"}, {"head", encode(p.head)}, {"cycle", encode(p.cycle)}};
            },
            [](const seq::Arithmetic& a) {
                return json{{"kind", "arithmetic"}, {"start", encode(a.start)}, {"step", encode(a.step)}};
            },
            [](const seq::GeometricAffine& g) {
                return json{{"kind", "geometric_affine"}, {"u", encode(g.u)}, {"t", encode(g.t)}, {"v", encode(g.v)}};
            },
            [](const seq::Explicit& e) { return json{{"kind", "explicit"}, {"terms", encode(e.terms)}}; },
            [](const seq::Transformed& t) {
                const char* kind = t.kind == TransformKind::alternate  ? "alternate"
                                   : t.kind == TransformKind::binomial ? "binomial"
                                                                       : "inverse_binomial";
                return json{{"kind", kind}, {"inner", encode(*t.inner)}};
            },
        },
        spec.kind());
}

json encode(const Family& fam)
{
    json out = std::visit(
        overloaded{
            [](const family::Pascal& p) { return json{{"alpha", encode(p.alpha)}, {"beta", encode(p.beta)}}; },
            [](const family::Seven& p) { return json{{"alpha", encode(p.alpha)}, {"beta", encode(p.beta)}}; },
            [](const family::Toeplitz& p) { return json{{"alpha", encode(p.alpha)}, {"beta", encode(p.beta)}}; },
            [](const family::ToeplitzAbc& t) {
                return json{{"a", encode(t.a)}, {"b", encode(t.b)}, {"c", encode(t.c)}};
            },
            [](const family::FactorL& t) { return json{{"a", encode(t.a)}, {"b", encode(t.b)}, {"r", encode(t.r)}}; },
            [](const family::FactorH& t) { return json{{"a", encode(t.a)}, {"b", encode(t.b)}, {"r", encode(t.r)}}; },
            [](const auto&) { return json::object(); },
        },
        fam);
    out["kind"] = family_name(fam);
    return out;
}

} // namespace

SequenceSpec parse_sequence_spec(std::string_view json_text, FieldTag field)
{
    const json v = parse_text(json_text);
    return guarded([&] {
        const FieldTag f = v.is_object() && v.contains("field") ? field_of(v["field"]) : field;
        return sequence_of(v, f);
    });
}

MatrixSpec parse_matrix_spec(std::string_view json_text)
{
    const json v = parse_text(json_text);
    return guarded([&] {
        const FieldTag f = v.is_object() && v.contains("field") ? field_of(v["field"]) : FieldTag{};
        MatrixSpec spec{f, index_of(member(v, "order"), "order"), family_of(member(v, "family"), f), {}};
        if (spec.order == 0)
            throw ParseError("order must be at least 1");
        if (v.contains("modifiers")) {
            if (!v["modifiers"].is_array())
                throw ParseError("modifiers must be an array");
            for (const auto& m : v["modifiers"])
                spec.modifiers.push_back(
                    {index_of(member(m, "i"), "i"), index_of(member(m, "j"), "j"), scalar_of(member(m, "delta"), f)});
        }
        return spec;
    });
}

MatrixSpec load_matrix_spec(const std::filesystem::path& path)
{
    return parse_matrix_spec(read_file(path));
}

SequenceSpec load_sequence_spec(const std::filesystem::path& path)
{
    return parse_sequence_spec(read_file(path));
}

std::string to_json(const SequenceSpec& spec)
{
    json out = encode(spec);
    out["field"] = {{"d", spec.field().d()}};
    return out.dump();
}

std::string to_json(const MatrixSpec& spec)
{
    json out{{"field", {{"d", spec.field.d()}}}, {"order", spec.order}, {"family", encode(spec.family)}};
    if (!spec.modifiers.empty()) {
        json mods = json::array();
        for (const auto& m : spec.modifiers)
            mods.push_back({{"i", m.i}, {"j", m.j}, {"delta", to_string(m.delta)}});
        out["modifiers"] = mods;
    }
    return out.dump();
}

} // namespace minorlab
