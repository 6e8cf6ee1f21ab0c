#include "poizat/commands.hpp"

#include <chrono>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "poizat/errors.hpp"
#include "poizat/expr.hpp"
#include "poizat/forms.hpp"
#include "poizat/puiseux.hpp"

namespace poizat {

namespace {

struct Field {
    const char* name;
    enum Type { text, integer, rationals } type;
    bool required;
};

const std::map<std::string, std::vector<Field>>& schemas() {
    static const std::map<std::string, std::vector<Field>> s = {
        {"classify", {{"f", Field::text, true}}},
        {"stabilizer", {{"f", Field::text, true}}},
        {"relations", {{"f", Field::text, true}, {"g", Field::text, true}}},
        {"rosenlicht", {{"w", Field::text, true}}},
        {"darboux", {{"p", Field::text, true}, {"q", Field::text, true}, {"max_degree", Field::integer, true}}},
        {"forms-check", {{"f", Field::text, true}}},
        {"puiseux-check", {{"trials", Field::integer, true}, {"seed", Field::integer, false}}},
        {"family-orth", {{"f", Field::text, true}, {"family", Field::text, true}, {"s0", Field::rationals, true}}},
    };
    return s;
}

void validate(const std::string& command, const Json& payload) {
    auto it = schemas().find(command);
    if (it == schemas().end()) throw ParseError("unknown command '" + command + "'");
    if (!payload.is_object()) throw ParseError("payload must be an object");
    std::set<std::string> known;
    for (const auto& f : it->second) {
        known.insert(f.name);
        if (!payload.contains(f.name)) {
            if (f.required) throw ParseError("payload is missing '" + std::string(f.name) + "'");
            continue;
        }
        const Json& v = payload.at(f.name);
        bool ok = false;
        switch (f.type) {
            case Field::text:
                ok = v.is_string();
                break;
            case Field::integer:
                ok = v.is_number_integer();
                break;
            case Field::rationals:
                ok = v.is_string() || v.is_array();
                break;
        }
        if (!ok) throw ParseError("payload field '" + std::string(f.name) + "' has the wrong type");
    }
    for (const auto& [key, value] : payload.items())
        if (!known.count(key)) throw ParseError("unexpected payload field '" + key + "'");
}

std::string text_of(const Json& payload, const char* key) { return payload.at(key).get<std::string>(); }

std::vector<Rational> parse_point(const Json& v) {
    std::vector<Rational> out;
    if (v.is_array()) {
        for (const auto& x : v) out.push_back(parse_constant(x.is_string() ? x.get<std::string>() : x.dump()));
        return out;
    }
    std::stringstream ss(v.get<std::string>());
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_constant(item));
    return out;
}

LogDerivativeOptions log_options(const GlobalOptions& opt) {
    LogDerivativeOptions o;
    o.digits = opt.precision;
    o.seed = opt.seed;
    return o;
}

CommandResult classify(const Json& payload, const GlobalOptions& opt) {
    const RatFunc<Rational> f = parse_univariate(text_of(payload, "f"));
    const ClassificationReport r = classify_poizat(f, log_options(opt));
    const Json rep = to_json(r);
    Json out;
    for (const char* k : {"input", "strongly_minimal", "geometrically_trivial", "semiminimal_class", "dop",
                          "model_count_profile"})
        out[k] = rep.at(k);
    if (r.strongly_minimal) {
        const StabilizerGroup g = affine_stabilizer(f);
        Json elems = Json::array();
        for (const auto& m : g.elements) elems.push_back(to_json(m));
        out["stabilizer"] = elems;
        out["acl_size"] = acl_profile(f).k;
    } else {
        out["stabilizer"] = nullptr;
        out["acl_size"] = nullptr;
    }
    out["residue_count"] = nonzero_residue_count(f);
    for (const char* k : {"liouvillian", "warnings", "solution_flags", "witnesses"}) out[k] = rep.at(k);
    out["seed"] = opt.seed;
    out["precision"] = opt.precision;
    return {out, r.semiminimal_class == SemiminimalClass::unknown};
}

CommandResult stabilizer(const Json& payload, const GlobalOptions&) {
    const RatFunc<Rational> f = parse_univariate(text_of(payload, "f"));
    const StabilizerGroup g = affine_stabilizer(f);
    Json out;
    out["input"] = format(f);
    out["stabilizer"] = to_json(g);
    out["verified"] = verify_stabilizer(f, g);
    out["acl"] = to_string(acl_profile(f));
    out["acl_size"] = acl_profile(f).k;
    try {
        auto w = canonical_form_detect(f);
        out["canonical_form"] = w ? Json{{"accepted", true},
                                         {"n", w->n},
                                         {"c", to_string(w->c)},
                                         {"conjugator", to_json(w->conjugator)},
                                         {"verified", verify_canonical_form(f, *w)}}
                                  : Json{{"accepted", false}, {"reason", "no canonical form"}};
    } catch (const PreconditionError& e) {
        out["canonical_form"] = {{"accepted", false}, {"reason", e.what()}};
    }
    return {out, false};
}

CommandResult relations(const Json& payload, const GlobalOptions&) {
    const RatFunc<Rational> f = parse_univariate(text_of(payload, "f")), g = parse_univariate(text_of(payload, "g"));
    const RelationReport rep = relation_report(f, g);
    Json rel = Json::array();
    for (const auto& m : rep.relations) rel.push_back(to_json(m));
    Json out;
    out["f"] = format(f);
    out["g"] = format(g);
    out["relations"] = rel;
    out["lines"] = rep.lines;
    out["conclusion"] = rep.conclusion;
    return {out, false};
}

CommandResult rosenlicht(const Json& payload, const GlobalOptions& opt) {
    const RatFunc<ParamField> w = parse_parametric(text_of(payload, "w"));
    const RosenlichtResult r = rosenlicht_classify(w, log_options(opt));
    Json out;
    out["input"] = format(w);
    const Json body = to_json(r);
    for (const auto& [k, v] : body.items()) out[k] = v;
    out["seed"] = opt.seed;
    out["precision"] = opt.precision;
    return {out, r.verdict == RosenlichtVerdict::unknown};
}

CommandResult darboux(const Json& payload, const GlobalOptions&) {
    const PlanarVectorField v{parse_planar(text_of(payload, "p")), parse_planar(text_of(payload, "q"))};
    const int max_degree = payload.at("max_degree").get<int>();
    const DarbouxSearch s = darboux_search(v, max_degree);
    Json out;
    out["p"] = format(v.dx_image);
    out["q"] = format(v.dy_image);
    out["max_degree"] = max_degree;
    const Json body = to_json(s);
    for (const auto& [k, x] : body.items()) out[k] = x;
    out["jouanolou"] = to_json(jouanolou_report(v, max_degree));
    return {out, !s.complete};
}

CommandResult forms_check(const Json& payload, const GlobalOptions&) {
    const RatFunc<Rational> f = parse_univariate(text_of(payload, "f"));
    Json out;
    out["input"] = format(f);
    out["volume_form"] = "(1/y) dx^dy";
    out["invariant_volume"] = check_invariant_volume(f);
    out["dxdy_preserved"] = preserves(f, DifferentialForm::volume());
    return {out, false};
}

CommandResult puiseux_check(const Json& payload, const GlobalOptions& opt) {
    const long trials = payload.at("trials").get<long>();
    if (trials < 0) throw PreconditionError("trials must be nonnegative");
    const std::uint64_t seed = payload.contains("seed") ? payload.at("seed").get<std::uint64_t>() : opt.seed;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> extra(0, 3), num(-6, 6), den(1, 3);
    Json failures = Json::array();
    long zero = 0;
    for (long t = 0; t < trials; ++t) {
        const int m = 1 + static_cast<int>(t % 4);
        std::uniform_int_distribution<long> vd(-3L * m, 3L * m);
        const long v = vd(rng);
        std::vector<Rational> a(static_cast<size_t>(4 * m + 2 + extra(rng)));
        for (auto& c : a) c = make_rational(num(rng), den(rng));
        if (a[0] == 0) a[0] = 1;
        const PuiseuxSeries u(m, v, a);
        const Rational r = log_derivative_residue(u);
        if (r == 0)
            ++zero;
        else
            failures.push_back({{"series", to_string(u)}, {"residue", to_string(r)}});
    }
    Json out;
    out["trials"] = trials;
    out["seed"] = seed;
    out["ramifications"] = {1, 2, 3, 4};
    out["zero_residues"] = zero;
    out["failures"] = failures;
    out["passed"] = failures.empty();
    return {out, false};
}

CommandResult family_orth(const Json& payload, const GlobalOptions&) {
    const std::string ftext = text_of(payload, "f"), famtext = text_of(payload, "family");
    std::set<std::string> syms = symbols_of(parse_expr(famtext));
    for (const auto& s : symbols_of(parse_expr(ftext))) syms.insert(s);
    const std::string var = syms.count("y") && !syms.count("z") ? "y" : "z";
    const RatFunc<Rational> f = parse_univariate(ftext, var);
    const Family fam = parse_family(famtext, var);
    const std::vector<Rational> s0 = parse_point(payload.at("s0"));
    const LienardVerdict verdict = lienard_family_orthogonality(f, fam, s0);
    Json point = Json::array();
    for (const auto& q : s0) point.push_back(to_string(q));
    Json out;
    out["f"] = format(f, var);
    out["family"] = famtext;
    out["variable"] = var;
    out["parameters"] = fam.parameters;
    out["s0"] = point;
    out["residue_count"] = nonzero_residue_count(f);
    out["verdict"] = to_string(verdict);
    return {out, false};
}

Json error_object(const char* kind, const std::string& message) { return {{"kind", kind}, {"message", message}}; }

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, s] : schemas()) v.push_back(k);
        return v;
    }();
    return names;
}

CommandResult execute_command(const std::string& command, const Json& payload, const GlobalOptions& opt) {
    validate(command, payload);
    if (command == "classify") return classify(payload, opt);
    if (command == "stabilizer") return stabilizer(payload, opt);
    if (command == "relations") return relations(payload, opt);
    if (command == "rosenlicht") return rosenlicht(payload, opt);
    if (command == "darboux") return darboux(payload, opt);
    if (command == "forms-check") return forms_check(payload, opt);
    if (command == "puiseux-check") return puiseux_check(payload, opt);
    return family_orth(payload, opt);
}

BatchSummary batch_run(std::istream& input, const GlobalOptions& opt) {
    BatchSummary sum;
    Json results = Json::array();
    std::set<std::string> ids;
    std::string line;
    int lineno = 0;
    while (std::getline(input, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        ++sum.records;
        Json rec;
        rec["line"] = lineno;
        const auto start = std::chrono::steady_clock::now();
        try {
            Json j;
            try {
                j = Json::parse(line);
            } catch (const nlohmann::json::exception& e) {
                throw ParseError(std::string("malformed record: ") + e.what());
            }
            if (!j.is_object() || !j.contains("id") || !j.at("id").is_string())
                throw ParseError("record needs a string id");
            const std::string id = j.at("id").get<std::string>();
            rec["id"] = id;
            if (!j.contains("command") || !j.at("command").is_string()) throw ParseError("record needs a command");
            rec["command"] = j.at("command");
            if (!ids.insert(id).second) throw ParseError("duplicate id '" + id + "'");
            for (const auto& [k, v] : j.items())
                if (k != "id" && k != "command" && k != "payload") throw ParseError("unexpected record field '" + k + "'");
            CommandResult r = execute_command(j.at("command").get<std::string>(), j.value("payload", Json::object()), opt);
            rec["status"] = "ok";
            rec["unknown"] = r.unknown;
            rec["result"] = std::move(r.output);
            if (r.unknown) ++sum.unknown;
        } catch (const ParseError& e) {
            rec["status"] = "error";
            rec["error"] = error_object("parse", e.what());
        } catch (const PreconditionError& e) {
            rec["status"] = "error";
            rec["error"] = error_object("precondition", e.what());
        } catch (const std::exception& e) {
            rec["status"] = "error";
            rec["error"] = error_object("internal", e.what());
        }
        if (rec["status"] == "error") ++sum.errors;
        rec["elapsed_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        results.push_back(std::move(rec));
    }
    sum.report = {{"seed", opt.seed}, {"precision", opt.precision}, {"results", results}};
    return sum;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decision procedures for z'' = z' f(z)", "poizat"};
    app.require_subcommand(1);
    GlobalOptions opt;
    app.add_option("--seed", opt.seed, "seed for randomized checks")->default_val(0);
    app.add_flag("--strict", opt.strict, "exit with code 4 when the answer is unknown");
    app.add_option("--precision", opt.precision, "digits for numeric fallbacks")->default_val(64)->check(CLI::Range(8, 100000));

    std::string command;
    Json payload = Json::object();
    std::string input_path, output_path;
    std::map<std::string, std::string> texts;
    long max_degree = 0, trials = 0;
    std::optional<long> trial_seed;

    auto text_option = [&](CLI::App* sub, const std::string& flag, const std::string& key, const std::string& help) {
        sub->add_option(flag, texts[key], help)->required();
    };
    auto add = [&](const std::string& name, const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        sub->callback([&, name] { command = name; });
        return sub;
    };
    text_option(add("classify", "classify z'' = z' f(z)"), "--f", "f", "rational function of z");
    text_option(add("stabilizer", "affine maps fixing f"), "--f", "f", "rational function of z");
    CLI::App* rel = add("relations", "affine relations between two equations");
    text_option(rel, "--f", "f", "rational function of z");
    text_option(rel, "--g", "g", "rational function of z");
    text_option(add("rosenlicht", "orthogonality of z' = w(z)"), "--w", "w", "rational function of z and c");
    CLI::App* dar = add("darboux", "Darboux polynomials of x' = p, y' = q");
    text_option(dar, "--p", "p", "polynomial in x, y");
    text_option(dar, "--q", "q", "polynomial in x, y");
    dar->add_option("--max-degree", max_degree, "degree bound")->required();
    text_option(add("forms-check", "invariant volume form"), "--f", "f", "rational function of z");
    CLI::App* pc = add("puiseux-check", "random residue checks for Puiseux series");
    pc->add_option("--trials", trials, "number of series")->required();
    pc->add_option("--seed", trial_seed, "seed for this check");
    CLI::App* fo = add("family-orth", "generic orthogonality of a Lienard family");
    text_option(fo, "--f", "f", "rational function");
    text_option(fo, "--family", "family", "family expression with parameters");
    text_option(fo, "--s0", "s0", "comma separated rational point");
    CLI::App* bat = add("batch", "run a JSONL file of records");
    bat->add_option("--input", input_path, "JSONL input")->required();
    bat->add_option("--output", output_path, "JSON report")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_parse;
    }

    try {
        if (command == "batch") {
            std::ifstream in(input_path);
            if (!in) throw PreconditionError("cannot read " + input_path);
            BatchSummary sum = batch_run(in, opt);
            std::ofstream os(output_path);
            if (!os) throw PreconditionError("cannot write " + output_path);
            os << sum.report.dump(2) << "\n";
            out << Json{{"records", sum.records}, {"errors", sum.errors}, {"unknown", sum.unknown}, {"output", output_path}}
                       .dump(2)
                << "\n";
            return opt.strict && sum.unknown > 0 ? exit_unknown : exit_ok;
        }
        for (const auto& [k, v] : texts)
            if (app.get_subcommand(command)->get_option_no_throw("--" + k)) payload[k] = v;
        if (command == "darboux") payload["max_degree"] = max_degree;
        if (command == "puiseux-check") {
            payload["trials"] = trials;
            if (trial_seed) payload["seed"] = *trial_seed;
        }
        const CommandResult r = execute_command(command, payload, opt);
        out << r.output.dump(2) << "\n";
        return opt.strict && r.unknown ? exit_unknown : exit_ok;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return exit_parse;
    } catch (const PreconditionError& e) {
        err << "precondition error: " << e.what() << "\n";
        return exit_precondition;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
}

}  // namespace poizat
