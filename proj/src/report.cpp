#include "poizat/report.hpp"

#include "poizat/errors.hpp"
#include "poizat/expr.hpp"

namespace poizat {

namespace {

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
    size_t pos = 0;
    while ((pos = s.find(from, pos)) != std::string::npos) {
        s.replace(pos, from.size(), to);
        pos += to.size();
    }
    return s;
}

Json rational_list(const Poly<Rational>& p) {
    Json out = Json::array();
    for (int i = 0; i <= p.degree(); ++i) out.push_back(to_string(p.coeff(i)));
    return out;
}

template <class T>
void put_optional(Json& j, const char* key, const std::optional<T>& v, auto&& fmt) {
    j[key] = v ? Json(fmt(*v)) : Json(nullptr);
}

template <class T>
std::optional<T> get_optional(const Json& j, const char* key, auto&& parse) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return parse(j.at(key));
}

}  // namespace

std::string phase_text(const BiPoly& p) { return replace_all(replace_all(to_string(p), "x", "z"), "y", "z'"); }

BiPoly parse_phase(const std::string& text) {
    BiRatFunc f = parse_planar(replace_all(replace_all(text, "z'", "y"), "z", "x"));
    if (!f.is_polynomial()) throw ParseError("phase polynomial expected");
    return bi_scale(f.num(), Rational(1) / bi_eval(f.den(), 0, 0));
}

Json to_json(const ClassificationReport& r) {
    Json j;
    j["input"] = format(r.input);
    j["strongly_minimal"] = r.strongly_minimal;
    j["geometrically_trivial"] = r.geometrically_trivial;
    j["semiminimal_class"] = to_string(r.semiminimal_class);
    j["dop"] = to_string(r.dop);
    j["model_count_profile"] = to_string(r.model_count_profile);
    j["liouvillian"] = to_string(r.solution_flags.liouvillian_nonalgebraic_solutions);
    j["solution_flags"] = {{"liouvillian_nonalgebraic_solutions",
                            to_string(r.solution_flags.liouvillian_nonalgebraic_solutions)},
                           {"pfaffian_excluded", r.solution_flags.pfaffian_excluded},
                           {"d_reducible_excluded_below", r.solution_flags.d_reducible_excluded_below}};
    const auto& w = r.witnesses;
    Json wj;
    put_optional(wj, "antiderivative", w.antiderivative, [](const RatFunc<Rational>& g) { return format(g); });
    put_optional(wj, "first_integral", w.first_integral, phase_text);
    put_optional(wj, "normalization", w.normalization, [](const std::pair<Rational, Rational>& ab) {
        return Json{{"a", to_string(ab.first)}, {"b", to_string(ab.second)}};
    });
    put_optional(wj, "fiber_family", w.fiber_family, [](const std::string& s) { return s; });
    put_optional(wj, "bad_set", w.bad_set, [](const Poly<Rational>& p) { return to_string(p, "c"); });
    put_optional(wj, "log_derivative_c1", w.log_derivative_c1, [](const std::string& s) { return s; });
    put_optional(wj, "log_derivative_u", w.log_derivative_u, [](const std::string& s) { return s; });
    j["witnesses"] = wj;
    j["warnings"] = r.warnings;
    return j;
}

ClassificationReport classification_from_json(const Json& j) {
    ClassificationReport r;
    try {
        r.input = parse_univariate(j.at("input").get<std::string>());
        r.strongly_minimal = j.at("strongly_minimal").get<bool>();
        r.geometrically_trivial = j.at("geometrically_trivial").get<bool>();
        r.semiminimal_class = parse_semiminimal_class(j.at("semiminimal_class").get<std::string>());
        r.dop = parse_dop_flag(j.at("dop").get<std::string>());
        r.model_count_profile = parse_model_count_profile(j.at("model_count_profile").get<std::string>());
        const Json& sf = j.at("solution_flags");
        r.solution_flags.liouvillian_nonalgebraic_solutions =
            parse_liouvillian_flag(sf.at("liouvillian_nonalgebraic_solutions").get<std::string>());
        r.solution_flags.pfaffian_excluded = sf.at("pfaffian_excluded").get<bool>();
        r.solution_flags.d_reducible_excluded_below = sf.at("d_reducible_excluded_below").get<int>();
        const Json& wj = j.at("witnesses");
        auto& w = r.witnesses;
        auto text = [](const Json& v) { return v.get<std::string>(); };
        w.antiderivative = get_optional<RatFunc<Rational>>(wj, "antiderivative",
                                                          [](const Json& v) { return parse_univariate(v.get<std::string>()); });
        w.first_integral = get_optional<BiPoly>(wj, "first_integral", [](const Json& v) { return parse_phase(v.get<std::string>()); });
        w.normalization = get_optional<std::pair<Rational, Rational>>(wj, "normalization", [](const Json& v) {
            return std::make_pair(parse_constant(v.at("a").get<std::string>()), parse_constant(v.at("b").get<std::string>()));
        });
        w.fiber_family = get_optional<std::string>(wj, "fiber_family", text);
        w.bad_set = get_optional<Poly<Rational>>(wj, "bad_set", [](const Json& v) {
            RatFunc<Rational> p = parse_univariate(v.get<std::string>(), "c");
            if (!p.is_polynomial()) throw ParseError("bad_set must be a polynomial");
            return p.num();
        });
        w.log_derivative_c1 = get_optional<std::string>(wj, "log_derivative_c1", text);
        w.log_derivative_u = get_optional<std::string>(wj, "log_derivative_u", text);
        r.warnings = j.at("warnings").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
    return r;
}

Json to_json(const AffineMap& m) {
    return {{"a_minpoly", to_string(m.minpoly, "a")},
            {"a_root_index", m.root_index},
            {"b_coeffs", rational_list(m.b.rep())},
            {"map", to_string(m)}};
}

Json to_json(const StabilizerGroup& g) {
    Json elems = Json::array();
    for (const auto& m : g.elements) elems.push_back(to_json(m));
    return {{"order", g.order},
            {"is_cyclic", g.is_cyclic},
            {"center", to_string(g.center)},
            {"exponents", g.exponents},
            {"elements", elems}};
}

Json to_json(const RosenlichtResult& r) {
    Json j;
    j["verdict"] = to_string(r.verdict);
    j["kind"] = r.kind ? Json(to_string(*r.kind)) : Json(nullptr);
    if (r.antiderivative) j["antiderivative"] = format(*r.antiderivative);
    if (r.log_witness) j["witness"] = {{"c1", to_string(r.log_witness->c1)}, {"u", to_string(r.log_witness->u)}};
    j["reason"] = r.reason;
    return j;
}

Json to_json(const DarbouxSearch& s) {
    Json pairs = Json::array();
    for (const auto& p : s.pairs) pairs.push_back({{"invariant", to_string(p.invariant)}, {"cofactor", to_string(p.cofactor)}});
    return {{"field_degree", s.field_degree},
            {"complete", s.complete},
            {"rational_first_integral", s.rational_first_integral},
            {"invariants", pairs}};
}

Json to_json(const JouanolouReport& r) {
    return {{"curve_count_found", r.curve_count_found},
            {"degree_bound_searched", r.degree_bound_searched},
            {"field_degree", r.field_degree},
            {"darboux_threshold", r.darboux_threshold},
            {"rational_threshold", r.rational_threshold},
            {"darboux_integral_implied", r.darboux_integral_implied},
            {"rational_integral_implied", r.rational_integral_implied},
            {"search_complete", r.search_complete}};
}

}  // namespace poizat
