#include "poizat/classifier.hpp"

#include <array>
#include <stdexcept>

#include "poizat/errors.hpp"

namespace poizat {

namespace {

template <class E, size_t N>
std::string name_of(E v, const std::array<const char*, N>& names) {
    return names[static_cast<size_t>(v)];
}

template <class E, size_t N>
E parse_name(const std::string& s, const std::array<const char*, N>& names, const char* what) {
    for (size_t i = 0; i < N; ++i)
        if (s == names[i]) return static_cast<E>(i);
    throw ParseError("unknown " + std::string(what) + " '" + s + "'");
}

constexpr std::array<const char*, 6> kClassNames = {"strongly-minimal",         "internal",
                                                    "two-step-analyzable",      "orthogonal-generic-fiber",
                                                    "analyzable-via-log-derivative", "unknown"};
constexpr std::array<const char*, 3> kLiouvillianNames = {"none", "all-fibers-liouvillian", "unknown"};
constexpr std::array<const char*, 3> kDopNames = {"yes", "no", "unknown"};
constexpr std::array<const char*, 4> kModelNames = {"all-one", "countable-split", "two-to-kappa", "unknown"};

void check_invariants(const ClassificationReport& r) {
    if (r.strongly_minimal && !r.geometrically_trivial)
        throw std::logic_error("strongly minimal report without geometric triviality");
    if (r.strongly_minimal != (r.semiminimal_class == SemiminimalClass::strongly_minimal))
        throw std::logic_error("strong minimality disagrees with the class");
    if (r.dop == DopFlag::yes && r.model_count_profile != ModelCountProfile::two_to_kappa)
        throw std::logic_error("dop without the maximal model count");
}

}  // namespace

std::string to_string(SemiminimalClass c) { return name_of(c, kClassNames); }
std::string to_string(LiouvillianFlag l) { return name_of(l, kLiouvillianNames); }
std::string to_string(DopFlag d) { return name_of(d, kDopNames); }
std::string to_string(ModelCountProfile m) { return name_of(m, kModelNames); }

SemiminimalClass parse_semiminimal_class(const std::string& s) {
    return parse_name<SemiminimalClass>(s, kClassNames, "semiminimal class");
}
LiouvillianFlag parse_liouvillian_flag(const std::string& s) {
    return parse_name<LiouvillianFlag>(s, kLiouvillianNames, "liouvillian flag");
}
DopFlag parse_dop_flag(const std::string& s) { return parse_name<DopFlag>(s, kDopNames, "dop flag"); }
ModelCountProfile parse_model_count_profile(const std::string& s) {
    return parse_name<ModelCountProfile>(s, kModelNames, "model count profile");
}

bool operator==(const SolutionFlags& a, const SolutionFlags& b) {
    return a.liouvillian_nonalgebraic_solutions == b.liouvillian_nonalgebraic_solutions &&
           a.pfaffian_excluded == b.pfaffian_excluded && a.d_reducible_excluded_below == b.d_reducible_excluded_below;
}

bool operator==(const ClassificationReport& a, const ClassificationReport& b) {
    return a.input == b.input && a.strongly_minimal == b.strongly_minimal &&
           a.geometrically_trivial == b.geometrically_trivial && a.solution_flags == b.solution_flags &&
           a.semiminimal_class == b.semiminimal_class && a.dop == b.dop &&
           a.model_count_profile == b.model_count_profile && a.witnesses == b.witnesses && a.warnings == b.warnings;
}

ClassificationReport classify_poizat(const RatFunc<Rational>& f, const LogDerivativeOptions& opt) {
    ClassificationReport r;
    r.input = f;
    if (f.is_zero()) {
        r.semiminimal_class = SemiminimalClass::internal;
        r.solution_flags.liouvillian_nonalgebraic_solutions = LiouvillianFlag::all_fibers_liouvillian;
        r.dop = DopFlag::no;
        r.model_count_profile = ModelCountProfile::countable_split;
        r.witnesses.antiderivative = RatFunc<Rational>();
        r.warnings.push_back("degenerate");
        check_invariants(r);
        return r;
    }

    r.strongly_minimal = !is_exact_derivative(f);
    if (r.strongly_minimal) {
        r.geometrically_trivial = true;
        r.solution_flags = {LiouvillianFlag::none, true, 2};
        r.semiminimal_class = SemiminimalClass::strongly_minimal;
        r.dop = DopFlag::no;
        r.model_count_profile = ModelCountProfile::all_one;
        check_invariants(r);
        return r;
    }

    const RatFunc<Rational> g = *antiderivative(f);
    r.witnesses.antiderivative = g;
    r.witnesses.fiber_family = "z' = " + format(g) + " + c";
    if (g.is_polynomial() && g.num().degree() >= 1) r.witnesses.bad_set = generic_fiber_squarefree(g.num()).bad_set;

    const bool poly = f.is_polynomial();
    const int deg = poly ? f.num().degree() : -1;
    if (poly && deg == 0) {
        r.semiminimal_class = SemiminimalClass::internal;
        r.solution_flags.liouvillian_nonalgebraic_solutions = LiouvillianFlag::all_fibers_liouvillian;
        r.dop = DopFlag::no;
        r.model_count_profile = ModelCountProfile::countable_split;
    } else if (poly && deg == 1) {
        const Rational a = f.num().coeff(1), b = f.num().coeff(0);
        r.semiminimal_class = SemiminimalClass::two_step_analyzable;
        r.solution_flags.liouvillian_nonalgebraic_solutions = LiouvillianFlag::all_fibers_liouvillian;
        r.dop = DopFlag::no;
        r.model_count_profile = ModelCountProfile::countable_split;
        r.witnesses.normalization = std::make_pair(a, b);
        const BiPoly w = bi_scale(bi_x(), a) + bi_const(b);
        r.witnesses.first_integral = w * w - bi_scale(bi_y(), 2 * a);
    } else if (poly && deg == 2) {
        r.semiminimal_class = SemiminimalClass::orthogonal_generic_fiber;
        r.dop = DopFlag::yes;
        r.model_count_profile = ModelCountProfile::two_to_kappa;
    } else {
        const RatFunc<ParamField> w = to_param(g) + RatFunc<ParamField>(ParamField::c());
        RosenlichtResult rr = rosenlicht_classify(w, opt);
        if (rr.verdict == RosenlichtVerdict::orthogonal) {
            r.semiminimal_class = SemiminimalClass::orthogonal_generic_fiber;
        } else if (rr.verdict == RosenlichtVerdict::nonorthogonal && rr.kind == NonorthogonalKind::log_derivative) {
            r.semiminimal_class = SemiminimalClass::analyzable_via_log_derivative;
            r.solution_flags.liouvillian_nonalgebraic_solutions = LiouvillianFlag::all_fibers_liouvillian;
            r.witnesses.log_derivative_c1 = to_string(rr.log_witness->c1);
            r.witnesses.log_derivative_u = to_string(rr.log_witness->u);
        } else {
            r.warnings.push_back("fiber test inconclusive: " + rr.reason);
        }
    }
    check_invariants(r);
    return r;
}

std::string to_string(RosenlichtVerdict v) {
    switch (v) {
        case RosenlichtVerdict::nonorthogonal:
            return "nonorthogonal";
        case RosenlichtVerdict::orthogonal:
            return "orthogonal";
        case RosenlichtVerdict::unknown:
            break;
    }
    return "unknown";
}

std::string to_string(NonorthogonalKind k) {
    return k == NonorthogonalKind::exact_derivative ? "exact-derivative" : "log-derivative";
}

RosenlichtResult rosenlicht_classify(const RatFunc<ParamField>& w, const LogDerivativeOptions& opt) {
    if (w.is_zero()) throw PreconditionError("degenerate fiber");
    const RatFunc<ParamField> inv = RatFunc<ParamField>(ParamField(1)) / w;
    RosenlichtResult r;
    if (auto v = antiderivative(inv)) {
        r.verdict = RosenlichtVerdict::nonorthogonal;
        r.kind = NonorthogonalKind::exact_derivative;
        r.antiderivative = *v;
        r.reason = "1/w is a derivative";
        return r;
    }
    auto lr = is_log_derivative_multiple(inv, opt);
    r.reason = lr.reason;
    if (lr.verdict == Verdict::yes) {
        r.verdict = RosenlichtVerdict::nonorthogonal;
        r.kind = NonorthogonalKind::log_derivative;
        r.log_witness = lr.witness;
    } else if (lr.verdict == Verdict::no) {
        r.verdict = RosenlichtVerdict::orthogonal;
    }
    return r;
}

RosenlichtResult rosenlicht_classify(const RatFunc<Rational>& w, const LogDerivativeOptions& opt) {
    return rosenlicht_classify(to_param(w), opt);
}

FiberSquarefree generic_fiber_squarefree(const Poly<Rational>& g) {
    if (g.degree() < 1) throw PreconditionError("fiber polynomial must be nonconstant");
    Poly<ParamField> p = g.map<ParamField>([](const Rational& q) { return ParamField(q); });
    p = p + Poly<ParamField>(ParamField::c());
    const RatFunc<Rational> d = discriminant(p).value();
    FiberSquarefree out;
    out.bad_set = d.num();
    out.generically_squarefree = !out.bad_set.is_zero();
    return out;
}

std::string to_string(LienardVerdict v) {
    return v == LienardVerdict::orthogonal_for_generic_s ? "orthogonal-for-generic-s" : "inapplicable";
}

LienardVerdict lienard_family_orthogonality(const RatFunc<Rational>& f, const Family& family_g,
                                            const std::vector<Rational>& s0) {
    if (s0.size() != family_g.parameters.size())
        throw PreconditionError("arity mismatch: family has " + std::to_string(family_g.parameters.size()) +
                                " parameters, point has " + std::to_string(s0.size()));
    if (nonzero_residue_count(f) < 1) return LienardVerdict::inapplicable;
    std::map<std::string, Rational> values;
    for (size_t i = 0; i < s0.size(); ++i) values[family_g.parameters[i]] = s0[i];
    RatFunc<Rational> g0;
    try {
        g0 = instantiate(family_g, values);
    } catch (const ParseError&) {
        throw PreconditionError("family is undefined at the base point");
    }
    return g0.is_zero() ? LienardVerdict::orthogonal_for_generic_s : LienardVerdict::inapplicable;
}

}  // namespace poizat
