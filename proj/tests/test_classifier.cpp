#include <random>

#include "doctest.h"
#include "poizat/classifier.hpp"
#include "poizat/forms.hpp"
#include "test_support.hpp"

using namespace poizat;

namespace {

using RF = RatFunc<Rational>;
using PF = RatFunc<ParamField>;

const RF Z = RF::variable();

RF C(long c) { return RF(Rational(c)); }

PF param_c() { return PF(ParamField::c()); }

// 1/w - c1 * u'/u computed in the witness field.
bool log_witness_holds(const PF& w, const LogDerivativeWitness<ParamField>& wit) {
    using A = AlgNum<ParamField>;
    const RatFunc<A> lhs = lift_ratfunc(PF(ParamField(1)) / w);
    const RatFunc<A> rhs = RatFunc<A>(wit.c1) * wit.u.derivative() / wit.u;
    return (lhs - rhs).is_zero();
}

RF random_poly_rf(std::mt19937_64& rng, int max_deg) { return RF(testsupport::random_poly(rng, max_deg)); }

}  // namespace

TEST_CASE("classifier examples") {
    auto a = classify_poizat(C(1) / Z);
    CHECK(a.strongly_minimal);
    CHECK(a.geometrically_trivial);
    CHECK(a.semiminimal_class == SemiminimalClass::strongly_minimal);
    CHECK(a.solution_flags.liouvillian_nonalgebraic_solutions == LiouvillianFlag::none);
    CHECK(a.solution_flags.pfaffian_excluded);
    CHECK(a.solution_flags.d_reducible_excluded_below == 2);
    CHECK(a.model_count_profile == ModelCountProfile::all_one);

    auto b = classify_poizat(Z);
    CHECK_FALSE(b.strongly_minimal);
    CHECK(b.semiminimal_class == SemiminimalClass::two_step_analyzable);
    REQUIRE(b.witnesses.first_integral);
    CHECK(*b.witnesses.first_integral == bi_x() * bi_x() - bi_scale(bi_y(), Rational(2)));
    CHECK(b.model_count_profile == ModelCountProfile::countable_split);
    CHECK(derivation_from_poizat(Z)(BiRatFunc(*b.witnesses.first_integral)).is_zero());

    auto c = classify_poizat(C(3) * Z * Z + C(3) * Z + C(1));
    CHECK(c.semiminimal_class == SemiminimalClass::orthogonal_generic_fiber);
    CHECK(c.dop == DopFlag::yes);
    CHECK(c.model_count_profile == ModelCountProfile::two_to_kappa);

    auto d = classify_poizat(C(5));
    CHECK(d.semiminimal_class == SemiminimalClass::internal);
    CHECK(d.model_count_profile == ModelCountProfile::countable_split);

    auto e = classify_poizat(RF());
    CHECK_FALSE(e.strongly_minimal);
    CHECK(e.semiminimal_class == SemiminimalClass::internal);
    CHECK(e.warnings == std::vector<std::string>{"degenerate"});

    // g = z^4: fibers z' = z^4 + c
    auto f = classify_poizat(C(4) * Z * Z * Z);
    CHECK(f.semiminimal_class == SemiminimalClass::orthogonal_generic_fiber);
    CHECK(f.model_count_profile == ModelCountProfile::unknown);

    // g = log-free rational: 1/(g + c) has a polynomial part
    auto h = classify_poizat(C(1) / (Z * Z));
    CHECK_FALSE(h.strongly_minimal);
    CHECK(h.semiminimal_class == SemiminimalClass::orthogonal_generic_fiber);

    CHECK(to_string(SemiminimalClass::analyzable_via_log_derivative) == "analyzable-via-log-derivative");
    CHECK(parse_model_count_profile("two-to-kappa") == ModelCountProfile::two_to_kappa);
    CHECK_THROWS_AS(parse_dop_flag("maybe"), ParseError);
}

TEST_CASE("linear f normalizes to the z^2 - 2z' witness") {
    std::mt19937_64 rng(50);
    for (int it = 0; it < 30; ++it) {
        Rational a = testsupport::random_rational(rng), b = testsupport::random_rational(rng);
        if (a == 0) continue;
        const RF f = RF(a) * Z + RF(b);
        auto r = classify_poizat(f);
        CHECK(r.semiminimal_class == SemiminimalClass::two_step_analyzable);
        REQUIRE(r.witnesses.first_integral);
        CHECK(derivation_from_poizat(f)(BiRatFunc(*r.witnesses.first_integral)).is_zero());
        // in w = a z + b the equation becomes w'' = w w'
        CHECK(f == RF(a) * Z + RF(b));
        CHECK(r.witnesses.normalization == std::make_pair(a, b));
    }
}

TEST_CASE("rosenlicht examples") {
    auto a = rosenlicht_classify(Z);
    CHECK(a.verdict == RosenlichtVerdict::nonorthogonal);
    CHECK(a.kind == NonorthogonalKind::log_derivative);
    REQUIRE(a.log_witness);
    CHECK(log_witness_holds(to_param(Z), *a.log_witness));

    const PF zp = PF::variable();
    const PF w2 = zp * zp + param_c();
    auto b = rosenlicht_classify(w2);
    CHECK(b.verdict == RosenlichtVerdict::nonorthogonal);
    CHECK(b.kind == NonorthogonalKind::log_derivative);
    REQUIRE(b.log_witness);
    CHECK(log_witness_holds(w2, *b.log_witness));

    const PF w3 = zp * zp * zp + PF(ParamField(2)) * zp * zp + PF(ParamField(5)) * zp + param_c();
    CHECK(rosenlicht_classify(w3).verdict == RosenlichtVerdict::orthogonal);

    // 1/w = 1 is a derivative
    auto e = rosenlicht_classify(C(1));
    CHECK(e.verdict == RosenlichtVerdict::nonorthogonal);
    CHECK(e.kind == NonorthogonalKind::exact_derivative);

    CHECK_THROWS_WITH_AS(rosenlicht_classify(RF()), "degenerate fiber", PreconditionError);
}

TEST_CASE("cubic fibers are orthogonal and quadratic ones carry a log witness") {
    std::mt19937_64 rng(51);
    const PF zp = PF::variable();
    for (int it = 0; it < 20; ++it) {
        const Rational a = testsupport::random_rational(rng), b = testsupport::random_rational(rng);
        const PF cubic = zp * zp * zp + PF(ParamField(a)) * zp * zp + PF(ParamField(b)) * zp + param_c();
        CHECK(rosenlicht_classify(cubic).verdict == RosenlichtVerdict::orthogonal);
        const PF quad = zp * zp + PF(ParamField(a)) * zp + PF(ParamField(b)) + param_c();
        auto r = rosenlicht_classify(quad);
        CHECK(r.verdict == RosenlichtVerdict::nonorthogonal);
        REQUIRE(r.log_witness);
        CHECK(log_witness_holds(quad, *r.log_witness));
    }
}

TEST_CASE("generic fiber squarefree") {
    using testsupport::P;
    auto a = generic_fiber_squarefree(P({0, 0, 1}));
    CHECK(a.generically_squarefree);
    CHECK(a.bad_set.degree() == 1);
    CHECK(a.bad_set(Rational(0)) == 0);

    auto b = generic_fiber_squarefree(P({0, 0, 0, 1}));
    CHECK(b.bad_set == P({0, 0, -27}));

    auto c = generic_fiber_squarefree(P({0, -3, 0, 1}));
    CHECK(c.bad_set == P({108, 0, -27}));
    CHECK(c.bad_set(Rational(2)) == 0);
    CHECK(c.bad_set(Rational(-2)) == 0);

    CHECK_THROWS_AS(generic_fiber_squarefree(P({4})), PreconditionError);

    // discriminant values against an independent Sylvester determinant
    std::mt19937_64 rng(52);
    for (int it = 0; it < 30; ++it) {
        Poly<Rational> g = testsupport::random_poly(rng, 4);
        if (g.degree() < 1) continue;
        auto fs = generic_fiber_squarefree(g);
        CHECK(fs.generically_squarefree);
        const Rational c0 = testsupport::random_rational(rng);
        const Poly<Rational> gc = g + Poly<Rational>(c0);
        const int n = gc.degree();
        Rational disc = testsupport::sylvester_resultant(gc, gc.derivative()) / gc.lc();
        if ((n * (n - 1) / 2) % 2 == 1) disc = -disc;
        CHECK(fs.bad_set(c0) == disc);
    }
}

TEST_CASE("lienard family orthogonality") {
    const RF inv_y = C(1) / Z;
    Family rational_family = parse_family("(a2*y^2 + a1*y + a0)/(b1*y + b0)", "y");
    REQUIRE(rational_family.parameters == std::vector<std::string>{"a0", "a1", "a2", "b0", "b1"});
    std::vector<Rational> s0 = {0, 0, 0, 1, 0};
    CHECK(lienard_family_orthogonality(inv_y, rational_family, s0) == LienardVerdict::orthogonal_for_generic_s);
    std::vector<Rational> s1 = {1, 0, 0, 1, 0};
    CHECK(lienard_family_orthogonality(inv_y, rational_family, s1) == LienardVerdict::inapplicable);

    Family scaled = parse_family("a*(y^3 + y + 1)", "y");
    CHECK(lienard_family_orthogonality(inv_y, scaled, {Rational(0)}) == LienardVerdict::orthogonal_for_generic_s);
    CHECK(lienard_family_orthogonality(C(2) * Z, scaled, {Rational(0)}) == LienardVerdict::inapplicable);
    CHECK(to_string(LienardVerdict::orthogonal_for_generic_s) == "orthogonal-for-generic-s");

    CHECK_THROWS_AS(lienard_family_orthogonality(inv_y, scaled, {Rational(0), Rational(1)}), PreconditionError);
    CHECK_THROWS_AS(lienard_family_orthogonality(inv_y, rational_family, {0, 0, 0, 0, 0}), PreconditionError);
}

TEST_CASE("derivatives are never strongly minimal and a simple pole makes them so") {
    std::mt19937_64 rng(53);
    for (int it = 0; it < 60; ++it) {
        const RF g = testsupport::random_ratfunc(rng, 3);
        const Rational q = testsupport::random_rational(rng);
        const RF f = g.derivative();
        CHECK_FALSE(classify_poizat(f).strongly_minimal);
        auto r = classify_poizat(f + C(1) / (Z - RF(q)));
        CHECK(r.strongly_minimal);
        CHECK(r.geometrically_trivial);
    }
}

TEST_CASE("strong minimality is invariant under affine substitution") {
    std::mt19937_64 rng(54);
    for (int it = 0; it < 60; ++it) {
        RF f = testsupport::random_ratfunc(rng, 3);
        if (it % 2 == 0) f = f.derivative();
        Rational a = testsupport::random_rational(rng), b = testsupport::random_rational(rng);
        if (a == 0) a = 1;
        const auto r1 = classify_poizat(f), r2 = classify_poizat(f.compose_affine(a, b));
        CHECK(r1.strongly_minimal == r2.strongly_minimal);
        if (r1.strongly_minimal) CHECK(r1.geometrically_trivial);
    }
}

TEST_CASE("rosenlicht recognizes scaled log derivatives") {
    std::mt19937_64 rng(55);
    for (int it = 0; it < 25; ++it) {
        const RF u = testsupport::random_ratfunc(rng, 3);
        if (u.is_constant()) continue;
        Rational k = testsupport::random_rational(rng);
        if (k == 0) k = 1;
        const RF w = RF(k) * u.derivative() / u;
        auto r = rosenlicht_classify(C(1) / w);
        CHECK(r.verdict == RosenlichtVerdict::nonorthogonal);
    }
}

TEST_CASE("degree two polynomials carry dop and the maximal model count") {
    std::mt19937_64 rng(56);
    for (int it = 0; it < 30; ++it) {
        RF f = random_poly_rf(rng, 2);
        if (f.num().degree() != 2) continue;
        auto r = classify_poizat(f);
        CHECK(r.dop == DopFlag::yes);
        CHECK(r.model_count_profile == ModelCountProfile::two_to_kappa);
    }
}
