#include <random>

#include "doctest.h"
#include "poizat/affine.hpp"
#include "poizat/expr.hpp"
#include "poizat/factor.hpp"
#include "poizat/hermite.hpp"
#include "test_support.hpp"

using namespace poizat;

namespace {

RatFunc<Rational> Z(const std::string& s) { return parse_univariate(s); }

RatFunc<Rational> simple_pole(const Rational& c, const Rational& a) {
    return RatFunc<Rational>(Poly<Rational>(c), Poly<Rational>(std::vector<Rational>{-a, Rational(1)}));
}

// f = g' + sum c_i/(z - a_i) with n distinct rational poles.
RatFunc<Rational> random_minimal(std::mt19937_64& rng, int n) {
    RatFunc<Rational> f = testsupport::random_ratfunc(rng, 2).derivative();
    std::vector<Rational> poles;
    while (static_cast<int>(poles.size()) < n) {
        Rational a = testsupport::random_rational(rng, 12, 3);
        bool dup = false;
        for (const auto& b : poles) dup = dup || a == b;
        if (dup || is_zero(f.den()(a))) continue;
        Rational c = testsupport::random_rational(rng, 5, 3);
        if (is_zero(c)) continue;
        poles.push_back(a);
        f += simple_pole(c, a);
    }
    return f;
}

// c * n/(z^n - 1) + g(z^n): rotation-symmetric of order n.
RatFunc<Rational> rotation_model(const Rational& c, int n, const Poly<Rational>& g) {
    Poly<Rational> zn = Poly<Rational>::monomial(Rational(1), n);
    RatFunc<Rational> f(Poly<Rational>(c * n), zn - Poly<Rational>(Rational(1)));
    return f + RatFunc<Rational>(g.compose(zn));
}

Complex eval_f(const RatFunc<Rational>& f, const Complex& z) {
    return eval_complex(f.num(), z) / eval_complex(f.den(), z);
}

// Independent count: maps sending two chosen poles to any ordered pair of poles,
// kept when they permute the poles and fix f at sample points.
int numeric_stabilizer_order(const RatFunc<Rational>& f) {
    const int digits = 40;
    const mpfr_prec_t bits = bits_for_digits(digits);
    auto poles = numeric_roots(squarefree_part(f.den()), digits);
    auto close = [&](const Complex& u, const Complex& v) { return (u - v).abs().to_double() < 1e-15; };
    std::vector<Complex> samples;
    for (int k = 0; k < 3; ++k)
        samples.emplace_back(Real(Rational(3 + 2 * k, 7), bits), Real(Rational(5 - k, 11), bits));
    auto fixes_at_samples = [&](const Complex& a, const Complex& b) {
        for (const auto& s : samples)
            if (!close(eval_f(f, a * s + b), eval_f(f, s))) return false;
        return true;
    };
    if (poles.size() == 1) return fixes_at_samples(Complex(Real(Rational(1), bits), Real(bits)), Complex(bits)) ? 1 : 0;
    int count = 0;
    for (size_t j = 0; j < poles.size(); ++j)
        for (size_t k = 0; k < poles.size(); ++k) {
            if (j == k) continue;
            Complex a = (poles[k] - poles[j]) / (poles[1] - poles[0]);
            Complex b = poles[j] - a * poles[0];
            bool perm = true;
            for (const auto& p : poles) {
                bool hit = false;
                for (const auto& q : poles) hit = hit || close(a * p + b, q);
                perm = perm && hit;
            }
            if (perm && fixes_at_samples(a, b)) ++count;
        }
    return count;
}

}  // namespace

TEST_CASE("stabilizer examples") {
    auto g1 = affine_stabilizer(Z("1/z"));
    CHECK(g1.order == 1);
    CHECK(to_string(g1.elements[0]) == "(1, 0)");
    auto g2 = affine_stabilizer(Z("2/(z^2 - 1)"));
    CHECK(g2.order == 2);
    REQUIRE(g2.elements.size() == 2);
    CHECK(to_string(g2.elements[0]) == "(1, 0)");
    CHECK(to_string(g2.elements[1]) == "(-1, 0)");
    CHECK(affine_stabilizer(Z("3*z^2 + 1/z")).order == 1);
    CHECK(verify_stabilizer(Z("2/(z^2 - 1)"), g2));
    CHECK_THROWS_AS(affine_stabilizer(Z("z^2 + 1/z^2")), PreconditionError);
}

TEST_CASE("stabilizer bounds on random strongly minimal functions") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 100; ++it) {
        const int n = 1 + it % 3;
        auto f = random_minimal(rng, n);
        REQUIRE(nonzero_residue_count(f) == n);
        auto G = affine_stabilizer(f);
        CHECK(G.order <= n);
        if (n >= 2) CHECK(G.order <= n * (n - 1));
        for (const auto& m : G.elements) CHECK(fixes(f, m));
        CHECK(verify_stabilizer(f, G));
        CHECK(G.order == numeric_stabilizer_order(f));
    }
}

TEST_CASE("rotation-symmetric functions have full stabilizers") {
    std::mt19937_64 rng(42);
    for (int n : {1, 2, 3, 4, 6}) {
        for (int it = 0; it < 4; ++it) {
            Rational c = testsupport::random_rational(rng, 5, 3);
            if (is_zero(c)) c = 1;
            Poly<Rational> g = testsupport::random_poly(rng, 2, 5, false);
            Rational alpha = testsupport::random_rational(rng, 5, 3), beta = testsupport::random_rational(rng);
            if (is_zero(alpha)) alpha = 2;
            auto f = rotation_model(c, n, g).compose_affine(alpha, beta);
            auto G = affine_stabilizer(f);
            CHECK(G.order == n);
            CHECK(verify_stabilizer(f, G));
            CHECK(G.order == numeric_stabilizer_order(f));
            for (const auto& m : G.elements) CHECK(fixes(f, m));
        }
    }
}

TEST_CASE("stabilizer is conjugation covariant") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 30; ++it) {
        auto f = it % 2 ? random_minimal(rng, 1 + it % 3) : rotation_model(Rational(1 + it % 4), 2 + it % 3, Poly<Rational>());
        Rational alpha = testsupport::random_rational(rng), beta = testsupport::random_rational(rng);
        if (is_zero(alpha)) continue;
        auto G = affine_stabilizer(f);
        auto H = affine_stabilizer(f.compose_affine(alpha, beta));
        REQUIRE(G.order == H.order);
        for (size_t i = 0; i < G.elements.size(); ++i) {
            const auto& s = G.elements[i];
            const auto& t = H.elements[i];
            CHECK(s.minpoly == t.minpoly);
            CHECK(s.root_index == t.root_index);
            // tau^-1 . sigma . tau with tau(z) = alpha z + beta
            Algebraic expect = (s.a * Algebraic(beta) + s.b - Algebraic(beta)) / Algebraic(alpha);
            CHECK(t.b.rep() == expect.rep());
        }
    }
}

TEST_CASE("transporter examples") {
    auto t1 = affine_transporter(Z("1/z"), Z("1/(z - 1)"));
    REQUIRE(t1.size() == 1);
    CHECK(to_string(t1[0]) == "(1, 1)");
    auto t2 = affine_transporter(Z("1/z"), Z("2/z"));
    REQUIRE(t2.size() == 1);
    CHECK(to_string(t2[0]) == "(2, 0)");
    CHECK(Z("2/z").compose_affine(Rational(2), Rational(0)) == Z("1/z"));
    CHECK(affine_transporter(Z("1/z"), Z("1/z + 1/(z - 1)")).empty());
    CHECK(affine_transporter(Z("1/z + z"), Z("1/z + 2*z")).empty());
    auto t3 = affine_transporter(Z("2/(z^2 - 1)"), Z("2/(z^2 - 1)"));
    auto G = affine_stabilizer(Z("2/(z^2 - 1)"));
    REQUIRE(t3.size() == G.elements.size());
}

TEST_CASE("transporters are cosets of the stabilizer") {
    std::mt19937_64 rng(44);
    for (int it = 0; it < 40; ++it) {
        auto f = it % 2 ? random_minimal(rng, 1 + it % 3) : rotation_model(Rational(1), 2 + it % 4, Poly<Rational>(std::vector<Rational>{0, 1}));
        Rational alpha = testsupport::random_rational(rng), beta = testsupport::random_rational(rng);
        if (is_zero(alpha)) continue;
        // f(z) = g(alpha z + beta) for g = f((z - beta)/alpha)
        auto g = f.compose_affine(Rational(1) / alpha, -beta / alpha);
        auto T = affine_transporter(f, g);
        CHECK(T.size() == affine_stabilizer(f).elements.size());
        bool has_tau = false;
        for (const auto& m : T) {
            CHECK(lift_ratfunc(g).compose_affine(m.a, m.b) == lift_ratfunc(f));
            has_tau = has_tau || (m.is_rational() && m.a == Algebraic(alpha) && m.b == Algebraic(beta));
        }
        CHECK(has_tau);
    }
}

TEST_CASE("acl profile") {
    CHECK(to_string(acl_profile(Z("1/z"))) == "strictly_disintegrated");
    CHECK(to_string(acl_profile(Z("2/(z^2 - 1)"))) == "omega_categorical(2)");
    CHECK(to_string(acl_profile(Z("1/(z - 1) - 1/(z + 1) + z^2"))) == "omega_categorical(2)");
    CHECK(Z("1/(z - 1) - 1/(z + 1) + z^2").compose_affine(Rational(-1), Rational(0)) == Z("1/(z - 1) - 1/(z + 1) + z^2"));
    CHECK_THROWS_AS(acl_profile(Z("1/z^2")), PreconditionError);
}

TEST_CASE("canonical form detection") {
    auto w = canonical_form_detect(Z("2/(z^2 - 1)"));
    REQUIRE(w.has_value());
    CHECK(w->n == 2);
    CHECK(to_string(w->conjugator) == "(1, 0)");
    CHECK(w->c == Algebraic(1));
    CHECK(w->g_poly.is_zero());
    CHECK(verify_canonical_form(Z("2/(z^2 - 1)"), *w));

    CHECK_THROWS_AS(canonical_form_detect(Z("-1/(z - 1) + 1/(z + 1) + 1/(z - 2)^2 + 1/(z + 2)^2")), PreconditionError);
    CHECK_FALSE(canonical_form_detect(Z("1/z + 2/(z - 1)")).has_value());

    std::mt19937_64 rng(45);
    for (int n : {2, 3, 4, 6}) {
        Rational c = testsupport::random_rational(rng, 5, 2);
        if (is_zero(c)) c = 3;
        Poly<Rational> g = testsupport::random_poly(rng, 2, 5, false);
        for (const Rational& alpha : {Rational(2), Rational(1, 3)}) {
            auto f = rotation_model(c, n, g).compose_affine(alpha, Rational(5, 2));
            auto wn = canonical_form_detect(f);
            REQUIRE(wn.has_value());
            CHECK(wn->n == n);
            CHECK(verify_canonical_form(f, *wn));
        }
        // poles on the circle of radius 2^(1/n): conjugator leaves Q
        Poly<Rational> zn = Poly<Rational>::monomial(Rational(1), n);
        auto f2 = RatFunc<Rational>(Poly<Rational>(Rational(1)), zn - Poly<Rational>(Rational(2)));
        auto w2 = canonical_form_detect(f2);
        REQUIRE(w2.has_value());
        CHECK(w2->conjugator.minpoly.degree() >= 1);
        CHECK(verify_canonical_form(f2, *w2));
    }
}

TEST_CASE("relation report") {
    auto r = relation_report(Z("1/z"), Z("1/(z - 1)"));
    REQUIRE(r.lines.size() == 1);
    CHECK(r.lines[0] == "y -> y + 1");
    auto s = relation_report(Z("1/z"), Z("1/z"));
    REQUIRE(s.lines.size() == 1);
    CHECK(s.lines[0] == "y -> y");
    CHECK_THROWS_AS(relation_report(Z("1/z"), Z("1/z^2")), PreconditionError);
    auto t = relation_report(Z("3/(z^3 - 1)"), Z("3/(z^3 - 1)"));
    CHECK(t.lines.size() == 3);
    CHECK(relation_report(Z("1/z"), Z("1/z + 1/(z - 1)")).relations.empty());
}
