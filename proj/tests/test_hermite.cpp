#include <random>

#include "doctest.h"
#include "poizat/expr.hpp"
#include "poizat/hermite.hpp"
#include "test_support.hpp"

using namespace poizat;
using testsupport::P;

namespace {
RatFunc<Rational> Z(const std::string& s) { return parse_univariate(s); }

template <class K>
bool witness_holds(const RatFunc<K>& f, const LogDerivativeWitness<K>& w) {
    RatFunc<AlgNum<K>> lhs = w.c1 * (w.u.derivative() / w.u);
    return lhs == lift_ratfunc(f);
}
}  // namespace

TEST_CASE("hermite examples") {
    auto h = hermite_reduce(Z("(z^2 + 1)/(z^2*(z - 1))"));
    CHECK(h.rational_part == Z("1/z"));
    CHECK(h.log_part == Z("-1/z + 2/(z - 1)"));
    CHECK(antiderivative(Z("2*z")).value() == Z("z^2"));
    CHECK(antiderivative(Z("1/z^2")).value() == Z("-1/z"));
    CHECK(antiderivative(Z("3*z^2 + 2*z + 5")).value() == Z("z^3 + z^2 + 5*z"));
    CHECK_FALSE(is_exact_derivative(Z("1/z")));
}

TEST_CASE("decomposition identity on random inputs") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 1000; ++it) {
        Poly<Rational> d = testsupport::random_poly(rng, 2) * pow(testsupport::random_poly(rng, 2), 2) *
                           pow(testsupport::random_poly(rng, 1), 3);
        RatFunc<Rational> f(testsupport::random_poly(rng, 6, 9, false), d);
        auto h = hermite_reduce(f);
        CHECK(h.rational_part.derivative() + h.log_part == f);
        CHECK(h.log_part.is_proper());
        CHECK(is_squarefree(h.log_part.den()));
    }
}

TEST_CASE("exact derivative recognition") {
    std::mt19937_64 rng(32);
    for (int it = 0; it < 200; ++it) {
        auto g = testsupport::random_ratfunc(rng, 3);
        auto dg = g.derivative();
        CHECK(is_exact_derivative(dg));
        auto anti = antiderivative(dg).value();
        CHECK(anti.derivative() == dg);
        Rational q = testsupport::random_rational(rng, 20, 7);
        if (is_zero(dg.den()(q))) continue;
        RatFunc<Rational> pole(P({1}), Poly<Rational>(std::vector<Rational>{-q, Rational(1)}));
        CHECK_FALSE(is_exact_derivative(dg + pole));
    }
}

TEST_CASE("residue profile examples") {
    auto p1 = residue_profile(Z("1/z"));
    CHECK(p1.nonzero_residue_count == 1);
    CHECK(p1.rt_resultant == P({-1, 1}));
    CHECK(p1.all_poles_simple);
    auto p2 = residue_profile(Z("2/(z^2 - 1)"));
    CHECK(p2.nonzero_residue_count == 2);
    CHECK(p2.rt_resultant == P({-1, 0, 1}));
    auto p3 = residue_profile(parse_parametric("1/(z^3 + 2*z + c)"));
    CHECK(p3.nonzero_residue_count == 3);
    CHECK_FALSE(residue_profile(Z("1/z^2 + 1/(z - 1)")).all_poles_simple);
    CHECK(residue_profile(Z("1/z^2 + 1/(z - 1)")).nonzero_residue_count == 1);
}

TEST_CASE("rt_resultant equals the product over explicit residues") {
    std::mt19937_64 rng(33);
    for (int it = 0; it < 100; ++it) {
        std::uniform_int_distribution<int> nd(1, 5);
        int n = nd(rng);
        std::vector<Rational> poles, res;
        RatFunc<Rational> f;
        for (int i = 0; i < n; ++i) {
            Rational a = testsupport::random_rational(rng, 30, 5);
            bool dup = false;
            for (const auto& b : poles) dup = dup || b == a;
            Rational r = testsupport::random_rational(rng, 9, 3);
            if (dup || is_zero(r)) continue;
            poles.push_back(a);
            res.push_back(r);
            f += RatFunc<Rational>(Poly<Rational>(r), Poly<Rational>(std::vector<Rational>{-a, Rational(1)}));
        }
        Poly<Rational> expect(Rational(1));
        for (const auto& r : res) expect = expect * Poly<Rational>(std::vector<Rational>{-r, Rational(1)});
        CHECK(rt_resultant(f) == expect);
        CHECK(nonzero_residue_count(f) == static_cast<int>(res.size()));
    }
}

TEST_CASE("residue sum matches the subleading coefficient numerically") {
    std::mt19937_64 rng(34);
    for (int it = 0; it < 40; ++it) {
        Poly<Rational> d = testsupport::random_poly(rng, 5);
        if (d.degree() < 1 || !is_squarefree(d)) continue;
        RatFunc<Rational> f(testsupport::random_poly(rng, d.degree() - 1, 9, false), d);
        if (f.is_zero() || !f.is_proper()) continue;
        auto R = rt_resultant(f);
        Rational sum_exact = -R.coeff(R.degree() - 1);
        auto res = numeric_residues(f, 40);
        const auto bits = bits_for_digits(40);
        Complex s(bits);
        for (const auto& r : res) s = s + r;
        CHECK((s.re - Real(sum_exact, bits)).abs().to_double() < 1e-25);
        CHECK(s.im.abs().to_double() < 1e-25);
        for (const auto& r : res) CHECK(eval_complex(R, r).abs().to_double() < 1e-20);
    }
}

TEST_CASE("nonzero residue count is affine invariant") {
    std::mt19937_64 rng(35);
    for (int it = 0; it < 100; ++it) {
        auto f = testsupport::random_ratfunc(rng, 4);
        Rational a = testsupport::random_rational(rng);
        if (is_zero(a)) continue;
        Rational b = testsupport::random_rational(rng);
        CHECK(nonzero_residue_count(f.compose_affine(a, b)) == nonzero_residue_count(f));
    }
}

TEST_CASE("log-derivative examples") {
    auto r = is_log_derivative_multiple(Z("2/(z^2 - 1)"));
    REQUIRE(r.verdict == Verdict::yes);
    CHECK(witness_holds(Z("2/(z^2 - 1)"), *r.witness));
    CHECK((r.witness->c1 == AlgNum<Rational>(1) || r.witness->c1 == AlgNum<Rational>(-1)));
    auto u = r.witness->u;
    auto expect = lift_ratfunc(Z("(z - 1)/(z + 1)"));
    CHECK((u == expect || u == RatFunc<AlgNum<Rational>>(Poly<AlgNum<Rational>>(AlgNum<Rational>(1))) / expect));

    CHECK(is_log_derivative_multiple(Z("1/z^2")).verdict == Verdict::no);
    CHECK(is_log_derivative_multiple(Z("1/z + 1/(z - 1)*2")).verdict == Verdict::yes);
    CHECK(is_log_derivative_multiple(Z("1/(z^3 - 2)")).verdict == Verdict::no);
    CHECK(is_log_derivative_multiple(Z("1/z + 1/(z^2 - 2)")).verdict == Verdict::no);

    auto q = is_log_derivative_multiple(Z("1/(z^2 + 1)"));
    REQUIRE(q.verdict == Verdict::yes);
    CHECK(q.witness->c1.context() != nullptr);
    CHECK(witness_holds(Z("1/(z^2 + 1)"), *q.witness));

    auto sq2 = is_log_derivative_multiple(Z("1/(z^2 - 2)"));
    REQUIRE(sq2.verdict == Verdict::yes);
    CHECK(witness_holds(Z("1/(z^2 - 2)"), *sq2.witness));
}

TEST_CASE("log-derivative over Q(c)") {
    auto f = parse_parametric("1/(z^2 + c)");
    auto r = is_log_derivative_multiple(f);
    REQUIRE(r.verdict == Verdict::yes);
    CHECK(witness_holds(f, *r.witness));

    std::mt19937_64 rng(36);
    for (int it = 0; it < 5; ++it) {
        Rational a = testsupport::random_rational(rng), b = testsupport::random_rational(rng);
        auto g = parse_parametric("1/(z^3 + (" + to_string(a) + ")*z^2 + (" + to_string(b) + ")*z + c)");
        LogDerivativeOptions opt;
        opt.seed = static_cast<std::uint64_t>(it);
        CHECK(is_log_derivative_multiple(g, opt).verdict == Verdict::no);
    }
    auto h = parse_parametric("c/z - 2*c/(z - c)");
    auto hr = is_log_derivative_multiple(h);
    REQUIRE(hr.verdict == Verdict::yes);
    CHECK(witness_holds(h, *hr.witness));
}

TEST_CASE("logarithmic derivatives of random products are recognized") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<int> ex(-3, 3), cnt(1, 4);
    for (int it = 0; it < 60; ++it) {
        RatFunc<Rational> u(P({1}));
        std::vector<Rational> roots;
        int k = cnt(rng);
        for (int i = 0; i < k; ++i) {
            Rational a = testsupport::random_rational(rng, 20, 3);
            int e = ex(rng);
            bool dup = false;
            for (const auto& b : roots) dup = dup || a == b;
            if (e == 0 || dup) continue;
            roots.push_back(a);
            u = u * pow(RatFunc<Rational>(Poly<Rational>(std::vector<Rational>{-a, Rational(1)})), e);
        }
        if (roots.empty()) continue;
        Rational c1 = testsupport::random_rational(rng);
        if (is_zero(c1)) continue;
        auto f = RatFunc<Rational>(c1) * (u.derivative() / u);
        auto r = is_log_derivative_multiple(f);
        REQUIRE(r.verdict == Verdict::yes);
        CHECK(witness_holds(f, *r.witness));
        CHECK(numeric_log_derivative_check(f, 64) == Verdict::yes);
    }
}

TEST_CASE("exact and numeric routes agree on random functions") {
    std::mt19937_64 rng(38);
    for (int it = 0; it < 60; ++it) {
        Poly<Rational> d = testsupport::random_poly(rng, 4);
        if (d.degree() < 1 || !is_squarefree(d)) continue;
        RatFunc<Rational> f(testsupport::random_poly(rng, d.degree() - 1, 9, false), d);
        if (f.is_zero()) continue;
        CHECK(is_log_derivative_multiple(f).verdict == numeric_log_derivative_check(f, 64));
    }
}

TEST_CASE("linear disjointness of residue spans") {
    using V = std::vector<std::vector<Rational>>;
    CHECK(q_linear_disjointness(V{{1, 0}, {-1, 0}}, V{{0, 1}}));
    CHECK_FALSE(q_linear_disjointness(V{{1, 0}}, V{{2, 0}}));
    CHECK_FALSE(q_linear_disjointness(V{{Rational(1, 2)}, {Rational(-1, 2)}}, V{{Rational(1, 3)}, {Rational(-1, 3)}}));
    CHECK_THROWS_AS(q_linear_disjointness(V{{1, 0}}, V{{1}}), PreconditionError);
}
