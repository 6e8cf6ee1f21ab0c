#include "poizat/affine.hpp"

#include <algorithm>
#include <numeric>

#include "poizat/factor.hpp"
#include "poizat/hermite.hpp"

namespace poizat {

namespace {

constexpr int kRootDigits = 40;

struct PowerConstraint {
    long s;      // a^s = r with s > 0
    Rational r;
};

long ext_gcd(long a, long b, long& u, long& v) {
    if (b == 0) {
        u = 1;
        v = 0;
        return a;
    }
    long u1, v1;
    long g = ext_gcd(b, a % b, u1, v1);
    u = v1;
    v = u1 - (a / b) * v1;
    return g;
}

// Adds the condition a^s = r for arbitrary integer s; false when it can never hold.
bool add_constraint(long s, const Rational& r, std::vector<PowerConstraint>& out) {
    if (s == 0) return r == 1;
    if (s < 0) out.push_back({-s, Rational(1) / r});
    else out.push_back({s, r});
    return true;
}

// Coefficientwise conditions for p1(z) = p2(a*z) / a^d.
bool collect(const Poly<Rational>& p1, const Poly<Rational>& p2, long d, std::vector<PowerConstraint>& out) {
    if (p1.degree() != p2.degree()) return false;
    for (int k = 0; k <= p1.degree(); ++k) {
        const bool z1 = is_zero(p1[k]), z2 = is_zero(p2[k]);
        if (z1 != z2) return false;
        if (z1) continue;
        if (!add_constraint(k - d, p1[k] / p2[k], out)) return false;
    }
    return true;
}

Rational centroid(const Poly<Rational>& den) {
    const int d = den.degree();
    return -den[d - 1] / (Rational(d) * den.lc());
}

void require_residue(const RatFunc<Rational>& f) {
    if (nonzero_residue_count(f) < 1) throw PreconditionError("infinite or unbounded stabilizer not supported");
}

Poly<Rational> power_binomial(long h, const Rational& rho) {
    Poly<Rational> p = Poly<Rational>::monomial(Rational(1), static_cast<int>(h));
    return p - Poly<Rational>(rho);
}

// The integer e with cyclotomic(e) = p among the divisors of n, or 0.
int cyclotomic_index(const Poly<Rational>& p, int n) {
    for (int e = 1; e <= n; ++e)
        if (n % e == 0 && cyclotomic(e) == p) return e;
    return 0;
}

int nth_coprime(int index, int e) {
    for (int j = 0, seen = 0; j < e; ++j) {
        if (std::gcd(j, e) != 1) continue;
        if (seen++ == index) return j;
    }
    throw AlgebraError("root index out of range");
}

Algebraic eval_rep(const Poly<Rational>& rep, const Algebraic& x) {
    Algebraic acc;
    for (int i = rep.degree(); i >= 0; --i) acc = acc * x + Algebraic(rep[i]);
    return acc;
}

}  // namespace

AffineMap rational_map(const Rational& a, const Rational& b) {
    return AffineMap{Poly<Rational>(std::vector<Rational>{-a, Rational(1)}), 0, Algebraic(a), Algebraic(b)};
}

std::string to_string(const AffineMap& m) {
    std::string s = "(" + to_string(m.a) + ", " + to_string(m.b) + ")";
    if (!m.is_rational())
        s += " with a = root " + std::to_string(m.root_index) + " of " + to_string(m.minpoly, "a");
    return s;
}

std::string relation_text(const AffineMap& m, const std::string& var) {
    return to_string(Poly<Algebraic>(std::vector<Algebraic>{m.b, m.a}), var);
}

std::vector<Complex> ordered_roots(const Poly<Rational>& p, int digits) {
    std::vector<Complex> roots = numeric_roots(p, digits);
    const mpfr_prec_t bits = bits_for_digits(digits);
    Real tol(Rational(1), bits);
    mpfr_mul_2si(tol.get(), tol.get(), -static_cast<long>(bits / 2), MPFR_RNDN);
    for (auto& r : roots)
        if (r.im.abs() < tol * (r.abs() + Real(Rational(1), bits))) r.im = Real(bits);
    std::vector<std::pair<Real, Real>> keys;
    std::vector<size_t> idx(roots.size());
    std::iota(idx.begin(), idx.end(), 0);
    for (const auto& r : roots) keys.emplace_back(arg(r), r.abs());
    std::sort(idx.begin(), idx.end(), [&](size_t i, size_t j) {
        const auto& [ai, mi] = keys[i];
        const auto& [aj, mj] = keys[j];
        if ((ai - aj).abs() > tol) return ai < aj;
        return mi < mj;
    });
    std::vector<Complex> out;
    for (size_t i : idx) out.push_back(roots[i]);
    return out;
}

std::pair<Complex, Complex> numeric_map(const AffineMap& m, int digits) {
    Complex a = ordered_roots(m.minpoly, digits).at(static_cast<size_t>(m.root_index));
    Complex b = eval_complex(m.b.rep(), a);
    return {a, b};
}

RatFunc<Algebraic> apply_map(const RatFunc<Rational>& f, const AffineMap& m) {
    return lift_ratfunc(f).compose_affine(m.a, m.b);
}

bool fixes(const RatFunc<Rational>& f, const AffineMap& m) { return apply_map(f, m) == lift_ratfunc(f); }

std::vector<AffineMap> affine_transporter(const RatFunc<Rational>& f, const RatFunc<Rational>& g) {
    require_residue(f);
    require_residue(g);
    const int d = f.den().degree();
    if (g.den().degree() != d) return {};
    const Rational mf = centroid(f.den()), mg = centroid(g.den());
    const RatFunc<Rational> F = f.compose_affine(Rational(1), mf), G = g.compose_affine(Rational(1), mg);

    std::vector<PowerConstraint> cons;
    if (!collect(F.den(), G.den(), d, cons) || !collect(F.num(), G.num(), d, cons)) return {};
    if (cons.empty()) throw AlgebraError("transporter has no scaling constraint");

    long h = cons[0].s;
    Rational rho = cons[0].r;
    for (size_t i = 1; i < cons.size(); ++i) {
        long u, v;
        long g2 = ext_gcd(h, cons[i].s, u, v);
        rho = pow(rho, u) * pow(cons[i].r, v);
        h = g2;
    }
    for (const auto& c : cons)
        if (pow(rho, c.s / h) != c.r) return {};

    std::vector<AffineMap> out;
    for (const auto& [q, mult] : factor(power_binomial(h, rho)).factors) {
        (void)mult;
        Algebraic a;
        if (q.degree() == 1) a = Algebraic(-q[0]);
        else a = Algebraic::generator(Algebraic::make_context(q, "a"));
        Algebraic b = Algebraic(mg) - a * Algebraic(mf);
        if (lift_ratfunc(f) != lift_ratfunc(g).compose_affine(a, b)) continue;
        for (int i = 0; i < q.degree(); ++i) out.push_back(AffineMap{q, i, a, b});
    }
    return out;
}

StabilizerGroup affine_stabilizer(const RatFunc<Rational>& f) {
    std::vector<AffineMap> maps = affine_transporter(f, f);
    StabilizerGroup G;
    G.order = static_cast<int>(maps.size());
    G.center = centroid(f.den());
    std::vector<std::pair<int, AffineMap>> tagged;
    for (auto& m : maps) {
        const int e = cyclotomic_index(m.minpoly, G.order);
        if (e == 0) throw AlgebraError("stabilizer element is not a root of unity");
        tagged.emplace_back(nth_coprime(m.root_index, e) * (G.order / e), std::move(m));
    }
    std::sort(tagged.begin(), tagged.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [k, m] : tagged) {
        G.exponents.push_back(k);
        G.elements.push_back(std::move(m));
    }
    G.is_cyclic = true;
    G.generator = G.elements.at(G.order > 1 ? 1 : 0);
    return G;
}

bool verify_stabilizer(const RatFunc<Rational>& f, const StabilizerGroup& G) {
    const int N = G.order;
    if (N < 1 || static_cast<int>(G.elements.size()) != N || static_cast<int>(G.exponents.size()) != N) return false;
    auto ctx = Algebraic::make_context(cyclotomic(N), "w");
    const Algebraic zeta = Algebraic::generator(ctx);
    const RatFunc<Algebraic> F = lift_ratfunc(f);

    std::vector<std::pair<Algebraic, Algebraic>> emb;
    std::vector<bool> seen(static_cast<size_t>(N), false);
    const mpfr_prec_t bits = bits_for_digits(kRootDigits);
    for (int i = 0; i < N; ++i) {
        const AffineMap& m = G.elements[static_cast<size_t>(i)];
        const int k = G.exponents[static_cast<size_t>(i)];
        if (k < 0 || k >= N || seen[static_cast<size_t>(k)]) return false;
        seen[static_cast<size_t>(k)] = true;
        Algebraic a = field_pow(zeta, k);
        if (!is_zero(eval_rep(m.minpoly, a))) return false;
        // the documented root ordering must put exp(2 pi i k / N) at root_index
        auto [an, bn] = numeric_map(m, kRootDigits);
        Real pi(bits);
        mpfr_const_pi(pi.get(), MPFR_RNDN);
        Real theta = pi * Real(make_rational(2 * k, N), bits);
        Real c(bits), s(bits);
        mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
        if ((an - Complex(c, s)).abs().to_double() > 1e-20) return false;
        emb.emplace_back(a, eval_rep(m.b.rep(), a));
    }
    auto find = [&](const Algebraic& a, const Algebraic& b) {
        for (const auto& [x, y] : emb)
            if (x == a && y == b) return true;
        return false;
    };
    auto compose = [](const std::pair<Algebraic, Algebraic>& s, const std::pair<Algebraic, Algebraic>& t) {
        return std::make_pair(s.first * t.first, s.first * t.second + s.second);
    };
    if (!find(Algebraic(1), Algebraic(0))) return false;
    for (const auto& s : emb) {
        if (F.compose_affine(s.first, s.second) != F) return false;
        Algebraic ia = s.first.inverse();
        if (!find(ia, -(s.second * ia))) return false;
        for (const auto& t : emb) {
            auto st = compose(s, t);
            if (!find(st.first, st.second)) return false;
            for (const auto& u : emb) {
                auto l = compose(st, u), r = compose(s, compose(t, u));
                if (l.first != r.first || l.second != r.second) return false;
            }
        }
    }
    return true;
}

std::string to_string(const AclProfile& p) {
    if (p.kind == AclKind::strictly_disintegrated) return "strictly_disintegrated";
    return "omega_categorical(" + std::to_string(p.k) + ")";
}

AclProfile acl_profile(const RatFunc<Rational>& f) {
    if (is_exact_derivative(f)) throw PreconditionError("not strongly minimal");
    const int n = nonzero_residue_count(f);
    const int k = affine_stabilizer(f).order;
    if (k > std::max(1, n) || (n >= 2 && k > n * (n - 1))) throw AlgebraError("stabilizer exceeds the residue bound");
    return AclProfile{k == 1 ? AclKind::strictly_disintegrated : AclKind::omega_categorical, k};
}

bool verify_canonical_form(const RatFunc<Rational>& f, const CanonicalFormWitness& w) {
    const int n = w.n;
    if (n < 1) return false;
    const Poly<Rational> zn1 = power_binomial(n, Rational(1));
    const RatFunc<Rational> model(Poly<Rational>(Rational(n)), zn1);

    auto xctx = Algebraic::make_context(cyclotomic(n), "xi");
    const Algebraic xi = Algebraic::generator(xctx);
    RatFunc<Algebraic> sum;
    for (int k = 0; k < n; ++k) {
        Algebraic r = field_pow(xi, k);
        sum += RatFunc<Algebraic>(Poly<Algebraic>(r), Poly<Algebraic>(std::vector<Algebraic>{-r, Algebraic(1)}));
    }
    if (sum != lift_ratfunc(model)) return false;

    Poly<Algebraic> tail;
    for (int k = 0; k <= w.g_poly.degree(); ++k)
        tail += Poly<Algebraic>::monomial(w.g_poly[k], k * n);
    RatFunc<Algebraic> rhs = w.c * lift_ratfunc(model) + RatFunc<Algebraic>(tail);
    return apply_map(f, w.conjugator) == rhs;
}

std::optional<CanonicalFormWitness> canonical_form_detect(const RatFunc<Rational>& f) {
    if (!is_squarefree(f.den())) throw PreconditionError("canonical form requires simple poles");
    const int n = nonzero_residue_count(f);
    if (n < 2) throw PreconditionError("canonical form needs at least two poles");
    const StabilizerGroup G = affine_stabilizer(f);
    if (G.order != n) return std::nullopt;

    const Rational m = G.center;
    const Poly<Rational> D = f.compose_affine(Rational(1), m).den();
    if (D.degree() != n) return std::nullopt;
    for (int k = 1; k < n; ++k)
        if (!is_zero(D[k])) return std::nullopt;
    const Poly<Rational> binom = power_binomial(n, -D[0]);

    AffineMap conj;
    auto rr = rational_roots(binom);
    if (!rr.empty()) {
        Rational p = rr[0].first;
        for (const auto& [r, mult] : rr) p = std::max(p, r);
        conj = rational_map(p, m);
    } else {
        auto fac = factor(binom).factors;
        auto best = std::min_element(fac.begin(), fac.end(),
                                     [](const auto& x, const auto& y) { return x.first.degree() < y.first.degree(); });
        Algebraic p = Algebraic::generator(Algebraic::make_context(best->first, "a"));
        conj = AffineMap{best->first, 0, p, Algebraic(m)};
    }

    const RatFunc<Algebraic> H = apply_map(f, conj);
    if (H.den() != lift_poly(power_binomial(n, Rational(1)))) return std::nullopt;
    Algebraic one(1);
    Algebraic c = H.num()(one) / Algebraic(n);
    RatFunc<Algebraic> rest = H - c * lift_ratfunc(RatFunc<Rational>(Poly<Rational>(Rational(n)), power_binomial(n, Rational(1))));
    if (!rest.is_polynomial()) return std::nullopt;
    Poly<Algebraic> g;
    const Poly<Algebraic>& q = rest.num();
    for (int k = 0; k <= q.degree(); ++k) {
        if (is_zero(q[k])) continue;
        if (k % n != 0) return std::nullopt;
        g += Poly<Algebraic>::monomial(q[k], k / n);
    }
    CanonicalFormWitness w{conj, c, n, g};
    if (!verify_canonical_form(f, w)) return std::nullopt;
    return w;
}

RelationReport relation_report(const RatFunc<Rational>& f, const RatFunc<Rational>& g) {
    if (is_exact_derivative(f)) throw PreconditionError("first input is an exact derivative");
    if (is_exact_derivative(g)) throw PreconditionError("second input is an exact derivative");
    RelationReport rep;
    rep.relations = affine_transporter(f, g);
    for (const auto& m : rep.relations) {
        std::string line = "y -> " + relation_text(m, "y");
        if (!m.is_rational()) line += " with a = root " + std::to_string(m.root_index) + " of " + to_string(m.minpoly, "a");
        rep.lines.push_back(line);
    }
    rep.conclusion = rep.relations.empty()
                         ? "no affine relation; solutions of the two equations are mutually transcendental"
                         : "all other tuples of solutions are mutually transcendental with independent derivatives";
    return rep;
}

}  // namespace poizat
