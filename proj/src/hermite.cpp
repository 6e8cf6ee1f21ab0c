#include "poizat/hermite.hpp"

#include <map>
#include <random>
#include <set>

#include "poizat/factor.hpp"
#include "poizat/linalg.hpp"

namespace poizat {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::yes:
            return "yes";
        case Verdict::no:
            return "no";
        case Verdict::unknown:
            return "unknown";
    }
    return "unknown";
}

namespace {

template <class K>
Poly<K> integrate(const Poly<K>& p) {
    if (p.is_zero()) return p;
    std::vector<K> v(static_cast<size_t>(p.degree()) + 2, K(0));
    for (int i = 0; i <= p.degree(); ++i) v[static_cast<size_t>(i) + 1] = p[i] / K(i + 1);
    return Poly<K>(std::move(v));
}

// Quadratic Hermite reduction over a squarefree factorization of the denominator.
template <class K>
HermiteResult<K> hermite_impl(const RatFunc<K>& f) {
    auto [q, proper] = f.split_polynomial();
    RatFunc<K> g(integrate(q));
    Poly<K> A = proper.num();
    Poly<K> D = proper.den();
    if (!A.is_zero() && D.degree() > 0) {
        auto parts = squarefree_decompose(D);
        for (const auto& [V, i] : parts) {
            if (i < 2) continue;
            Poly<K> U = exact_div(D, pow(V, i));
            const Poly<K> Vp = V.derivative();
            for (int j = i - 1; j >= 1; --j) {
                auto [B, C] = solve_bezout(U * Vp, V, A / K(-j));
                g += RatFunc<K>(B, pow(V, j));
                A = K(-j) * C - U * B.derivative();
            }
            D = U * V;
        }
    }
    RatFunc<K> log(A, D);
    if (!log.is_proper()) {
        auto [q2, rest] = log.split_polynomial();
        g += RatFunc<K>(integrate(q2));
        log = rest;
    }
    return {g, log};
}

template <class K>
Poly<K> interpolate(const std::vector<K>& xs, const std::vector<K>& ys) {
    const size_t n = xs.size();
    std::vector<K> dd = ys;
    for (size_t k = 1; k < n; ++k)
        for (size_t i = n - 1; i >= k; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
    Poly<K> p(dd[n - 1]);
    for (size_t i = n - 1; i-- > 0;) p = p * Poly<K>(std::vector<K>{-xs[i], K(1)}) + Poly<K>(dd[i]);
    return p;
}

template <class K>
Poly<K> rt_impl(const RatFunc<K>& log) {
    const Poly<K>& N = log.num();
    const Poly<K> D = monic(log.den());
    const int n = D.degree();
    if (n <= 0) return Poly<K>(K(1));
    const Poly<K> Dp = D.derivative();
    std::vector<K> xs, ys;
    for (int j = 0; j <= n; ++j) {
        K t(j);
        xs.push_back(t);
        ys.push_back(resultant(D, N - t * Dp));
    }
    return monic(interpolate(xs, ys));
}

std::optional<Rational> as_rational(const Rational& q) { return q; }
std::optional<Rational> as_rational(const ParamField& p) {
    if (!p.is_constant()) return std::nullopt;
    return p.constant_value();
}

std::optional<Rational> try_sqrt(const Rational& q) { return rational_sqrt(q); }
std::optional<ParamField> try_sqrt(const ParamField& p) {
    if (p.is_zero()) return ParamField(0);
    const Poly<Rational>& A = p.value().num();
    const Poly<Rational>& B = p.value().den();
    Poly<Rational> M = A * B;
    auto lc_root = rational_sqrt(M.lc());
    if (!lc_root) return std::nullopt;
    Poly<Rational> root(*lc_root);
    for (const auto& [fac, m] : squarefree_decompose(M)) {
        if (m % 2 != 0) return std::nullopt;
        root = root * pow(fac, m / 2);
    }
    return ParamField(RatFunc<Rational>(root, B));
}

template <class K>
K from_rational(const Rational& q) {
    return K(q);
}

template <class K>
LogDerivativeResult<K> log_derivative_exact(const RatFunc<K>& f) {
    using L = AlgNum<K>;
    LogDerivativeResult<K> out;
    if (f.is_zero()) {
        out.verdict = Verdict::yes;
        out.reason = "zero function";
        out.witness = LogDerivativeWitness<K>{L(0), RatFunc<L>(Poly<L>(L(1)))};
        return out;
    }
    HermiteResult<K> h = hermite_impl(f);
    if (!h.rational_part.is_zero()) {
        out.verdict = Verdict::no;
        out.reason = is_squarefree(f.den()) ? "nonzero polynomial part" : "pole of order at least two";
        return out;
    }
    const Poly<K>& N = h.log_part.num();
    const Poly<K>& D = h.log_part.den();
    const int n = D.degree();
    const Poly<K> R = rt_impl(h.log_part);
    const K e1 = -R.coeff(n - 1);
    const K e2 = R.coeff(n - 2);
    const K p2 = e1 * e1 - K(2) * e2;
    if (is_zero(p2)) {
        out.verdict = Verdict::no;
        out.reason = "residues are not rational multiples of a common constant";
        return out;
    }
    // G(t^2) = (-1)^n R(t) R(-t) has roots r_i^2; rescale by p2 so the roots become r_i^2 / p2.
    Poly<K> Rm = R.compose(Poly<K>(std::vector<K>{K(0), K(-1)}));
    Poly<K> prod = R * Rm;
    if (n % 2 == 1) prod = -prod;
    std::vector<Rational> hq;
    for (int k = 0; k <= n; ++k) {
        K coeff = prod.coeff(2 * k) * field_pow(p2, k - n);
        auto r = as_rational(coeff);
        if (!r) {
            out.verdict = Verdict::no;
            out.reason = "residue ratios depend on the parameter";
            return out;
        }
        hq.push_back(*r);
    }
    Poly<Rational> H(hq);
    std::vector<Rational> ws;
    for (const auto& [w, m] : rational_roots(H))
        for (int k = 0; k < m; ++k) ws.push_back(w);
    if (static_cast<int>(ws.size()) != n) {
        out.verdict = Verdict::no;
        out.reason = "a residue ratio is irrational";
        return out;
    }
    std::vector<Rational> qs;
    for (const auto& w : ws) {
        if (sgn(w) <= 0) {
            out.verdict = Verdict::no;
            out.reason = "a residue ratio is not real";
            return out;
        }
        auto q = rational_sqrt(w / ws[0]);
        if (!q) {
            out.verdict = Verdict::no;
            out.reason = "a residue ratio is irrational";
            return out;
        }
        qs.push_back(*q);
    }
    Integer lden = 1, g = 0;
    for (const auto& q : qs) mpz_lcm(lden.get_mpz_t(), lden.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> ms;
    for (const auto& q : qs) {
        Rational v = q * Rational(lden);
        ms.push_back(v.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ms.back().get_mpz_t());
    }
    for (auto& m : ms) m /= g;
    // r_i = +-lambda m_i with lambda^2 = delta.
    const K delta = p2 * from_rational<K>(ws[0] / Rational(ms[0] * ms[0]));
    L lambda;
    if (auto s = try_sqrt(delta)) {
        lambda = L(*s);
    } else {
        auto ctx = L::make_context(Poly<K>(std::vector<K>{-delta, K(0), K(1)}), "r");
        lambda = L::generator(ctx);
    }
    const Poly<L> DL = lift_poly(D), NL = lift_poly(N), DpL = DL.derivative();
    std::set<Integer> ks;
    for (const auto& m : ms) {
        ks.insert(m);
        ks.insert(-m);
    }
    RatFunc<L> u(Poly<L>(L(1)));
    RatFunc<L> check;
    int total = 0;
    for (const auto& k : ks) {
        const L lk = lambda * L(from_rational<K>(Rational(k)));
        Poly<L> Dk = gcd(DL, NL - lk * DpL);
        if (Dk.degree() <= 0) continue;
        total += Dk.degree();
        const int e = static_cast<int>(k.get_si());
        u = u * pow(RatFunc<L>(Dk), e);
        check += lk * RatFunc<L>(Dk.derivative(), Dk);
    }
    if (total != n || check != lift_ratfunc(h.log_part)) {
        out.verdict = Verdict::unknown;
        out.reason = "residue splitting did not reproduce the input";
        return out;
    }
    out.verdict = Verdict::yes;
    out.reason = "residues are integer multiples of one constant";
    out.witness = LogDerivativeWitness<K>{lambda, u};
    return out;
}

}  // namespace

HermiteResult<Rational> hermite_reduce(const RatFunc<Rational>& f) { return hermite_impl(f); }
HermiteResult<ParamField> hermite_reduce(const RatFunc<ParamField>& f) { return hermite_impl(f); }

std::optional<RatFunc<Rational>> antiderivative(const RatFunc<Rational>& f) {
    auto h = hermite_impl(f);
    if (!h.log_part.is_zero()) return std::nullopt;
    return h.rational_part;
}
std::optional<RatFunc<ParamField>> antiderivative(const RatFunc<ParamField>& f) {
    auto h = hermite_impl(f);
    if (!h.log_part.is_zero()) return std::nullopt;
    return h.rational_part;
}
bool is_exact_derivative(const RatFunc<Rational>& f) { return antiderivative(f).has_value(); }
bool is_exact_derivative(const RatFunc<ParamField>& f) { return antiderivative(f).has_value(); }

Poly<Rational> rt_resultant(const RatFunc<Rational>& log_part) { return rt_impl(log_part); }
Poly<ParamField> rt_resultant(const RatFunc<ParamField>& log_part) { return rt_impl(log_part); }

namespace {
template <class K>
ResidueProfile<K> profile_impl(const RatFunc<K>& f) {
    auto h = hermite_impl(f);
    const Poly<K>& N = h.log_part.num();
    const Poly<K>& D = h.log_part.den();
    int count = D.degree() - (N.is_zero() ? D.degree() : gcd(N, D).degree());
    return {rt_impl(h.log_part), count, is_squarefree(f.den())};
}
}  // namespace

ResidueProfile<Rational> residue_profile(const RatFunc<Rational>& f) { return profile_impl(f); }
ResidueProfile<ParamField> residue_profile(const RatFunc<ParamField>& f) { return profile_impl(f); }
int nonzero_residue_count(const RatFunc<Rational>& f) { return profile_impl(f).nonzero_residue_count; }

std::vector<Complex> numeric_residues(const RatFunc<Rational>& log_part, int digits) {
    const Poly<Rational>& N = log_part.num();
    const Poly<Rational>& D = log_part.den();
    const Poly<Rational> Dp = D.derivative();
    std::vector<Complex> out;
    for (const auto& a : numeric_roots(D, digits)) out.push_back(eval_complex(N, a) / eval_complex(Dp, a));
    return out;
}

Verdict numeric_log_derivative_check(const RatFunc<Rational>& f, int digits, long max_den) {
    auto h = hermite_impl(f);
    if (!h.rational_part.is_zero()) return Verdict::no;
    if (h.log_part.is_zero()) return Verdict::yes;
    auto res = numeric_residues(h.log_part, digits);
    const mpfr_prec_t bits = bits_for_digits(digits);
    size_t big = 0;
    for (size_t i = 1; i < res.size(); ++i)
        if (res[i].norm() > res[big].norm()) big = i;
    Real tol(Rational(1), bits);
    mpfr_mul_2si(tol.get(), tol.get(), -static_cast<long>(bits / 2), MPFR_RNDN);
    for (const auto& r : res) {
        Complex ratio = r / res[big];
        if (ratio.im.abs() > tol) return Verdict::no;
        if (!recognize_rational(ratio.re, max_den, tol)) return Verdict::no;
    }
    return Verdict::yes;
}

LogDerivativeResult<Rational> is_log_derivative_multiple(const RatFunc<Rational>& f, const LogDerivativeOptions&) {
    return log_derivative_exact(f);
}

LogDerivativeResult<ParamField> is_log_derivative_multiple(const RatFunc<ParamField>& f,
                                                           const LogDerivativeOptions& opt) {
    LogDerivativeResult<ParamField> out = log_derivative_exact(f);
    if (out.verdict == Verdict::unknown || out.reason == "pole of order at least two" ||
        out.reason == "nonzero polynomial part" || out.reason == "zero function")
        return out;
    // Specialization cross-check at seeded random points away from the degeneracy locus.
    std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<long> num(-60, 60), den(1, 9);
    const int dn = f.num().degree(), dd = f.den().degree();
    std::string points;
    int done = 0;
    for (int attempt = 0; attempt < 200 && done < opt.specializations; ++attempt) {
        Rational c0(num(rng), den(rng));
        c0.canonicalize();
        RatFunc<Rational> fs;
        try {
            auto ev = [&](const ParamField& p) { return p.eval(c0); };
            Poly<Rational> ns = f.num().map<Rational>(ev), ds = f.den().map<Rational>(ev);
            if (ns.degree() != dn || ds.degree() != dd || !is_squarefree(ds) || gcd(ns, ds).degree() > 0) continue;
            fs = RatFunc<Rational>(ns, ds);
        } catch (const AlgebraError&) {
            continue;
        }
        Verdict v = numeric_log_derivative_check(fs, opt.digits);
        ++done;
        points += (points.empty() ? "" : ", ") + to_string(c0);
        if (v != out.verdict) {
            out.verdict = Verdict::unknown;
            out.reason = "specialization at c = " + to_string(c0) + " disagrees with the exact verdict";
            out.witness.reset();
            return out;
        }
    }
    if (done < opt.specializations) {
        out.verdict = Verdict::unknown;
        out.reason = "could not find enough regular specialization points";
        out.witness.reset();
        return out;
    }
    out.reason += "; confirmed at c = " + points;
    return out;
}

int rational_rank(const std::vector<std::vector<Rational>>& vectors) {
    if (vectors.empty()) return 0;
    Matrix<Rational> m = vectors;
    return static_cast<int>(rref(m).size());
}

bool q_linear_disjointness(const std::vector<std::vector<Rational>>& res1,
                           const std::vector<std::vector<Rational>>& res2) {
    size_t len = 0;
    for (const auto* set : {&res1, &res2})
        for (const auto& v : *set) {
            if (len == 0) len = v.size();
            if (v.size() != len) throw PreconditionError("residue vectors use different basis lengths");
        }
    std::vector<std::vector<Rational>> all = res1;
    all.insert(all.end(), res2.begin(), res2.end());
    return rational_rank(res1) + rational_rank(res2) == rational_rank(all);
}

}  // namespace poizat
