#include "poizat/darboux.hpp"

#include <algorithm>
#include <map>

#include "poizat/errors.hpp"
#include "poizat/linalg.hpp"
#include "poizat/mpoly.hpp"

namespace poizat {

namespace {

// Coefficients keyed by (power of x, power of y).
using PPoly = std::map<std::pair<int, int>, MPoly>;

void add_into(PPoly& a, const std::pair<int, int>& k, const MPoly& c) {
    if (c.is_zero()) return;
    MPoly& slot = a[k];
    slot += c;
    if (slot.is_zero()) a.erase(k);
}

PPoly to_ppoly(const BiPoly& p) {
    PPoly out;
    for (const auto& [i, j, c] : bi_terms(p)) out[{i, j}] = MPoly(c);
    return out;
}

PPoly operator*(const PPoly& a, const PPoly& b) {
    PPoly out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) add_into(out, {ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return out;
}

PPoly operator-(PPoly a, const PPoly& b) {
    for (const auto& [k, c] : b) add_into(a, k, -c);
    return a;
}

PPoly operator+(PPoly a, const PPoly& b) {
    for (const auto& [k, c] : b) add_into(a, k, c);
    return a;
}

PPoly ddx(const PPoly& p) {
    PPoly out;
    for (const auto& [k, c] : p)
        if (k.first > 0) add_into(out, {k.first - 1, k.second}, c * MPoly(k.first));
    return out;
}

PPoly ddy(const PPoly& p) {
    PPoly out;
    for (const auto& [k, c] : p)
        if (k.second > 0) add_into(out, {k.first, k.second - 1}, c * MPoly(k.second));
    return out;
}

MPoly apply_subs(MPoly p, const std::vector<std::pair<int, MPoly>>& subs) {
    for (const auto& [v, e] : subs) {
        if (p.is_constant()) break;
        if (p.variables().count(v)) p = p.substitute(v, e);
    }
    return p;
}

struct Cascade {
    std::map<int, std::vector<MPoly>> eqs_by_degree;
    PPoly K;
    int top = 0;
    SolveBudget* budget = nullptr;
    bool incomplete = false;
    std::vector<BiPoly> found;

    void run(int degree, const std::vector<std::pair<int, MPoly>>& subs, std::vector<MPoly> pending) {
        if (budget->exhausted) {
            incomplete = true;
            return;
        }
        std::vector<MPoly> eqs = std::move(pending);
        auto it = eqs_by_degree.find(degree);
        if (it != eqs_by_degree.end())
            for (const auto& e : it->second) eqs.push_back(apply_subs(e, subs));
        const bool last = degree == 0;
        for (auto& branch : solve_rational(std::move(eqs), last, *budget)) {
            auto all = subs;
            all.insert(all.end(), branch.subs.begin(), branch.subs.end());
            if (!last) {
                run(degree - 1, all, std::move(branch.residual));
                continue;
            }
            if (!branch.residual.empty()) {
                incomplete = true;
                continue;
            }
            BiPoly k;
            bool fixed = true;
            for (const auto& [mono, c] : K) {
                MPoly v = apply_subs(c, all);
                if (!v.is_constant()) {
                    fixed = false;
                    break;
                }
                k += bi_monomial(v.constant_term(), mono.first, mono.second);
            }
            if (!fixed) {
                incomplete = true;
                continue;
            }
            found.push_back(k);
        }
    }
};

std::vector<std::pair<int, int>> monomials_of_degree(int d) {
    std::vector<std::pair<int, int>> out;
    for (int i = d; i >= 0; --i) out.emplace_back(i, d - i);
    return out;
}

// Cofactors compatible with a leading form f_m and leading cofactor part.
void cofactor_candidates(const BiPoly& P, const BiPoly& Q, int d, int m, const PPoly& fm, int fm_vars,
                         const BiPoly& ktop, SolveBudget& budget, bool& incomplete, std::vector<BiPoly>& out) {
    int next = 0;
    PPoly K = to_ppoly(ktop);
    for (int deg = d - 2; deg >= 0; --deg)
        for (const auto& mono : monomials_of_degree(deg)) add_into(K, mono, MPoly::var(next++));
    next += fm_vars;
    PPoly f = fm;
    for (int deg = m - 1; deg >= 0; --deg)
        for (const auto& mono : monomials_of_degree(deg)) add_into(f, mono, MPoly::var(next++));
    PPoly R = to_ppoly(P) * ddx(f) + to_ppoly(Q) * ddy(f) - K * f;
    Cascade c;
    for (const auto& [mono, e] : R) c.eqs_by_degree[mono.first + mono.second].push_back(e);
    c.K = K;
    c.budget = &budget;
    const int top = std::max(m + d - 1, 0);
    c.run(top, {}, {});
    if (c.incomplete) incomplete = true;
    out.insert(out.end(), c.found.begin(), c.found.end());
}

void exponent_vectors(const std::vector<int>& degs, size_t i, int remaining, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    if (i == degs.size()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    for (int e = 0; e * degs[i] <= remaining; ++e) {
        cur[i] = e;
        exponent_vectors(degs, i + 1, remaining - e * degs[i], cur, out);
    }
    cur[i] = 0;
}

// Basis of {f : deg f <= n, P f_x + Q f_y = K f}, reduced with monomials in decreasing graded order.
std::vector<BiPoly> darboux_space(const BiPoly& P, const BiPoly& Q, const BiPoly& K, int n) {
    std::vector<std::pair<int, int>> cols;
    for (int deg = n; deg >= 0; --deg)
        for (const auto& mono : monomials_of_degree(deg)) cols.push_back(mono);
    std::map<std::pair<int, int>, size_t> row_of;
    std::vector<BiPoly> images;
    for (const auto& [i, j] : cols) {
        BiPoly mu = bi_monomial(Rational(1), i, j);
        images.push_back(apply_field(P, Q, mu) - K * mu);
        for (const auto& [a, b, c] : bi_terms(images.back())) row_of.emplace(std::make_pair(a, b), row_of.size());
    }
    Matrix<Rational> A(row_of.size(), std::vector<Rational>(cols.size(), Rational(0)));
    for (size_t c = 0; c < cols.size(); ++c)
        for (const auto& [a, b, v] : bi_terms(images[c])) A[row_of.at({a, b})][c] = v;
    auto basis = nullspace(A, cols.size());
    rref(basis);
    std::vector<BiPoly> out;
    for (const auto& v : basis) {
        BiPoly p;
        for (size_t c = 0; c < cols.size(); ++c) p += bi_monomial(v[c], cols[c].first, cols[c].second);
        out.push_back(p);
    }
    return out;
}

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

BiPoly require_polynomial(const BiRatFunc& f) {
    if (!f.is_polynomial()) throw PreconditionError("clear denominators first");
    return bi_scale(f.num(), Rational(1) / f.den().lc().lc());
}

}  // namespace

BiPoly apply_field(const BiPoly& P, const BiPoly& Q, const BiPoly& f) { return P * bi_dx(f) + Q * bi_dy(f); }

bool is_darboux_pair(const BiPoly& P, const BiPoly& Q, const DarbouxPair& d) {
    return apply_field(P, Q, d.invariant) == d.cofactor * d.invariant;
}

DarbouxSearch darboux_search(const PlanarVectorField& v, int max_degree) {
    if (max_degree < 1) throw PreconditionError("max_degree must be at least 1");
    const BiPoly P = require_polynomial(v.dx_image), Q = require_polynomial(v.dy_image);
    if (P.is_zero() && Q.is_zero()) throw PreconditionError("zero vector field");
    DarbouxSearch out;
    const int d = std::max(total_degree(P), total_degree(Q));
    out.field_degree = d;
    const BiPoly Pd = homogeneous_part(P, d), Qd = homogeneous_part(Q, d);
    const BiPoly E = bi_x() * Qd - bi_y() * Pd;
    SolveBudget budget;
    budget.steps = 400000;
    std::vector<BiPoly> cofactors;

    if (!E.is_zero()) {
        std::vector<BiPoly> lines;
        std::vector<BiPoly> kappa;
        std::vector<int> degs;
        for (const auto& [q, e] : bi_factor(E).factors) {
            lines.push_back(q);
            kappa.push_back(bi_exact_div(apply_field(Pd, Qd, q), q));
            degs.push_back(total_degree(q));
        }
        for (int m = 1; m <= max_degree; ++m) {
            std::vector<std::vector<int>> vecs;
            std::vector<int> cur(degs.size(), 0);
            exponent_vectors(degs, 0, m, cur, vecs);
            for (const auto& ev : vecs) {
                BiPoly fm = bi_const(Rational(1)), ktop;
                for (size_t j = 0; j < ev.size(); ++j) {
                    fm = fm * pow(lines[j], ev[j]);
                    ktop += bi_scale(kappa[j], Rational(ev[j]));
                }
                cofactor_candidates(P, Q, d, m, to_ppoly(fm), 0, ktop, budget, out.complete, cofactors);
            }
        }
    } else {
        // Top part is h*(x, y): every form is invariant for it with cofactor m*h.
        const BiPoly h = bi_exact_div(Pd, bi_x());
        const int kvars = d * (d - 1) / 2;
        for (int m = 1; m <= max_degree; ++m) {
            const auto monos = monomials_of_degree(m);
            for (size_t lead = 0; lead < monos.size(); ++lead) {
                PPoly fm;
                fm[monos[lead]] = MPoly(1);
                int nv = 0;
                for (size_t j = lead + 1; j < monos.size(); ++j) fm[monos[j]] = MPoly::var(kvars + nv++);
                cofactor_candidates(P, Q, d, m, fm, nv, bi_scale(h, Rational(m)), budget, out.complete, cofactors);
            }
        }
    }
    if (budget.exhausted) out.complete = false;

    std::vector<BiPoly> distinct;
    for (const auto& k : cofactors)
        if (std::find(distinct.begin(), distinct.end(), k) == distinct.end()) distinct.push_back(k);

    for (const auto& k : distinct) {
        const auto space = darboux_space(P, Q, k, max_degree);
        if (space.size() >= 2) out.rational_first_integral = true;
        for (const auto& f : space) {
            if (total_degree(f) <= 0) continue;
            for (const auto& [g, e] : bi_factor(f).factors) {
                if (std::any_of(out.pairs.begin(), out.pairs.end(), [&](const DarbouxPair& p) { return p.invariant == g; }))
                    continue;
                DarbouxPair pair{g, bi_exact_div(apply_field(P, Q, g), g)};
                if (!is_darboux_pair(P, Q, pair) || total_degree(pair.cofactor) > d - 1)
                    throw AlgebraError("Darboux verification failed");
                out.pairs.push_back(pair);
            }
        }
    }
    std::sort(out.pairs.begin(), out.pairs.end(), [](const DarbouxPair& a, const DarbouxPair& b) {
        int da = total_degree(a.invariant), db = total_degree(b.invariant);
        if (da != db) return da < db;
        return to_string(a.invariant) < to_string(b.invariant);
    });
    return out;
}

std::vector<DarbouxPair> darboux_polynomials(const PlanarVectorField& v, int max_degree) {
    return darboux_search(v, max_degree).pairs;
}

ClearedField clear_denominators(const PlanarVectorField& v) {
    const BiPoly& a = v.dx_image.den();
    const BiPoly& b = v.dy_image.den();
    BiPoly m = bi_exact_div(a * b, bi_gcd(a, b));
    m = bi_scale(m, Rational(1) / m.lc().lc());
    ClearedField out;
    out.P = v.dx_image.num() * bi_exact_div(m, a);
    out.Q = v.dy_image.num() * bi_exact_div(m, b);
    out.multiplier = m;
    if (total_degree(m) > 0)
        out.caveat = "rescaling by the multiplier keeps the invariant curves off its zero set, "
                     "but need not preserve the model-theoretic properties of the original equation";
    return out;
}

std::string to_string(OdaniVerdict v) {
    return v == OdaniVerdict::no_invariant_curves ? "no-invariant-curves" : "inapplicable";
}

OdaniVerdict odani_check(const UPoly& f, const UPoly& g) {
    if (f.is_zero() || g.is_zero()) return OdaniVerdict::inapplicable;
    if (f.degree() < g.degree()) return OdaniVerdict::inapplicable;
    // g/f is constant iff g is a scalar multiple of f
    if (g.degree() == f.degree() && g * f.lc() == f * g.lc()) return OdaniVerdict::inapplicable;
    return OdaniVerdict::no_invariant_curves;
}

JouanolouReport jouanolou_report(const PlanarVectorField& v, int max_degree) {
    const int n = 2;
    DarbouxSearch s = darboux_search(v, max_degree);
    JouanolouReport r;
    r.curve_count_found = static_cast<int>(s.pairs.size());
    r.degree_bound_searched = max_degree;
    r.field_degree = s.field_degree;
    const long base = binomial(n + s.field_degree - 1, n);
    r.darboux_threshold = base + 1;
    r.rational_threshold = base + n;
    r.darboux_integral_implied = r.curve_count_found >= r.darboux_threshold;
    r.rational_integral_implied = r.curve_count_found >= r.rational_threshold;
    r.search_complete = s.complete;
    return r;
}

}  // namespace poizat
