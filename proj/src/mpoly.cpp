#include "poizat/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "poizat/factor.hpp"
#include "poizat/linalg.hpp"

namespace poizat {

namespace {

int exp_at(const Monomial& m, size_t i) { return i < m.size() ? m[i] : 0; }

Monomial trimmed(Monomial m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
    return m;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = exp_at(a, i) + exp_at(b, i);
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > exp_at(b, i)) return false;
    return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) r[i] = b[i] - exp_at(a, i);
    return trimmed(r);
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = std::max(exp_at(a, i), exp_at(b, i));
    return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < std::min(a.size(), b.size()); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

MPoly mul_term(const MPoly& p, const Rational& c, const Monomial& m) {
    return p * MPoly::term(c, m);
}

}  // namespace

bool LexLess::operator()(const Monomial& a, const Monomial& b) const {
    const size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        int x = exp_at(a, i), y = exp_at(b, i);
        if (x != y) return x < y;
    }
    return false;
}

MPoly::MPoly(int c) {
    if (c != 0) t_[{}] = Rational(c);
}
MPoly::MPoly(const Rational& c) {
    if (c != 0) t_[{}] = c;
}

MPoly MPoly::var(int i) {
    Monomial m(static_cast<size_t>(i) + 1, 0);
    m.back() = 1;
    return term(Rational(1), m);
}

MPoly MPoly::term(const Rational& c, Monomial m) {
    MPoly p;
    if (c != 0) p.t_[trimmed(std::move(m))] = c;
    return p;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) t_.erase(it);
}

bool MPoly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }

Rational MPoly::constant_term() const {
    auto it = t_.find({});
    return it == t_.end() ? Rational(0) : it->second;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : t_) {
        int s = 0;
        for (int e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

std::set<int> MPoly::variables() const {
    std::set<int> v;
    for (const auto& [m, c] : t_)
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) v.insert(static_cast<int>(i));
    return v;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) r.add_term(trimmed(mono_mul(ma, mb)), ca * cb);
    return r;
}

MPoly MPoly::substitute(int v, const MPoly& q) const {
    std::map<int, MPoly> powers;
    MPoly r;
    for (const auto& [m, c] : t_) {
        int e = exp_at(m, static_cast<size_t>(v));
        Monomial rest = m;
        if (e > 0) {
            rest[static_cast<size_t>(v)] = 0;
            rest = trimmed(rest);
        }
        MPoly part = term(c, rest);
        if (e > 0) {
            auto it = powers.find(e);
            if (it == powers.end()) {
                MPoly p(1);
                for (int k = 0; k < e; ++k) p = p * q;
                it = powers.emplace(e, p).first;
            }
            part = part * it->second;
        }
        r += part;
    }
    return r;
}

MPoly MPoly::monic() const {
    if (t_.empty()) return *this;
    Rational l = leading().second;
    if (l == 1) return *this;
    MPoly r = *this;
    for (auto& [m, c] : r.t_) c /= l;
    return r;
}

Poly<Rational> MPoly::univariate(int v) const {
    std::vector<Rational> c;
    for (const auto& [m, k] : t_) {
        size_t e = static_cast<size_t>(exp_at(m, static_cast<size_t>(v)));
        if (c.size() <= e) c.resize(e + 1, Rational(0));
        c[e] += k;
    }
    return Poly<Rational>(std::move(c));
}

std::string to_string(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (!first) os << (a < 0 ? " - " : " + ");
        else if (a < 0) os << "-";
        if (a < 0) a = -a;
        std::string mono;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "t" + std::to_string(i);
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) os << to_string(a);
        else if (a == 1) os << mono;
        else os << to_string(a) << "*" << mono;
        first = false;
    }
    return os.str();
}

namespace {

// Graded reverse lex.
bool grevlex_less(const Monomial& a, const Monomial& b) {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    for (size_t i = std::max(a.size(), b.size()); i-- > 0;) {
        int x = exp_at(a, i), y = exp_at(b, i);
        if (x != y) return x > y;
    }
    return false;
}

std::pair<Monomial, Rational> lead(const MPoly& p) {
    auto best = p.terms().begin();
    for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
        if (grevlex_less(best->first, it->first)) best = it;
    return *best;
}

MPoly grevlex_monic(const MPoly& p) { return p * MPoly(Rational(1) / lead(p).second); }

constexpr size_t kMaxCoefficientBits = 4096;

// Full reduction of p modulo g.
std::optional<MPoly> reduce(MPoly p, const std::vector<MPoly>& g, const std::vector<Monomial>& leads, SolveBudget& budget) {
    MPoly r;
    while (!p.is_zero()) {
        if (!budget.spend()) return std::nullopt;
        const auto [lm, lc] = lead(p);
        if (mpz_sizeinbase(lc.get_num_mpz_t(), 2) + mpz_sizeinbase(lc.get_den_mpz_t(), 2) > kMaxCoefficientBits) {
            budget.exhausted = true;
            return std::nullopt;
        }
        bool hit = false;
        for (size_t k = 0; k < g.size(); ++k) {
            if (mono_divides(leads[k], lm)) {
                if (!budget.spend(static_cast<long>(g[k].terms().size()))) return std::nullopt;
                p -= mul_term(g[k], lc, mono_div(lm, leads[k]));
                hit = true;
                break;
            }
        }
        if (!hit) {
            MPoly t = MPoly::term(lc, lm);
            r += t;
            p -= t;
        }
    }
    return r;
}

}  // namespace

std::optional<std::vector<MPoly>> groebner_basis(std::vector<MPoly> gens, SolveBudget& budget) {
    std::vector<MPoly> g;
    std::vector<Monomial> leads;
    for (auto& p : gens) {
        if (p.is_zero()) continue;
        g.push_back(grevlex_monic(p));
        leads.push_back(lead(g.back()).first);
    }
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t j = 0; j < g.size(); ++j)
        for (size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        size_t pick = 0;
        for (size_t k = 1; k < pairs.size(); ++k)
            if (grevlex_less(mono_lcm(leads[pairs[k].first], leads[pairs[k].second]),
                             mono_lcm(leads[pairs[pick].first], leads[pairs[pick].second])))
                pick = k;
        auto [i, j] = pairs[pick];
        pairs.erase(pairs.begin() + static_cast<long>(pick));
        if (mono_coprime(leads[i], leads[j])) continue;
        Monomial l = mono_lcm(leads[i], leads[j]);
        MPoly s = mul_term(g[i], Rational(1), mono_div(l, leads[i])) - mul_term(g[j], Rational(1), mono_div(l, leads[j]));
        auto r = reduce(s, g, leads, budget);
        if (!r) return std::nullopt;
        if (r->is_zero()) continue;
        if (r->is_constant()) return std::vector<MPoly>{MPoly(1)};
        g.push_back(grevlex_monic(*r));
        leads.push_back(lead(g.back()).first);
        for (size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
    }
    std::vector<size_t> keep;
    for (size_t i = 0; i < g.size(); ++i) {
        bool drop = false;
        for (size_t j = 0; j < g.size() && !drop; ++j)
            if (i != j && mono_divides(leads[j], leads[i]) && (leads[j] != leads[i] || j < i)) drop = true;
        if (!drop) keep.push_back(i);
    }
    std::vector<MPoly> out;
    for (size_t i : keep) {
        std::vector<MPoly> others;
        std::vector<Monomial> ol;
        for (size_t j : keep)
            if (j != i) {
                others.push_back(g[j]);
                ol.push_back(leads[j]);
            }
        MPoly tail = g[i] - MPoly::term(Rational(1), leads[i]);
        auto r = reduce(tail, others, ol, budget);
        if (!r) return std::nullopt;
        out.push_back(MPoly::term(Rational(1), leads[i]) + *r);
    }
    std::sort(out.begin(), out.end(), [](const MPoly& a, const MPoly& b) { return grevlex_less(lead(a).first, lead(b).first); });
    return out;
}

namespace {

std::optional<std::vector<Rational>> rational_values(const std::vector<MPoly>& gb, int v, SolveBudget& budget) {
    std::vector<Monomial> leads;
    std::set<int> vars;
    for (const auto& p : gb) {
        leads.push_back(lead(p).first);
        for (int u : p.variables()) vars.insert(u);
    }
    for (int u : vars) {
        bool pure = false;
        for (const auto& m : leads) {
            bool only = exp_at(m, static_cast<size_t>(u)) > 0;
            for (size_t k = 0; k < m.size() && only; ++k)
                if (static_cast<int>(k) != u && m[k] > 0) only = false;
            pure = pure || only;
        }
        if (!pure) return std::nullopt;
    }
    auto standard = [&](const Monomial& m) {
        return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return mono_divides(l, m); });
    };
    std::vector<Monomial> basis{Monomial{}};
    std::map<Monomial, size_t, LexLess> index{{Monomial{}, 0}};
    for (size_t k = 0; k < basis.size(); ++k) {
        for (int u : vars) {
            Monomial m = trimmed(mono_mul(basis[k], MPoly::var(u).leading().first));
            if (!standard(m) || index.count(m)) continue;
            if (basis.size() >= 400) return std::nullopt;
            index.emplace(m, basis.size());
            basis.push_back(m);
        }
    }
    const size_t n = basis.size();
    std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n, Rational(0)));
    for (size_t j = 0; j < n; ++j) {
        auto nf = reduce(MPoly::term(Rational(1), mono_mul(basis[j], MPoly::var(v).leading().first)), gb, leads, budget);
        if (!nf) return std::nullopt;
        for (const auto& [m, c] : nf->terms()) M[index.at(m)][j] = c;
    }
    std::vector<Rational> out;
    for (const auto& [r, mult] : rational_roots(charpoly(M))) out.push_back(r);
    return out;
}


// v occurs in e only as the bare monomial v.
bool isolated_linear(const MPoly& e, int v) {
    const size_t i = static_cast<size_t>(v);
    bool seen = false;
    for (const auto& [m, c] : e.terms()) {
        if (exp_at(m, i) == 0) continue;
        if (exp_at(m, i) > 1) return false;
        for (size_t j = 0; j < m.size(); ++j)
            if (j != i && m[j] > 0) return false;
        seen = true;
    }
    return seen;
}

void solve_rec(std::vector<MPoly> eqs, std::vector<std::pair<int, MPoly>> subs, bool groebner, bool reduced,
               SolveBudget& budget, std::vector<SolveBranch>& out) {
    while (true) {
        std::vector<MPoly> next;
        for (auto& e : eqs) {
            if (e.is_zero()) continue;
            if (e.is_constant()) return;
            MPoly m = e.monic();
            if (std::find(next.begin(), next.end(), m) == next.end()) next.push_back(std::move(m));
        }
        eqs = std::move(next);
        if (eqs.empty()) {
            out.push_back({std::move(subs), {}});
            return;
        }
        if (!budget.spend()) {
            out.push_back({std::move(subs), std::move(eqs)});
            return;
        }
        int best_v = -1;
        size_t best_e = 0;
        for (size_t i = 0; i < eqs.size(); ++i) {
            for (int v : eqs[i].variables()) {
                if (v <= best_v || !isolated_linear(eqs[i], v)) continue;
                best_v = v;
                best_e = i;
            }
        }
        if (best_v >= 0) {
            const Monomial mv = MPoly::var(best_v).leading().first;
            const Rational cv = eqs[best_e].terms().at(mv);
            MPoly expr = (MPoly::term(cv, mv) - eqs[best_e]) * MPoly(Rational(1) / cv);
            for (auto& e : eqs) e = e.substitute(best_v, expr);
            subs.emplace_back(best_v, expr);
            reduced = false;
            continue;
        }
        auto uni = std::find_if(eqs.begin(), eqs.end(), [](const MPoly& e) { return e.variables().size() == 1; });
        if (uni != eqs.end()) {
            const int v = *uni->variables().begin();
            for (const auto& [r, mult] : rational_roots(uni->univariate(v))) {
                std::vector<MPoly> sub_eqs;
                for (const auto& e : eqs) sub_eqs.push_back(e.substitute(v, MPoly(r)));
                auto s = subs;
                s.emplace_back(v, MPoly(r));
                solve_rec(std::move(sub_eqs), std::move(s), groebner, false, budget, out);
            }
            return;
        }
        if (groebner && !reduced) {
            auto gb = groebner_basis(eqs, budget);
            if (!gb) break;
            eqs = std::move(*gb);
            reduced = true;
            continue;
        }
        if (groebner) {
            std::set<int> vars;
            for (const auto& e : eqs)
                for (int u : e.variables()) vars.insert(u);
            const int v = *vars.rbegin();
            auto values = rational_values(eqs, v, budget);
            if (!values) break;
            for (const auto& r : *values) {
                std::vector<MPoly> sub_eqs;
                for (const auto& e : eqs) sub_eqs.push_back(e.substitute(v, MPoly(r)));
                auto s = subs;
                s.emplace_back(v, MPoly(r));
                solve_rec(std::move(sub_eqs), std::move(s), groebner, false, budget, out);
            }
            return;
        }
        break;
    }
    out.push_back({std::move(subs), std::move(eqs)});
}

}  // namespace

std::vector<SolveBranch> solve_rational(std::vector<MPoly> eqs, bool groebner, SolveBudget& budget) {
    std::vector<SolveBranch> out;
    solve_rec(std::move(eqs), {}, groebner, false, budget, out);
    return out;
}

}  // namespace poizat
