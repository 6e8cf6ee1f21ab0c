#include "poizat/factor.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>

namespace poizat {

namespace {

using ZP = std::vector<long long>;  // coefficients mod a small prime, lowest first

void trim(ZP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long long mod(long long a, long long p) {
    a %= p;
    return a < 0 ? a + p : a;
}

long long inv_mod(long long a, long long p) {
    long long t = 0, nt = 1, r = p, nr = mod(a, p);
    while (nr != 0) {
        long long q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (r != 1) throw AlgebraError("non-invertible residue");
    return mod(t, p);
}

ZP zp_sub(ZP a, const ZP& b, long long p) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] - b[i], p);
    trim(a);
    return a;
}

ZP zp_mul(const ZP& a, const ZP& b, long long p) {
    if (a.empty() || b.empty()) return {};
    ZP r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}

std::pair<ZP, ZP> zp_divmod(ZP a, const ZP& b, long long p) {
    if (b.empty()) throw AlgebraError("division by zero mod p");
    if (a.size() < b.size()) return {{}, a};
    long long inv = inv_mod(b.back(), p);
    ZP q(a.size() - b.size() + 1, 0);
    for (size_t k = q.size(); k-- > 0;) {
        long long t = a[k + b.size() - 1] * inv % p;
        q[k] = t;
        if (t == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) a[k + j] = mod(a[k + j] - t * b[j], p);
    }
    a.resize(b.size() - 1);
    trim(a);
    trim(q);
    return {q, a};
}

ZP zp_monic(ZP a, long long p) {
    if (a.empty()) return a;
    long long inv = inv_mod(a.back(), p);
    for (auto& x : a) x = x * inv % p;
    return a;
}

ZP zp_gcd(ZP a, ZP b, long long p) {
    while (!b.empty()) {
        ZP r = zp_divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return zp_monic(a, p);
}

ZP zp_powmod(ZP base, const Integer& e, const ZP& m, long long p) {
    ZP result{1};
    base = zp_divmod(base, m, p).second;
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        result = zp_divmod(zp_mul(result, result, p), m, p).second;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = zp_divmod(zp_mul(result, base, p), m, p).second;
    }
    return result;
}

ZP zp_derivative(const ZP& a, long long p) {
    ZP r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(static_cast<long long>(i) % p * a[i] % p);
    trim(r);
    return r;
}

// Distinct-degree then equal-degree (Cantor-Zassenhaus) factorization of a monic squarefree polynomial.
std::vector<ZP> zp_factor(const ZP& f, long long p, std::mt19937_64& rng) {
    std::vector<std::pair<ZP, int>> ddf;
    ZP rest = f;
    ZP h{0, 1};
    const ZP x{0, 1};
    for (int i = 1; static_cast<int>(rest.size()) - 1 >= 2 * i; ++i) {
        h = zp_powmod(h, Integer(static_cast<long>(p)), rest, p);
        ZP g = zp_gcd(zp_sub(h, x, p), rest, p);
        if (g.size() > 1) {
            ddf.emplace_back(g, i);
            rest = zp_divmod(rest, g, p).first;
            h = zp_divmod(h, rest, p).second;
        }
    }
    if (rest.size() > 1) ddf.emplace_back(rest, static_cast<int>(rest.size()) - 1);

    std::vector<ZP> out;
    std::uniform_int_distribution<long long> coef(0, p - 1);
    for (auto& [g, d] : ddf) {
        std::vector<ZP> stack{g};
        Integer e;
        mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
        e = (e - 1) / 2;
        while (!stack.empty()) {
            ZP u = stack.back();
            stack.pop_back();
            if (static_cast<int>(u.size()) - 1 == d) {
                out.push_back(u);
                continue;
            }
            for (;;) {
                ZP a(u.size() - 1);
                for (auto& c : a) c = coef(rng);
                trim(a);
                if (a.size() < 2) continue;
                ZP b = zp_powmod(a, e, u, p);
                if (b.empty()) continue;
                b[0] = mod(b[0] - 1, p);
                trim(b);
                ZP g1 = zp_gcd(b, u, p);
                if (g1.size() > 1 && g1.size() < u.size()) {
                    stack.push_back(g1);
                    stack.push_back(zp_monic(zp_divmod(u, g1, p).first, p));
                    break;
                }
            }
        }
    }
    return out;
}

using ZZ = std::vector<Integer>;  // integer coefficients, lowest first

void trim(ZZ& a) {
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

void reduce_mod(ZZ& a, const Integer& m) {
    for (auto& x : a) {
        x %= m;
        if (sgn(x) < 0) x += m;
    }
    trim(a);
}

ZZ zz_add(ZZ a, const ZZ& b, const Integer& m) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    reduce_mod(a, m);
    return a;
}

ZZ zz_sub(ZZ a, const ZZ& b, const Integer& m) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    reduce_mod(a, m);
    return a;
}

ZZ zz_mul(const ZZ& a, const ZZ& b, const Integer& m) {
    if (a.empty() || b.empty()) return {};
    ZZ r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    reduce_mod(r, m);
    return r;
}

// Division by a monic polynomial modulo m.
std::pair<ZZ, ZZ> zz_divmod_monic(ZZ a, const ZZ& b, const Integer& m) {
    reduce_mod(a, m);
    if (a.size() < b.size()) return {{}, a};
    ZZ q(a.size() - b.size() + 1, 0);
    for (size_t k = q.size(); k-- > 0;) {
        Integer t = a[k + b.size() - 1];
        q[k] = t;
        for (size_t j = 0; j < b.size(); ++j) {
            a[k + j] -= t * b[j];
            a[k + j] %= m;
            if (sgn(a[k + j]) < 0) a[k + j] += m;
        }
    }
    a.resize(b.size() - 1);
    trim(a);
    trim(q);
    return {q, a};
}

ZZ from_zp(const ZP& a) {
    ZZ r;
    for (auto x : a) r.emplace_back(static_cast<long>(x));
    return r;
}

ZP to_zp(const ZZ& a, long long p) {
    ZP r;
    Integer P(static_cast<long>(p));
    for (const auto& x : a) {
        Integer t = x % P;
        if (sgn(t) < 0) t += P;
        r.push_back(t.get_si());
    }
    trim(r);
    return r;
}

/**
 * One quadratic Hensel step: from f = g*h, s*g + t*h = 1 (mod m) to the same
 * relations mod m^2. h is monic.
 */
void hensel_step(const ZZ& f, ZZ& g, ZZ& h, ZZ& s, ZZ& t, const Integer& m2) {
    ZZ e = zz_sub(f, zz_mul(g, h, m2), m2);
    auto [q, r] = zz_divmod_monic(zz_mul(s, e, m2), h, m2);
    ZZ g2 = zz_add(zz_add(g, zz_mul(t, e, m2), m2), zz_mul(q, g, m2), m2);
    ZZ h2 = zz_add(h, r, m2);
    ZZ b = zz_sub(zz_add(zz_mul(s, g2, m2), zz_mul(t, h2, m2), m2), ZZ{Integer(1)}, m2);
    auto [c, d] = zz_divmod_monic(zz_mul(s, b, m2), h2, m2);
    s = zz_sub(s, d, m2);
    t = zz_sub(zz_sub(t, zz_mul(t, b, m2), m2), zz_mul(c, g2, m2), m2);
    g = std::move(g2);
    h = std::move(h2);
}

ZZ symmetric(ZZ a, const Integer& m) {
    Integer half = m / 2;
    for (auto& x : a) {
        x %= m;
        if (sgn(x) < 0) x += m;
        if (x > half) x -= m;
    }
    trim(a);
    return a;
}

Poly<Rational> to_poly(const ZZ& a) {
    std::vector<Rational> v;
    for (const auto& x : a) v.emplace_back(x);
    return Poly<Rational>(std::move(v));
}

ZZ to_zz(const Poly<Rational>& p) {
    ZZ r;
    for (const auto& c : p.coeffs()) {
        if (c.get_den() != 1) throw AlgebraError("expected integer coefficients");
        r.push_back(c.get_num());
    }
    return r;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Irreducible factors over Q of a squarefree primitive integer polynomial.
std::vector<Poly<Rational>> factor_squarefree(const Poly<Rational>& f, std::mt19937_64& rng) {
    if (f.degree() <= 1) return {f};
    const ZZ F = to_zz(f);
    const Integer lc = F.back();

    long long best_p = 0;
    std::vector<ZP> best;
    int tried = 0;
    for (long long p = 3; tried < 5 && p < 100000; p += 2) {
        if (!is_prime(p)) continue;
        if (sgn(Integer(lc % static_cast<long>(p))) == 0) continue;
        ZP fp = to_zp(F, p);
        if (zp_gcd(fp, zp_derivative(fp, p), p).size() != 1) continue;
        ++tried;
        std::vector<ZP> fac = zp_factor(zp_monic(fp, p), p, rng);
        if (best_p == 0 || fac.size() < best.size()) {
            best_p = p;
            best = std::move(fac);
        }
        if (best.size() == 1) break;
    }
    if (best_p == 0) throw AlgebraError("no suitable prime for modular factorization");
    if (best.size() == 1) return {f};

    const long long p = best_p;
    // Coefficient bound for lc * (any factor of f).
    Integer norm2 = 0;
    for (const auto& c : F) norm2 += c * c;
    Integer norm;
    mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
    norm += 1;
    Integer bound = abs(lc) * norm;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(f.degree()));
    bound = 2 * bound + 1;
    int steps = 0;
    Integer M(static_cast<long>(p));
    while (M <= bound) {
        M *= M;
        ++steps;
    }

    // Sequential two-factor lifting.
    std::vector<ZZ> lifted;
    ZZ rest = F;
    reduce_mod(rest, M);
    for (size_t i = 0; i + 1 < best.size(); ++i) {
        const ZP hp = best[i];
        ZP gp{1};
        for (size_t j = i + 1; j < best.size(); ++j) gp = zp_mul(gp, best[j], p);
        ZP rest_p = to_zp(rest, p);
        long long lcr = rest_p.back();
        for (auto& c : gp) c = c * lcr % p;
        // s*g + t*h = 1 mod p.
        ZP r0 = gp, r1 = hp, s0{1}, s1{}, t0{}, t1{1};
        while (!r1.empty()) {
            auto [q, r] = zp_divmod(r0, r1, p);
            r0 = std::move(r1);
            r1 = std::move(r);
            ZP s2 = zp_sub(s0, zp_mul(q, s1, p), p), t2 = zp_sub(t0, zp_mul(q, t1, p), p);
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        long long inv = inv_mod(r0[0], p);
        for (auto& c : s0) c = c * inv % p;
        for (auto& c : t0) c = c * inv % p;
        ZZ g = from_zp(gp), h = from_zp(hp), s = from_zp(s0), t = from_zp(t0);
        Integer m(static_cast<long>(p));
        for (int k = 0; k < steps; ++k) {
            m *= m;
            ZZ target = rest;
            reduce_mod(target, m);
            hensel_step(target, g, h, s, t, m);
        }
        lifted.push_back(h);
        rest = g;
    }
    {
        // Remaining factor made monic mod M.
        Integer inv;
        mpz_invert(inv.get_mpz_t(), rest.back().get_mpz_t(), M.get_mpz_t());
        for (auto& c : rest) c *= inv;
        reduce_mod(rest, M);
        lifted.push_back(rest);
    }

    std::vector<Poly<Rational>> out;
    Poly<Rational> fw = f;
    std::vector<ZZ> pool = lifted;
    size_t k = 1;
    while (2 * k <= pool.size()) {
        bool found = false;
        std::vector<size_t> idx(k);
        for (size_t i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            Integer lcw = fw.lc().get_num();
            ZZ cand{lcw};
            for (size_t i : idx) cand = zz_mul(cand, pool[i], M);
            cand = symmetric(cand, M);
            Poly<Rational> cp = primitive_integer(to_poly(cand));
            if (cp.degree() > 0) {
                auto [q, r] = divmod(fw, cp);
                bool integral = r.is_zero();
                for (const auto& c : q.coeffs())
                    if (c.get_den() != 1) integral = false;
                if (integral) {
                    out.push_back(cp);
                    fw = q;
                    std::vector<ZZ> np;
                    for (size_t i = 0; i < pool.size(); ++i)
                        if (std::find(idx.begin(), idx.end(), i) == idx.end()) np.push_back(pool[i]);
                    pool = std::move(np);
                    found = true;
                    break;
                }
            }
            // Next k-subset in lexicographic order.
            int i = static_cast<int>(k) - 1;
            while (i >= 0 && idx[static_cast<size_t>(i)] == pool.size() - k + static_cast<size_t>(i)) --i;
            if (i < 0) break;
            ++idx[static_cast<size_t>(i)];
            for (size_t j = static_cast<size_t>(i) + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++k;
    }
    if (fw.degree() > 0) out.push_back(primitive_integer(fw));
    return out;
}

}  // namespace

Poly<Rational> gcd(const Poly<Rational>& a, const Poly<Rational>& b) {
    if (a.is_zero() || b.is_zero() || a.degree() <= 1 || b.degree() <= 1) return gcd<Rational>(a, b);
    const Poly<Rational> A = primitive_integer(a), B = primitive_integer(b);
    Integer gamma;
    mpz_gcd(gamma.get_mpz_t(), A.lc().get_num_mpz_t(), B.lc().get_num_mpz_t());
    int best = std::min(A.degree(), B.degree()) + 1;
    Integer M = 1;
    ZZ H, last;
    Integer p = Integer(1) << 30;
    for (int iter = 0; iter < 400; ++iter) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        const long long pl = p.get_si();
        if (gamma % p == 0) continue;
        auto to_zp = [&](const Poly<Rational>& q) {
            ZP r;
            for (const auto& c : q.coeffs()) {
                Integer t = c.get_num() % p;
                r.push_back(mod(t.get_si(), pl));
            }
            trim(r);
            return r;
        };
        ZP g = zp_gcd(to_zp(A), to_zp(B), pl);
        const int e = static_cast<int>(g.size()) - 1;
        if (e == 0) return Poly<Rational>(Rational(1));
        if (e > best) continue;
        const long long gm = mod(Integer(gamma % p).get_si(), pl);
        for (auto& c : g) c = c * gm % pl;
        if (e < best) {
            best = e;
            M = p;
            H.clear();
            for (long long c : g) H.emplace_back(static_cast<long>(c));
            last.clear();
            continue;
        }
        // Chinese remaindering of H (mod M) with g (mod p).
        const long long minv = inv_mod(Integer(M % p).get_si(), pl);
        for (size_t i = 0; i < H.size(); ++i) {
            long long h = Integer(H[i] % p).get_si();
            long long t = mod(g[i] - h, pl) * minv % pl;
            H[i] += M * Integer(static_cast<long>(t));
        }
        M *= p;
        ZZ sym = H;
        const Integer half = M / 2;
        for (auto& c : sym)
            if (c > half) c -= M;
        if (sym == last) {
            std::vector<Rational> v(sym.begin(), sym.end());
            Poly<Rational> G = primitive_integer(Poly<Rational>(v));
            if (divmod(A, G).second.is_zero() && divmod(B, G).second.is_zero()) return monic(G);
        }
        last = sym;
    }
    return gcd<Rational>(a, b);
}

Poly<Rational> primitive_integer(const Poly<Rational>& p) {
    if (p.is_zero()) return p;
    Integer l = 1, g = 0;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Rational> v;
    for (const auto& c : p.coeffs()) {
        Rational t = c * Rational(l);
        v.push_back(t);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.get_num_mpz_t());
    }
    if (sgn(v.back()) < 0) g = -g;
    for (auto& c : v) c /= Rational(g);
    return Poly<Rational>(std::move(v));
}

Factorization factor(const Poly<Rational>& p) {
    if (p.is_zero()) throw AlgebraError("factorization of zero");
    Factorization out{p.lc(), {}};
    std::mt19937_64 rng(0x5eed);
    for (const auto& [sq, mult] : squarefree_decompose(p)) {
        for (const auto& fac : factor_squarefree(primitive_integer(sq), rng)) out.factors.emplace_back(monic(fac), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (int i = a.first.degree(); i >= 0; --i)
            if (a.first[i] != b.first[i]) return a.first[i] < b.first[i];
        return a.second < b.second;
    });
    return out;
}

std::vector<std::pair<Rational, int>> rational_roots(const Poly<Rational>& p) {
    std::vector<std::pair<Rational, int>> out;
    if (p.degree() <= 0) return out;
    for (const auto& [fac, m] : factor(p).factors)
        if (fac.degree() == 1) out.emplace_back(-fac[0], m);
    return out;
}

Poly<Rational> cyclotomic(int n) {
    if (n < 1) throw AlgebraError("cyclotomic index must be positive");
    static std::mutex mu;
    static std::map<int, Poly<Rational>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    Poly<Rational> r = Poly<Rational>::monomial(Rational(1), n) - Poly<Rational>(Rational(1));
    for (int d = 1; d < n; ++d)
        if (n % d == 0) r = exact_div(r, cyclotomic(d));
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(n, r);
    return r;
}

}  // namespace poizat
