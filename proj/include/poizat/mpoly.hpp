#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "poizat/poly.hpp"

namespace poizat {

// Exponent vector without trailing zeros.
using Monomial = std::vector<int>;

// Lex order with variable 0 largest.
struct LexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/**
 * Sparse polynomial over Q in variables t0, t1, ... The number of
 * variables is open ended.
 */
class MPoly {
public:
    MPoly() = default;
    MPoly(int c);
    MPoly(const Rational& c);
    static MPoly var(int i);
    static MPoly term(const Rational& c, Monomial m);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    int total_degree() const;
    std::set<int> variables() const;
    const std::map<Monomial, Rational, LexLess>& terms() const { return t_; }

    // Largest term in lex order; the polynomial must be nonzero.
    const std::pair<const Monomial, Rational>& leading() const { return *t_.rbegin(); }

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly substitute(int v, const MPoly& q) const;
    MPoly monic() const;
    // Only meaningful when every variable other than v is absent.
    Poly<Rational> univariate(int v) const;

private:
    void add_term(const Monomial& m, const Rational& c);
    std::map<Monomial, Rational, LexLess> t_;
};

inline bool is_zero(const MPoly& p) { return p.is_zero(); }
std::string to_string(const MPoly& p);

struct SolveBudget {
    long steps = 20000;
    bool exhausted = false;
    bool spend(long n = 1) {
        steps -= n;
        if (steps < 0) exhausted = true;
        return !exhausted;
    }
};

// Reduced Groebner basis for graded reverse lex, or nullopt when the budget runs out.
std::optional<std::vector<MPoly>> groebner_basis(std::vector<MPoly> gens, SolveBudget& budget);

/**
 * One branch of the rational solution set: substitutions to apply in
 * order, and equations left unsolved.
 */
struct SolveBranch {
    std::vector<std::pair<int, MPoly>> subs;
    std::vector<MPoly> residual;
};

/**
 * Splits a system into branches over Q using linear elimination and
 * rational roots of univariate members. With `groebner` set, stuck
 * systems are replaced by their basis, and zero-dimensional ones branch
 * on the rational eigenvalues of a multiplication matrix.
 */
std::vector<SolveBranch> solve_rational(std::vector<MPoly> eqs, bool groebner, SolveBudget& budget);

}  // namespace poizat
