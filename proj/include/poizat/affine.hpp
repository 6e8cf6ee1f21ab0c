#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poizat/algnum.hpp"
#include "poizat/numeric.hpp"
#include "poizat/ratfunc.hpp"

namespace poizat {

using Algebraic = AlgNum<Rational>;

/**
 * The map z -> a*z + b.
 *
 * a is the root number `root_index` of `minpoly`, counting roots by
 * increasing argument in [0, 2*pi) and then by modulus. Inside the field
 * Q[a]/(minpoly) the value a is the generator, and b is a polynomial in
 * it. When minpoly has degree 1 both are plain rationals.
 */
struct AffineMap {
    Poly<Rational> minpoly;
    int root_index = 0;
    Algebraic a;
    Algebraic b;

    bool is_rational() const { return minpoly.degree() == 1; }
};

AffineMap rational_map(const Rational& a, const Rational& b);
std::string to_string(const AffineMap& m);
// "y + 1", "-y", "a*y + 2*a - 2"
std::string relation_text(const AffineMap& m, const std::string& var = "y");
std::pair<Complex, Complex> numeric_map(const AffineMap& m, int digits);

// Roots of an irreducible polynomial in the documented order.
std::vector<Complex> ordered_roots(const Poly<Rational>& p, int digits);

/**
 * All maps fixing f. Every element is z -> zeta^k (z - center) + center
 * with zeta = exp(2*pi*i/order); exponents[k] records that k.
 */
struct StabilizerGroup {
    std::vector<AffineMap> elements;
    std::vector<int> exponents;
    int order = 1;
    bool is_cyclic = true;
    std::optional<AffineMap> generator;
    Rational center;
};

struct CanonicalFormWitness {
    AffineMap conjugator;
    Algebraic c;
    int n = 0;
    Poly<Algebraic> g_poly;
};

enum class AclKind { strictly_disintegrated, omega_categorical };
struct AclProfile {
    AclKind kind;
    int k;
};
std::string to_string(const AclProfile& p);

struct RelationReport {
    std::vector<AffineMap> relations;  // y_g = a*y_f + b
    std::vector<std::string> lines;
    std::string conclusion;
};

StabilizerGroup affine_stabilizer(const RatFunc<Rational>& f);
// All (a, b) with f(z) = g(a*z + b).
std::vector<AffineMap> affine_transporter(const RatFunc<Rational>& f, const RatFunc<Rational>& g);
AclProfile acl_profile(const RatFunc<Rational>& f);
std::optional<CanonicalFormWitness> canonical_form_detect(const RatFunc<Rational>& f);
RelationReport relation_report(const RatFunc<Rational>& f, const RatFunc<Rational>& g);

// f(a*z + b) with a and b taken in the field of the map.
RatFunc<Algebraic> apply_map(const RatFunc<Rational>& f, const AffineMap& m);
bool fixes(const RatFunc<Rational>& f, const AffineMap& m);

// Exact group-axiom and invariance check inside the cyclotomic field of the group order.
bool verify_stabilizer(const RatFunc<Rational>& f, const StabilizerGroup& g);

// c * sum_{k<n} xi^k/(z - xi^k) + g_poly(z^n), and a check that f(a*z + b) equals it.
bool verify_canonical_form(const RatFunc<Rational>& f, const CanonicalFormWitness& w);

}  // namespace poizat
