#pragma once

#include <string>
#include <vector>

#include "poizat/bivariate.hpp"
#include "poizat/forms.hpp"

namespace poizat {

// x' = dx_image, y' = dy_image.
using PlanarVectorField = PlanarDerivation;

struct DarbouxPair {
    BiPoly invariant;
    BiPoly cofactor;
};

struct DarbouxSearch {
    std::vector<DarbouxPair> pairs;
    int field_degree = 0;
    // False when the parameter systems were not fully solved within budget.
    bool complete = true;
    // Two independent solutions with one cofactor; their ratio is a first integral.
    bool rational_first_integral = false;
};

// P*f_x + Q*f_y
BiPoly apply_field(const BiPoly& P, const BiPoly& Q, const BiPoly& f);
bool is_darboux_pair(const BiPoly& P, const BiPoly& Q, const DarbouxPair& d);

DarbouxSearch darboux_search(const PlanarVectorField& v, int max_degree);
std::vector<DarbouxPair> darboux_polynomials(const PlanarVectorField& v, int max_degree);

struct ClearedField {
    BiPoly P;
    BiPoly Q;
    BiPoly multiplier;
    std::string caveat;
};

ClearedField clear_denominators(const PlanarVectorField& v);

enum class OdaniVerdict { no_invariant_curves, inapplicable };
std::string to_string(OdaniVerdict v);

// Lienard system x'' + f(x) x' + g(x) = 0.
OdaniVerdict odani_check(const UPoly& f, const UPoly& g);

struct JouanolouReport {
    int curve_count_found = 0;
    int degree_bound_searched = 0;
    int field_degree = 0;
    long darboux_threshold = 0;
    long rational_threshold = 0;
    bool darboux_integral_implied = false;
    bool rational_integral_implied = false;
    bool search_complete = true;
};

JouanolouReport jouanolou_report(const PlanarVectorField& v, int max_degree);

}  // namespace poizat
