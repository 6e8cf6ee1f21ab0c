#pragma once

#include <string>

#include "json.hpp"
#include "poizat/affine.hpp"
#include "poizat/classifier.hpp"
#include "poizat/darboux.hpp"

namespace poizat {

using Json = nlohmann::ordered_json;

// Polynomial in x = z, y = z' written with z and z'.
std::string phase_text(const BiPoly& p);
BiPoly parse_phase(const std::string& text);

Json to_json(const ClassificationReport& r);
// Reads the keys written by to_json; extra keys are ignored.
ClassificationReport classification_from_json(const Json& j);

// {a_minpoly, a_root_index, b_coeffs}; b_coeffs are the coordinates of b in powers of a.
Json to_json(const AffineMap& m);
Json to_json(const StabilizerGroup& g);
Json to_json(const RosenlichtResult& r);
Json to_json(const DarbouxSearch& s);
Json to_json(const JouanolouReport& r);

}  // namespace poizat
