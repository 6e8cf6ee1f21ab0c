#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poizat/bivariate.hpp"
#include "poizat/expr.hpp"
#include "poizat/hermite.hpp"

namespace poizat {

enum class SemiminimalClass {
    strongly_minimal,
    internal,
    two_step_analyzable,
    orthogonal_generic_fiber,
    analyzable_via_log_derivative,
    unknown
};
enum class LiouvillianFlag { none, all_fibers_liouvillian, unknown };
enum class DopFlag { yes, no, unknown };
enum class ModelCountProfile { all_one, countable_split, two_to_kappa, unknown };

std::string to_string(SemiminimalClass c);
std::string to_string(LiouvillianFlag l);
std::string to_string(DopFlag d);
std::string to_string(ModelCountProfile m);
// Inverses of to_string; throw ParseError on unknown text.
SemiminimalClass parse_semiminimal_class(const std::string& s);
LiouvillianFlag parse_liouvillian_flag(const std::string& s);
DopFlag parse_dop_flag(const std::string& s);
ModelCountProfile parse_model_count_profile(const std::string& s);

struct SolutionFlags {
    LiouvillianFlag liouvillian_nonalgebraic_solutions = LiouvillianFlag::unknown;
    bool pfaffian_excluded = false;
    // Solutions are not d-reducible for any d below this bound; 0 means nothing is excluded.
    int d_reducible_excluded_below = 0;
};

/**
 * Witness data for the non-minimal branches.
 *
 * first_integral is a polynomial in x = z and y = z' that is constant
 * along solutions. normalization (a, b) is the substitution w = a*z + b
 * that brings a linear f to f = w. The log-derivative fields hold
 * c1 and u with 1/(g + c) = c1 * u'/u.
 */
struct ClassificationWitnesses {
    std::optional<RatFunc<Rational>> antiderivative;
    std::optional<BiPoly> first_integral;
    std::optional<std::pair<Rational, Rational>> normalization;
    std::optional<std::string> fiber_family;
    std::optional<Poly<Rational>> bad_set;
    std::optional<std::string> log_derivative_c1;
    std::optional<std::string> log_derivative_u;

    friend bool operator==(const ClassificationWitnesses&, const ClassificationWitnesses&) = default;
};

struct ClassificationReport {
    RatFunc<Rational> input;
    bool strongly_minimal = false;
    // True only where triviality is established.
    bool geometrically_trivial = false;
    SolutionFlags solution_flags;
    SemiminimalClass semiminimal_class = SemiminimalClass::unknown;
    DopFlag dop = DopFlag::unknown;
    ModelCountProfile model_count_profile = ModelCountProfile::unknown;
    ClassificationWitnesses witnesses;
    std::vector<std::string> warnings;
};

bool operator==(const SolutionFlags& a, const SolutionFlags& b);
bool operator==(const ClassificationReport& a, const ClassificationReport& b);

ClassificationReport classify_poizat(const RatFunc<Rational>& f, const LogDerivativeOptions& opt = {});

enum class RosenlichtVerdict { nonorthogonal, orthogonal, unknown };
enum class NonorthogonalKind { exact_derivative, log_derivative };
std::string to_string(RosenlichtVerdict v);
std::string to_string(NonorthogonalKind k);

/**
 * Verdict for z' = w(z). exact_derivative carries v with 1/w = v';
 * log_derivative carries c1 and u with 1/w = c1 * u'/u.
 */
struct RosenlichtResult {
    RosenlichtVerdict verdict = RosenlichtVerdict::unknown;
    std::optional<NonorthogonalKind> kind;
    std::optional<RatFunc<ParamField>> antiderivative;
    std::optional<LogDerivativeWitness<ParamField>> log_witness;
    std::string reason;
};

RosenlichtResult rosenlicht_classify(const RatFunc<ParamField>& w, const LogDerivativeOptions& opt = {});
RosenlichtResult rosenlicht_classify(const RatFunc<Rational>& w, const LogDerivativeOptions& opt = {});

struct FiberSquarefree {
    bool generically_squarefree = false;
    // Discriminant of g(z) + c in z, as a polynomial in c.
    Poly<Rational> bad_set;
};

FiberSquarefree generic_fiber_squarefree(const Poly<Rational>& g);

enum class LienardVerdict { orthogonal_for_generic_s, inapplicable };
std::string to_string(LienardVerdict v);

// s0 lists values for family_g.parameters in order.
LienardVerdict lienard_family_orthogonality(const RatFunc<Rational>& f, const Family& family_g,
                                            const std::vector<Rational>& s0);

}  // namespace poizat
