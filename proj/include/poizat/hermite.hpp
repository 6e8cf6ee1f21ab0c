#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "poizat/algnum.hpp"
#include "poizat/numeric.hpp"
#include "poizat/ratfunc.hpp"

namespace poizat {

// f = derivative(rational_part) + log_part with log_part proper and of squarefree denominator.
template <class K>
struct HermiteResult {
    RatFunc<K> rational_part;
    RatFunc<K> log_part;
};

template <class K>
struct ResidueProfile {
    Poly<K> rt_resultant;        // monic in t; its roots are the residues of the log part
    int nonzero_residue_count;   // number of points with nonzero residue
    bool all_poles_simple;       // denominator of f is squarefree
};

enum class Verdict { yes, no, unknown };
std::string to_string(Verdict v);

/**
 * Witness for f = c1 * u'/u. When c1 is not in the base field K the
 * context of c1 is K[r]/(r^2 - delta) and u has coefficients there.
 */
template <class K>
struct LogDerivativeWitness {
    AlgNum<K> c1;
    RatFunc<AlgNum<K>> u;
};

template <class K>
struct LogDerivativeResult {
    Verdict verdict = Verdict::unknown;
    std::string reason;
    std::optional<LogDerivativeWitness<K>> witness;
};

struct LogDerivativeOptions {
    int digits = 64;                 // precision of the specialization cross-check
    std::uint64_t seed = 0;          // drives the specialization points
    int specializations = 3;
};

HermiteResult<Rational> hermite_reduce(const RatFunc<Rational>& f);
HermiteResult<ParamField> hermite_reduce(const RatFunc<ParamField>& f);

std::optional<RatFunc<Rational>> antiderivative(const RatFunc<Rational>& f);
std::optional<RatFunc<ParamField>> antiderivative(const RatFunc<ParamField>& f);
bool is_exact_derivative(const RatFunc<Rational>& f);
bool is_exact_derivative(const RatFunc<ParamField>& f);

// res_z(D, N - t D') for the proper squarefree-denominator function N/D, made monic.
Poly<Rational> rt_resultant(const RatFunc<Rational>& log_part);
Poly<ParamField> rt_resultant(const RatFunc<ParamField>& log_part);

ResidueProfile<Rational> residue_profile(const RatFunc<Rational>& f);
ResidueProfile<ParamField> residue_profile(const RatFunc<ParamField>& f);
int nonzero_residue_count(const RatFunc<Rational>& f);

LogDerivativeResult<Rational> is_log_derivative_multiple(const RatFunc<Rational>& f,
                                                         const LogDerivativeOptions& opt = {});
LogDerivativeResult<ParamField> is_log_derivative_multiple(const RatFunc<ParamField>& f,
                                                           const LogDerivativeOptions& opt = {});

// Residues of the log part at each pole, in root order of numeric_roots(den).
std::vector<Complex> numeric_residues(const RatFunc<Rational>& log_part, int digits);
// Floating-point route: every residue ratio must be a rational with denominator <= max_den.
Verdict numeric_log_derivative_check(const RatFunc<Rational>& f, int digits, long max_den = 1000000);

// dim(V1) + dim(V2) == dim(V1 + V2) for spans of rational vectors over one basis.
bool q_linear_disjointness(const std::vector<std::vector<Rational>>& res1,
                           const std::vector<std::vector<Rational>>& res2);
int rational_rank(const std::vector<std::vector<Rational>>& vectors);

}  // namespace poizat
