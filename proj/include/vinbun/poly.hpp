#pragma once

// Univariate polynomials over F_q in the variable t. Coefficients are stored
// low to high with no trailing zeros, so the zero polynomial is empty.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vinbun/field.hpp"

namespace vinbun {

using FqPoly = std::vector<Fq>;

namespace poly {

int degree(const FqPoly& f);  // -1 for the zero polynomial
void normalize(FqPoly& f);
bool isMonic(const FqPoly& f);

FqPoly add(const PrimePowerField& F, const FqPoly& f, const FqPoly& g);
FqPoly sub(const PrimePowerField& F, const FqPoly& f, const FqPoly& g);
FqPoly mul(const PrimePowerField& F, const FqPoly& f, const FqPoly& g);
FqPoly scale(const PrimePowerField& F, const FqPoly& f, Fq c);
/// Quotient and remainder; throws std::domain_error when g = 0.
std::pair<FqPoly, FqPoly> divmod(const PrimePowerField& F, const FqPoly& f, const FqPoly& g);
bool divides(const PrimePowerField& F, const FqPoly& g, const FqPoly& f);
FqPoly monicGcd(const PrimePowerField& F, FqPoly f, FqPoly g);
FqPoly makeMonic(const PrimePowerField& F, const FqPoly& f);
Fq evaluate(const PrimePowerField& F, const FqPoly& f, Fq x);

/// Monic polynomials of degree d are indexed by [0, q^d): the base-q digits
/// of the index are the non-leading coefficients, low to high.
FqPoly monicFromIndex(const PrimePowerField& F, int d, std::uint64_t index);
std::uint64_t monicIndex(const PrimePowerField& F, const FqPoly& f);

/// Irreducibility by trial division against every monic polynomial of
/// degree 1..deg/2.
bool isIrreducibleByTrialDivision(const PrimePowerField& F, const FqPoly& f);

/// All monic irreducibles of degree d, ordered by index. Uses a sieve over
/// products of lower-degree irreducibles.
std::vector<FqPoly> monicIrreducibles(const PrimePowerField& F, int d);

/// Factorization of a monic polynomial into (monic irreducible, multiplicity),
/// irreducibles sorted by (degree, index).
std::vector<std::pair<FqPoly, int>> factorMonic(const PrimePowerField& F, FqPoly f);

/// Text form such as "t^2+t+1"; coefficients print as field element indices.
std::string format(const PrimePowerField& F, const FqPoly& f);
/// Parses the format above; also accepts '-' and an optional '*'.
/// Throws std::invalid_argument on malformed input.
FqPoly parse(const PrimePowerField& F, const std::string& text);

}  // namespace poly
}  // namespace vinbun
