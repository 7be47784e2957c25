#ifndef GAMMAFORGE_BASECHANGE_HPP
#define GAMMAFORGE_BASECHANGE_HPP

#include <cstdint>
#include <map>
#include <string>

#include "gammaforge/gamma.hpp"
#include "gammaforge/rng.hpp"

namespace gammaforge {

// A ring extension R -> S from the closed universe (Z->Q, R->R[X..],
// Z->Z/n, and composites). The embedding itself is scalarEmbed.
struct Extension {
  RingDescriptor base;
  RingDescriptor top;
};

Extension makeExtension(const RingDescriptor& base, const RingDescriptor& top);
Extension parseExtensionTag(const std::string& tag);  // e.g. "Z->Q", "Z->Z[X]"

// In the free-module representation, S (x) Gamma_R(M) and Gamma_S(S (x) M)
// share the monomial basis b^[k]; both are "GammaElement over S on the
// basis of M". The base change morphism theta is therefore the identity on
// the data, and everything substantive lives in the generator formula
// theta(s (x) x^[n]) = s (1 (x) x)^[n], which expands x^[n] before the
// embedding on one side and after it on the other. The verification suite
// targets exactly that formula, multiplicativity, and mutation detection.

// s (x) x^[n] as an S-combination of R-monomials: expand x^[n] over R, embed
// the coefficients, scale by s.
GammaElement tensorDp(const Extension& ext, const Scalar& s, const ModuleVector& x,
                      std::uint32_t n);

// Coefficient-wise embedding of an element of Gamma_R(M) into the S side.
GammaElement gammaEmbed(const Extension& ext, const GammaElement& a);
ModuleVector vectorEmbed(const Extension& ext, const ModuleVector& x);

GammaElement thetaForward(const Extension& ext, const GammaElement& a);
GammaElement thetaInverse(const Extension& ext, const GammaElement& a);

// A candidate base-change morphism, tabulated on the monomial basis.
using ThetaTable = std::map<MultiIndex, GammaElement, MultiIndexLess>;

// The table of the true morphism up to the given degree.
ThetaTable thetaTable(const Extension& ext, const FreeModuleSpec& moduleSpec,
                      std::uint32_t maxDegree);

// Certifies a candidate against the generator set: every basis vector with
// n = 1..3, plus `randomCases` seeded random (s, x, n <= 3). Exact agreement
// on that set pins the candidate to the true morphism on the spanned
// monomials; any single perturbed table entry is detected.
bool thetaUniqueness(const Extension& ext, const FreeModuleSpec& moduleSpec,
                     const ThetaTable& candidate, std::uint64_t seed = kDefaultSeed,
                     std::uint32_t randomCases = 50);

// (gamma_m over Z, then reduce mod n) = (reduce mod n, then gamma_m over
// Z/n). Transports divided-power correctness from Z to Z/n.
bool reductionSquare(std::uint64_t modulus, const GammaElement& a, std::uint32_t m,
                     std::uint64_t termBudget = kDefaultTermBudget);

struct BasechangeReport {
  std::string extension;
  std::uint32_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t additiveFail = 0;
  std::uint64_t multiplicativeFail = 0;
  std::uint64_t unitalFail = 0;
  std::uint64_t roundTripFail = 0;
  std::uint64_t generatorFormulaFail = 0;
  std::uint64_t dpCompatFail = 0;
  bool mutationDetected = false;

  bool allPass() const {
    return additiveFail == 0 && multiplicativeFail == 0 && unitalFail == 0 &&
           roundTripFail == 0 && generatorFormulaFail == 0 && dpCompatFail == 0 &&
           mutationDetected;
  }
};

// The full isomorphism suite for one extension on a module of the given
// rank: algebra-morphism laws, round trips, the generator formula, the
// compatibility of gamma with coefficient embedding, and detection of a
// corrupted table.
BasechangeReport verifyExtension(const Extension& ext, std::uint32_t rank, std::uint64_t seed,
                                 std::uint32_t samples);

}  // namespace gammaforge

#endif
