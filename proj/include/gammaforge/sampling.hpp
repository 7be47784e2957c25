#ifndef GAMMAFORGE_SAMPLING_HPP
#define GAMMAFORGE_SAMPLING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gammaforge/gamma.hpp"
#include "gammaforge/rng.hpp"

namespace gammaforge {

// Deterministic generators for the property suites. Coefficients are drawn
// uniformly from [-9, 9] (all residues for Z/n); supports stay small so that
// exact arithmetic keeps every check fast.

// A base-ring coefficient (constant for polynomial rings).
Scalar sampleCoefficient(Rng& rng, const RingDescriptor& ring);
Scalar sampleNonzeroCoefficient(Rng& rng, const RingDescriptor& ring);

// A polynomial-ring element with up to maxTerms monomials of degree at most
// maxDeg. If idealVars is nonempty, every monomial is divisible by at least
// one of those variables (i.e. the element lies in the monomial ideal they
// generate).
Scalar samplePolyScalar(Rng& rng, const RingDescriptor& polyRing, std::uint32_t maxTerms,
                        std::uint32_t maxDeg, const std::vector<std::string>& idealVars = {});

// Any element of the ring: for polynomial rings a samplePolyScalar, else a
// coefficient.
Scalar sampleRingElement(Rng& rng, const RingDescriptor& ring);

MultiIndex sampleIndex(Rng& rng, const BasisLabels& basis, std::uint32_t maxDeg,
                       std::uint32_t minDeg = 0);

ModuleVector sampleVector(Rng& rng, const FreeModuleSpec& spec);

// A divided-power-algebra element with up to maxTerms monomials of degree
// within [minDeg, maxDeg].
GammaElement sampleGamma(Rng& rng, const FreeModuleSpec& spec, std::uint32_t maxTerms,
                         std::uint32_t maxDeg, std::uint32_t minDeg = 0);

// An element of the augmentation ideal (minimum degree 1).
GammaElement sampleAugmentation(Rng& rng, const FreeModuleSpec& spec, std::uint32_t maxTerms = 4,
                                std::uint32_t maxDeg = 4);

}  // namespace gammaforge

#endif
