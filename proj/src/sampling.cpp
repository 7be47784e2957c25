#include "gammaforge/sampling.hpp"

namespace gammaforge {

Scalar sampleCoefficient(Rng& rng, const RingDescriptor& ring) {
  const RingDescriptor& r = ring.scalarRing();
  if (r.kind() == RingKind::IntegersMod)
    return Scalar::fromInt(r, Int(rng.below(r.modulus())));
  return Scalar::fromInt(r, Int(rng.intIn(-9, 9)));
}

Scalar sampleNonzeroCoefficient(Rng& rng, const RingDescriptor& ring) {
  for (;;) {
    Scalar c = sampleCoefficient(rng, ring);
    if (!c.isZero()) return c;
  }
}

Scalar samplePolyScalar(Rng& rng, const RingDescriptor& polyRing, std::uint32_t maxTerms,
                        std::uint32_t maxDeg, const std::vector<std::string>& idealVars) {
  std::size_t nvars = polyRing.vars().size();
  std::vector<std::size_t> idealPos;
  for (const auto& v : idealVars) idealPos.push_back(polyRing.varIndex(v));
  Scalar::PolyTerms terms;
  std::uint32_t count = 1 + static_cast<std::uint32_t>(rng.below(maxTerms));
  for (std::uint32_t t = 0; t < count; ++t) {
    std::vector<std::uint32_t> exps(nvars, 0);
    std::uint32_t deg = static_cast<std::uint32_t>(rng.below(maxDeg + 1));
    if (!idealPos.empty()) {
      // Force membership in the monomial ideal: one guaranteed factor.
      exps[idealPos[rng.below(idealPos.size())]] = 1;
      deg = deg ? deg - 1 : 0;
    }
    for (std::uint32_t d = 0; d < deg; ++d) exps[rng.below(nvars)] += 1;
    terms.push_back({std::move(exps), sampleCoefficient(rng, polyRing.base())});
  }
  return Scalar::fromPolyTerms(polyRing, std::move(terms));
}

Scalar sampleRingElement(Rng& rng, const RingDescriptor& ring) {
  if (ring.isPoly()) return samplePolyScalar(rng, ring, 3, 3);
  return sampleCoefficient(rng, ring);
}

MultiIndex sampleIndex(Rng& rng, const BasisLabels& basis, std::uint32_t maxDeg,
                       std::uint32_t minDeg) {
  std::uint32_t deg = minDeg + static_cast<std::uint32_t>(rng.below(maxDeg - minDeg + 1));
  std::vector<std::uint32_t> exps(basis.size(), 0);
  for (std::uint32_t d = 0; d < deg; ++d) exps[rng.below(basis.size())] += 1;
  return MultiIndex::fromDense(basis, exps);
}

ModuleVector sampleVector(Rng& rng, const FreeModuleSpec& spec) {
  ModuleVector v(spec);
  for (std::size_t i = 0; i < spec.basis.size(); ++i)
    v.accumulate(static_cast<std::uint32_t>(i), sampleRingElement(rng, spec.ring));
  return v;
}

GammaElement sampleGamma(Rng& rng, const FreeModuleSpec& spec, std::uint32_t maxTerms,
                         std::uint32_t maxDeg, std::uint32_t minDeg) {
  GammaElement out(spec);
  std::uint32_t count = 1 + static_cast<std::uint32_t>(rng.below(maxTerms));
  for (std::uint32_t t = 0; t < count; ++t)
    out.accumulate(sampleIndex(rng, spec.basis, maxDeg, minDeg), sampleRingElement(rng, spec.ring));
  return out;
}

GammaElement sampleAugmentation(Rng& rng, const FreeModuleSpec& spec, std::uint32_t maxTerms,
                                std::uint32_t maxDeg) {
  return sampleGamma(rng, spec, maxTerms, maxDeg, 1);
}

}  // namespace gammaforge
