#ifndef GAMMAFORGE_TESTS_SUPPORT_HPP
#define GAMMAFORGE_TESTS_SUPPORT_HPP

#include <map>
#include <string>
#include <vector>

#include "gammaforge/gamma.hpp"
#include "gammaforge/polylaw.hpp"
#include "gammaforge/sampling.hpp"

namespace gammaforge::testsupport {

inline FreeModuleSpec makeSpec(const RingDescriptor& ring, std::uint32_t rank,
                               const std::string& stem = "b") {
  std::vector<std::string> labels;
  for (std::uint32_t i = 1; i <= rank; ++i) labels.push_back(stem + std::to_string(i));
  return FreeModuleSpec{ring, BasisLabels(labels)};
}

inline GammaElement mono(const FreeModuleSpec& spec,
                         const std::map<std::string, std::uint32_t>& exps, long coeff = 1) {
  return GammaElement::monomial(spec, MultiIndex::fromExps(spec.basis, exps),
                                Scalar::fromInt(spec.ring, coeff));
}

inline ModuleVector vec(const FreeModuleSpec& spec, const std::map<std::string, long>& coords) {
  ModuleVector v(spec);
  for (const auto& [label, c] : coords)
    v.accumulate(static_cast<std::uint32_t>(spec.basis.indexOf(label)),
                 Scalar::fromInt(spec.ring, c));
  return v;
}

inline PolyLaw samplePolyLaw(Rng& rng, const FreeModuleSpec& source, const FreeModuleSpec& target,
                             std::uint32_t maxDeg, std::uint32_t maxTerms) {
  PolyLaw f(source, target);
  std::uint32_t count = 1 + static_cast<std::uint32_t>(rng.below(maxTerms));
  for (std::uint32_t t = 0; t < count; ++t) {
    ModuleVector v(target);
    for (std::size_t i = 0; i < target.basis.size(); ++i)
      v.accumulate(static_cast<std::uint32_t>(i), sampleRingElement(rng, target.ring));
    f.accumulate(sampleIndex(rng, source.basis, maxDeg), v);
  }
  return f;
}

// f_S(t m) = t^d f_S(m) over S = R[t], evaluated on `trials` sampled points
// with nonzero coordinates.
inline bool extensionalScalingTest(const PolyLaw& f, std::uint32_t d, Rng& rng, int trials) {
  std::string tName = freshVarNames(f.source().ring, {"t"})[0];
  RingDescriptor rt = adjoinVars(f.source().ring, {tName});
  Scalar t = Scalar::variable(rt, tName);
  for (int i = 0; i < trials; ++i) {
    ModuleVector m(FreeModuleSpec{rt, f.source().basis});
    for (std::size_t p = 0; p < f.source().basis.size(); ++p)
      m.accumulate(static_cast<std::uint32_t>(p),
                   scalarEmbed(sampleNonzeroCoefficient(rng, f.source().ring), rt));
    ModuleVector scaled(m.spec());
    for (const auto& [pos, c] : m.coords()) scaled.accumulate(pos, t * c);
    ModuleVector lhs = evalAt(f, rt, scaled);
    ModuleVector unscaled = evalAt(f, rt, m);
    ModuleVector rhs(FreeModuleSpec{rt, f.target().basis});
    for (const auto& [pos, c] : unscaled.coords()) rhs.accumulate(pos, t.pow(d) * c);
    if (lhs != rhs) return false;
  }
  return true;
}

inline LinearMap sampleLinearMap(Rng& rng, const BasisLabels& source,
                                 const FreeModuleSpec& target) {
  LinearMap f{source, target, {}};
  for (std::size_t i = 0; i < source.size(); ++i) {
    ModuleVector column = sampleVector(rng, target);
    if (!column.isZero()) f.columns.emplace(static_cast<std::uint32_t>(i), column);
  }
  return f;
}

}  // namespace gammaforge::testsupport

#endif
