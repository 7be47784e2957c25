#include "gammaforge/dpaxioms.hpp"

#include <algorithm>

#include "gammaforge/json_io.hpp"

namespace gammaforge {

DpStructure<Scalar> rationalCanonical(const RingDescriptor& algebra,
                                      const std::vector<std::string>& idealVars) {
  if (algebra.scalarRing().kind() != RingKind::Rationals)
    fail(Errc::NotRationalAlgebra, algebra.tag() + " is not a Q-algebra");
  if (!idealVars.empty() && !algebra.isPoly())
    fail(Errc::NotRationalAlgebra, "ideal generators given for the non-polynomial ring " +
                                       algebra.tag());
  std::vector<std::size_t> idealPos;
  for (const auto& v : idealVars) idealPos.push_back(algebra.varIndex(v));

  DpStructure<Scalar> dp(Scalar::one(algebra));
  dp.name = "canonical x^n/n! on " + algebra.tag();
  dp.idealContains = [algebra, idealPos](const Scalar& x) {
    if (idealPos.empty()) return true;  // the whole algebra
    if (x.ring() != algebra) return false;
    for (const auto& term : x.asPoly()) {
      bool divisible = false;
      for (std::size_t p : idealPos)
        if (term.exps[p] > 0) {
          divisible = true;
          break;
        }
      if (!divisible) return false;
    }
    return true;
  };
  dp.gamma = [](std::uint32_t n, const Scalar& x) { return divByInt(x.pow(n), factorial(n)); };
  if (algebra.isPoly()) {
    dp.sampleIdeal = [algebra, idealVars](Rng& rng) {
      return samplePolyScalar(rng, algebra, 4, 4, idealVars);
    };
    dp.sampleRing = [algebra](Rng& rng) { return samplePolyScalar(rng, algebra, 4, 4); };
  } else {
    dp.sampleIdeal = [algebra](Rng& rng) { return sampleCoefficient(rng, algebra); };
    dp.sampleRing = dp.sampleIdeal;
  }
  dp.elemJson = [](const Scalar& x) { return toJson(x); };
  return dp;
}

DpStructure<GammaElement> gammaAugmentation(const FreeModuleSpec& spec,
                                            std::uint64_t termBudget) {
  DpStructure<GammaElement> dp(GammaElement::one(spec));
  dp.name = "augmentation ideal of the divided power algebra over " + spec.ring.tag();
  dp.idealContains = [](const GammaElement& a) { return a.inAugmentationIdeal(); };
  dp.gamma = [termBudget](std::uint32_t n, const GammaElement& a) {
    return gammaN(n, a, termBudget);
  };
  dp.sampleIdeal = [spec](Rng& rng) { return sampleAugmentation(rng, spec); };
  dp.sampleRing = [spec](Rng& rng) { return sampleGamma(rng, spec, 4, 3); };
  dp.elemJson = [](const GammaElement& a) { return toJson(a); };
  return dp;
}

GammaElement gammaOracle(std::uint32_t n, const GammaElement& a) {
  const FreeModuleSpec& spec = a.spec();
  if (spec.ring.kind() != RingKind::Integers)
    fail(Errc::UnsupportedRing, "the fraction-field oracle needs base ring Z");
  if (n == 0) return GammaElement::one(spec);
  if (!a.inAugmentationIdeal())
    fail(Errc::NotInAugmentationIdeal, "oracle input must have zero grade-0 part");

  // One polynomial variable per basis label (names reused verbatim).
  RingDescriptor polyQ = RingDescriptor::poly(RingDescriptor::rationals(), spec.basis.all());
  std::vector<std::size_t> varOf(spec.basis.size());
  for (std::size_t i = 0; i < spec.basis.size(); ++i)
    varOf[i] = polyQ.varIndex(spec.basis.at(i));

  // Embed: b^[k] |-> prod_i X_i^(k_i) / k_i!.
  Scalar image = Scalar::zero(polyQ);
  for (const auto& [k, c] : a.terms()) {
    std::vector<std::uint32_t> exps(polyQ.vars().size(), 0);
    Int den(1);
    for (const auto& [pos, e] : k.entries()) {
      exps[varOf[pos]] = e;
      den *= factorial(e);
    }
    Rat coeff(c.asInt(), den);
    Scalar::PolyTerms t;
    t.push_back({std::move(exps), Scalar::rational(coeff)});
    image = image + Scalar::fromPolyTerms(polyQ, std::move(t));
  }

  Scalar value = divByInt(image.pow(n), factorial(n));

  // Pull back: X^v |-> (prod_i v_i!) b^[v]; integrality is asserted.
  GammaElement out(spec);
  for (const auto& term : value.asPoly()) {
    Int mult(1);
    std::vector<std::uint32_t> exps(spec.basis.size(), 0);
    for (std::size_t i = 0; i < spec.basis.size(); ++i) {
      exps[i] = term.exps[varOf[i]];
      mult *= factorial(exps[i]);
    }
    Rat c = term.coeff.asRat() * Rat(mult);
    if (denominator(c) != 1)
      fail(Errc::NotIntegral, "oracle pullback produced the non-integer " +
                                  numerator(c).str() + "/" + denominator(c).str());
    out.accumulate(MultiIndex::fromDense(spec.basis, exps), Scalar::integer(numerator(c)));
  }
  return out;
}

DpStructure<GammaElement> quotientDp(const DpStructure<GammaElement>& dp,
                                     const FreeModuleSpec& fullSpec,
                                     const std::set<std::string>& drop) {
  FreeModuleSpec reduced = quotientSpec(fullSpec, drop);

  // Kernel generators p^[n] must stay in the kernel under gamma.
  for (const auto& label : drop) {
    std::size_t pos = fullSpec.basis.indexOf(label);
    for (std::uint32_t n = 1; n <= 3; ++n) {
      GammaElement gen = GammaElement::monomial(
          fullSpec, MultiIndex::single(fullSpec.basis, pos, n), Scalar::one(fullSpec.ring));
      for (std::uint32_t m = 1; m <= 3; ++m) {
        if (!quotientByBasisSpan(drop, dp.gamma(m, gen)).isZero())
          fail(Errc::KernelNotStable, "gamma_" + std::to_string(m) + " moved " + label +
                                          "^[" + std::to_string(n) + "] out of the kernel");
      }
    }
  }

  DpStructure<GammaElement> q(GammaElement::one(reduced));
  q.name = dp.name + " / basis span";
  q.idealContains = [](const GammaElement& a) { return a.inAugmentationIdeal(); };
  q.gamma = [dp, fullSpec, drop](std::uint32_t n, const GammaElement& a) {
    // Section, gamma upstairs, project.
    return quotientByBasisSpan(drop, dp.gamma(n, includeFromQuotient(fullSpec, a)));
  };
  q.sampleIdeal = [reduced](Rng& rng) { return sampleAugmentation(rng, reduced); };
  q.sampleRing = [reduced](Rng& rng) { return sampleGamma(rng, reduced, 4, 3); };
  q.elemJson = [](const GammaElement& a) { return toJson(a); };
  return q;
}

}  // namespace gammaforge
