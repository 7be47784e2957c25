#include "gammaforge/basechange.hpp"

#include "gammaforge/json_io.hpp"
#include "gammaforge/sampling.hpp"

namespace gammaforge {

Extension makeExtension(const RingDescriptor& base, const RingDescriptor& top) {
  if (!embeddable(base, top))
    fail(Errc::ExtensionMismatch, "no embedding " + base.tag() + " -> " + top.tag());
  return Extension{base, top};
}

Extension parseExtensionTag(const std::string& tag) {
  auto arrow = tag.find("->");
  if (arrow == std::string::npos)
    fail(Errc::MalformedInput, "extension tag must look like \"Z->Q\", got " + tag);
  return makeExtension(parseRingTag(tag.substr(0, arrow)), parseRingTag(tag.substr(arrow + 2)));
}

ModuleVector vectorEmbed(const Extension& ext, const ModuleVector& x) {
  if (x.spec().ring != ext.base)
    fail(Errc::ExtensionMismatch, "vector is not over the base ring " + ext.base.tag());
  ModuleVector out(FreeModuleSpec{ext.top, x.spec().basis});
  for (const auto& [pos, c] : x.coords()) out.accumulate(pos, scalarEmbed(c, ext.top));
  return out;
}

GammaElement gammaEmbed(const Extension& ext, const GammaElement& a) {
  if (a.spec().ring != ext.base)
    fail(Errc::ExtensionMismatch, "element is not over the base ring " + ext.base.tag());
  GammaElement out(FreeModuleSpec{ext.top, a.spec().basis});
  for (const auto& [k, c] : a.terms()) out.accumulate(k, scalarEmbed(c, ext.top));
  return out;
}

GammaElement tensorDp(const Extension& ext, const Scalar& s, const ModuleVector& x,
                      std::uint32_t n) {
  if (s.ring() != ext.top) fail(Errc::ExtensionMismatch, "tensor scalar must live in the top ring");
  return gammaEmbed(ext, dpGenerator(n, x)).scaled(s);
}

GammaElement thetaForward(const Extension& ext, const GammaElement& a) {
  if (a.spec().ring != ext.top)
    fail(Errc::ExtensionMismatch, "expected S-coefficients, got " + a.spec().ring.tag());
  return a;  // identity on the shared monomial basis
}

GammaElement thetaInverse(const Extension& ext, const GammaElement& a) {
  if (a.spec().ring != ext.top)
    fail(Errc::ExtensionMismatch, "expected S-coefficients, got " + a.spec().ring.tag());
  return a;
}

ThetaTable thetaTable(const Extension& ext, const FreeModuleSpec& moduleSpec,
                      std::uint32_t maxDegree) {
  FreeModuleSpec topSpec{ext.top, moduleSpec.basis};
  ThetaTable table;
  for (std::uint32_t d = 0; d <= maxDegree; ++d) {
    for (const auto& comp : weakCompositions(d, moduleSpec.basis.size())) {
      MultiIndex k = MultiIndex::fromDense(moduleSpec.basis, comp);
      table.emplace(k, GammaElement::monomial(topSpec, k, Scalar::one(ext.top)));
    }
  }
  return table;
}

namespace {

// Apply a tabulated candidate morphism S-linearly.
GammaElement applyTable(const ThetaTable& table, const GammaElement& a) {
  GammaElement out(a.spec());
  for (const auto& [k, c] : a.terms()) {
    auto it = table.find(k);
    if (it == table.end())
      fail(Errc::MalformedInput, "candidate table does not cover " + k.monomialLabel());
    out = out + it->second.scaled(c);
  }
  return out;
}

}  // namespace

bool thetaUniqueness(const Extension& ext, const FreeModuleSpec& moduleSpec,
                     const ThetaTable& candidate, std::uint64_t seed,
                     std::uint32_t randomCases) {
  std::vector<std::pair<Scalar, std::pair<ModuleVector, std::uint32_t>>> generators;
  // n = 0 pins the unit image (theta is an algebra morphism), n = 1..3 the
  // basis monomials.
  for (std::size_t i = 0; i < moduleSpec.basis.size(); ++i)
    for (std::uint32_t n = 0; n <= 3; ++n)
      generators.push_back({Scalar::one(ext.top), {ModuleVector::basisVector(moduleSpec, i), n}});
  Rng rng(mixSeed(seed, 0x7e7a));
  for (std::uint32_t c = 0; c < randomCases; ++c) {
    Scalar s = sampleRingElement(rng, ext.top);
    ModuleVector x = sampleVector(rng, moduleSpec);
    std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(3));
    generators.push_back({s, {x, n}});
  }
  for (const auto& [s, gen] : generators) {
    GammaElement pure = tensorDp(ext, s, gen.first, gen.second);
    if (applyTable(candidate, pure) != thetaForward(ext, pure)) return false;
  }
  return true;
}

bool reductionSquare(std::uint64_t modulus, const GammaElement& a, std::uint32_t m,
                     std::uint64_t termBudget) {
  if (a.spec().ring.kind() != RingKind::Integers)
    fail(Errc::UnsupportedRing, "reduction square starts from Z");
  Extension ext = makeExtension(RingDescriptor::integers(), RingDescriptor::integersMod(modulus));
  GammaElement viaZ = gammaEmbed(ext, gammaN(m, a, termBudget));
  GammaElement viaMod = gammaN(m, gammaEmbed(ext, a), termBudget);
  return viaZ == viaMod;
}

BasechangeReport verifyExtension(const Extension& ext, std::uint32_t rank, std::uint64_t seed,
                                 std::uint32_t samples) {
  std::vector<std::string> labels;
  for (std::uint32_t i = 1; i <= rank; ++i) labels.push_back("b" + std::to_string(i));
  FreeModuleSpec baseSpec{ext.base, BasisLabels(labels)};
  FreeModuleSpec topSpec{ext.top, BasisLabels(labels)};

  BasechangeReport report;
  report.extension = ext.base.tag() + "->" + ext.top.tag();
  report.samples = samples;
  report.seed = seed;

  Rng rng(mixSeed(seed, 0xbc));
  for (std::uint32_t i = 0; i < samples; ++i) {
    GammaElement a = sampleGamma(rng, topSpec, 4, 3);
    GammaElement b = sampleGamma(rng, topSpec, 4, 3);
    if (thetaForward(ext, a + b) != thetaForward(ext, a) + thetaForward(ext, b))
      ++report.additiveFail;
    if (thetaForward(ext, a * b) != thetaForward(ext, a) * thetaForward(ext, b))
      ++report.multiplicativeFail;
    if (thetaInverse(ext, thetaForward(ext, a)) != a) ++report.roundTripFail;

    // theta(s (x) x^[n]) = s (1 (x) x)^[n]: left side expands x^[n] over R
    // and embeds, right side embeds x and expands over S.
    Scalar s = sampleRingElement(rng, ext.top);
    ModuleVector x = sampleVector(rng, baseSpec);
    std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(3));
    if (thetaForward(ext, tensorDp(ext, s, x, n)) !=
        dpGenerator(n, vectorEmbed(ext, x)).scaled(s))
      ++report.generatorFormulaFail;

    // gamma commutes with coefficient embedding.
    GammaElement u = sampleAugmentation(rng, baseSpec, 4, 3);
    std::uint32_t gn = 1 + static_cast<std::uint32_t>(rng.below(3));
    if (gammaEmbed(ext, gammaN(gn, u)) != gammaN(gn, gammaEmbed(ext, u))) ++report.dpCompatFail;
  }

  if (thetaForward(ext, GammaElement::one(topSpec)) != GammaElement::one(topSpec))
    ++report.unitalFail;

  // A corrupted table must be rejected. Degree 3 covers every generator
  // the uniqueness check evaluates (n <= 3).
  ThetaTable table = thetaTable(ext, baseSpec, 3);
  if (thetaUniqueness(ext, baseSpec, table, seed)) {
    ThetaTable corrupted = table;
    MultiIndex victim = MultiIndex::single(baseSpec.basis, 0, 2);
    corrupted.at(victim) =
        corrupted.at(victim) + GammaElement::one(FreeModuleSpec{ext.top, baseSpec.basis});
    report.mutationDetected = !thetaUniqueness(ext, baseSpec, corrupted, seed);
  }
  return report;
}

}  // namespace gammaforge
