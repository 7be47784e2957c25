// Acceptance suite: one pass/fail line per criterion, all arithmetic exact.
// Exit code 0 only if every criterion holds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gammaforge/basechange.hpp"
#include "gammaforge/dpaxioms.hpp"
#include "gammaforge/json_io.hpp"
#include "support.hpp"

using namespace gammaforge;
using namespace gammaforge::testsupport;

namespace {

const RingDescriptor kZ = RingDescriptor::integers();
const RingDescriptor kQ = RingDescriptor::rationals();

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

bool axiomSuite(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  for (const auto& ring : {kZ, kQ, RingDescriptor::integersMod(6)}) {
    for (std::uint32_t rank = 1; rank <= 3; ++rank) {
      AxiomReport report =
          checkAxioms(gammaAugmentation(makeSpec(ring, rank)), kDefaultSeed, 200, 4);
      if (!report.allPass()) {
        detail = ring.tag() + " rank " + std::to_string(rank) + " failed";
        return false;
      }
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buf[96];
  std::snprintf(buf, sizeof buf, "rings Z, Q, Z/6, ranks 1-3, 200 samples/axiom, %.1fs", secs);
  detail = buf;
  return secs <= 60.0;
}

bool derivedPowerIdentity(std::string& detail) {
  FreeModuleSpec spec = makeSpec(kZ, 3);
  Rng rng(mixSeed(kDefaultSeed, 100));
  for (int i = 0; i < 100; ++i) {
    GammaElement x = sampleAugmentation(rng, spec);
    std::uint32_t n = static_cast<std::uint32_t>(rng.below(6));
    if (x.pow(n) != gammaN(n, x).natScaled(factorial(n))) {
      detail = "counterexample at sample " + std::to_string(i);
      return false;
    }
  }
  detail = "x^n = n! gamma_n(x), n <= 5, 100 samples";
  return true;
}

bool oracleEquivalence(std::string& detail) {
  Rng rng(mixSeed(kDefaultSeed, 101));
  for (int i = 0; i < 200; ++i) {
    std::uint32_t rank = 1 + static_cast<std::uint32_t>(rng.below(3));
    FreeModuleSpec spec = makeSpec(kZ, rank);
    GammaElement a = sampleAugmentation(rng, spec);
    std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(4));
    GammaElement viaOracle(spec);
    try {
      viaOracle = gammaOracle(n, a);
    } catch (const Error& e) {
      detail = std::string("oracle integrality fired: ") + e.what();
      return false;
    }
    if (gammaN(n, a) != viaOracle) {
      detail = "mismatch at sample " + std::to_string(i);
      return false;
    }
  }
  detail = "200 integer cases, rank <= 3, n <= 4, exact";
  return true;
}

bool rankOneTable(std::string& detail) {
  FreeModuleSpec spec = makeSpec(kZ, 1, "T");
  for (std::uint32_t m = 0; m <= 8; ++m) {
    for (std::uint32_t n = 0; n <= 8; ++n) {
      GammaElement lhs = mono(spec, {{"T1", m}}) * mono(spec, {{"T1", n}});
      GammaElement rhs = mono(spec, {{"T1", m + n}}).natScaled(binomial(m + n, n));
      if (lhs != rhs) {
        detail = "fails at (" + std::to_string(m) + ", " + std::to_string(n) + ")";
        return false;
      }
    }
  }
  detail = "T^(m) T^(n) = binom(m+n, n) T^(m+n), m, n <= 8";
  return true;
}

bool gammaOnGradeOne(std::string& detail) {
  FreeModuleSpec spec = makeSpec(kZ, 3);
  Rng rng(mixSeed(kDefaultSeed, 102));
  for (int i = 0; i < 100; ++i) {
    ModuleVector x = sampleVector(rng, spec);
    ModuleVector y = sampleVector(rng, spec);
    std::uint32_t n = static_cast<std::uint32_t>(rng.below(5));
    if (gammaN(n, gradeOneIota(x)) != dpGenerator(n, x)) {
      detail = "gamma_n(iota(x)) != x^[n]";
      return false;
    }
    if (gradeOneIota(x + y) != gradeOneIota(x) + gradeOneIota(y)) {
      detail = "iota not additive";
      return false;
    }
    if (gradeOneInverse(gradeOneIota(x)) != x) {
      detail = "iota not injective";
      return false;
    }
  }
  detail = "gamma_n(iota(x)) = x^[n], iota linear and injective, 100 samples";
  return true;
}

bool baseChange(std::string& detail) {
  for (const char* tag : {"Z->Q", "Z->Z[X]", "Q->Q[X,Y]", "Z->Z/6"}) {
    BasechangeReport report = verifyExtension(parseExtensionTag(tag), 2, kDefaultSeed, 200);
    if (!report.allPass()) {
      detail = std::string(tag) + " failed";
      return false;
    }
  }
  detail = "4 extensions, 200 samples each, round trips exact, mutations detected";
  return true;
}

bool quotientKernel(std::string& detail) {
  FreeModuleSpec full = makeSpec(kZ, 3);
  std::set<std::string> drop{"b3"};
  FreeModuleSpec reduced = quotientSpec(full, drop);

  for (std::uint32_t d = 0; d <= 4; ++d) {
    for (const auto& comp : weakCompositions(d, 3)) {
      MultiIndex k = MultiIndex::fromDense(full.basis, comp);
      GammaElement image =
          quotientByBasisSpan(drop, GammaElement::monomial(full, k, Scalar::one(kZ)));
      bool touches = k.expAt(2) > 0;
      if (touches && !image.isZero()) {
        detail = "monomial touching the dropped label survived";
        return false;
      }
      if (!touches) {
        std::vector<std::uint32_t> kept{comp[0], comp[1]};
        if (image != GammaElement::monomial(reduced, MultiIndex::fromDense(reduced.basis, kept),
                                            Scalar::one(kZ))) {
          detail = "untouched monomial was not fixed";
          return false;
        }
      }
    }
  }

  DpStructure<GammaElement> quot = quotientDp(gammaAugmentation(full), full, drop);
  AxiomReport report = checkAxioms(quot, kDefaultSeed, 100, 4);
  if (!report.allPass()) {
    detail = "quotient structure failed the axiom suite";
    return false;
  }
  detail = "rank 3 minus one label: kernel exact, quotient passes axioms (100 samples)";
  return true;
}

bool lawIsomorphism(std::string& detail) {
  FreeModuleSpec source = makeSpec(kZ, 2);
  FreeModuleSpec target = makeSpec(kZ, 2, "n");
  Rng rng(mixSeed(kDefaultSeed, 103));
  std::vector<ModuleVector> standard;
  for (std::size_t i = 0; i < source.basis.size(); ++i)
    standard.push_back(ModuleVector::basisVector(source, i));
  for (int i = 0; i < 100; ++i) {
    PolyLaw f = samplePolyLaw(rng, source, target, 4, 4);
    auto table = coeffOf(f, source.basis, standard);
    if (PolyLaw::CoeffMap(f.coeffs().begin(), f.coeffs().end()) != table) {
      detail = "coefficient round-trip failed";
      return false;
    }
  }
  for (int i = 0; i < 50; ++i) {
    std::uint32_t d = static_cast<std::uint32_t>(rng.below(4));
    PolyLaw hom(source, target);
    for (const auto& comp : weakCompositions(d, 2)) {
      ModuleVector v(target);
      v.accumulate(static_cast<std::uint32_t>(rng.below(2)), sampleNonzeroCoefficient(rng, kZ));
      hom.accumulate(MultiIndex::fromDense(source.basis, comp), v);
    }
    if (!isHomogeneous(hom, d) || !extensionalScalingTest(hom, d, rng, 3)) {
      detail = "homogeneous law failed the scaling test";
      return false;
    }
  }
  for (int i = 0; i < 50; ++i) {
    std::uint32_t d = static_cast<std::uint32_t>(rng.below(3));
    PolyLaw bad(source, target);
    ModuleVector v1(target), v2(target);
    v1.accumulate(0, sampleNonzeroCoefficient(rng, kZ));
    v2.accumulate(1, sampleNonzeroCoefficient(rng, kZ));
    bad.accumulate(MultiIndex::fromExps(source.basis, {{"b1", d}}), v1);
    bad.accumulate(MultiIndex::fromExps(source.basis, {{"b2", d + 1}}), v2);
    if (isHomogeneous(bad, d) || extensionalScalingTest(bad, d, rng, 50)) {
      detail = "mixed law passed the scaling test";
      return false;
    }
  }
  detail = "round-trip on 100 laws; support <=> scaling, 50 samples each direction";
  return true;
}

bool componentDecomposition(std::string& detail) {
  FreeModuleSpec source = makeSpec(kZ, 2);
  FreeModuleSpec target = makeSpec(kZ, 2, "n");
  Rng rng(mixSeed(kDefaultSeed, 104));
  for (int i = 0; i < 100; ++i) {
    PolyLaw f = samplePolyLaw(rng, source, target, 4, 4);
    if (componentSum(f) != f) {
      detail = "components do not resum";
      return false;
    }
    for (std::uint32_t d = 0; d <= f.maxDegree(); ++d)
      if (!isHomogeneous(component(f, d), d)) {
        detail = "component not homogeneous";
        return false;
      }
  }
  detail = "sum of components = f, each homogeneous, 100 laws";
  return true;
}

bool dividedDifferentials(std::string& detail) {
  FreeModuleSpec target = makeSpec(kZ, 2, "n");
  Rng rng(mixSeed(kDefaultSeed, 105));
  for (int i = 0; i < 100; ++i) {
    std::uint32_t rank = 1 + static_cast<std::uint32_t>(rng.below(2));
    FreeModuleSpec source = makeSpec(kZ, rank);
    PolyLaw f = samplePolyLaw(rng, source, target, 4, 3);
    std::uint32_t n = static_cast<std::uint32_t>(rng.below(6));
    PolyLaw structural = dividedDifferentialStructural(n, f);
    if (structural != dividedDifferentialExtraction(n, f)) {
      detail = "routes disagree";
      return false;
    }
    if (n > f.maxDegree() && !structural.isZero()) {
      detail = "nonzero differential beyond the degree";
      return false;
    }
    if (!taylorSumCheck(f, sampleVector(rng, source), sampleVector(rng, source))) {
      detail = "Taylor sum failed";
      return false;
    }
  }
  detail = "both routes equal, vanish beyond degree, Taylor sum exact, 100 laws";
  return true;
}

bool universalFactorization(std::string& detail) {
  FreeModuleSpec source = makeSpec(kZ, 2);
  FreeModuleSpec target = makeSpec(kZ, 2, "n");
  RingDescriptor zt = RingDescriptor::poly(kZ, {"t"});
  Rng rng(mixSeed(kDefaultSeed, 106));
  for (int i = 0; i < 100; ++i) {
    std::uint32_t d = static_cast<std::uint32_t>(rng.below(4));
    PolyLaw hom(source, target);
    for (const auto& comp : weakCompositions(d, 2)) {
      ModuleVector v(target);
      for (std::size_t p = 0; p < 2; ++p)
        v.accumulate(static_cast<std::uint32_t>(p), sampleCoefficient(rng, kZ));
      hom.accumulate(MultiIndex::fromDense(source.basis, comp), v);
    }
    LinearMap phi = factorHomogeneous(hom, d);
    PolyLaw delta = deltaLaw(source, d);

    ModuleVector x = sampleVector(rng, source);
    if (phi.apply(evalAt(delta, kZ, x)) != evalAt(hom, kZ, x)) {
      detail = "f != phi . delta over R";
      return false;
    }
    ModuleVector xt(FreeModuleSpec{zt, source.basis});
    for (std::size_t p = 0; p < 2; ++p)
      xt.accumulate(static_cast<std::uint32_t>(p), samplePolyScalar(rng, zt, 2, 2));
    if (phi.apply(evalAt(delta, zt, xt)) != evalAt(hom, zt, xt)) {
      detail = "f != phi . delta over R[t]";
      return false;
    }

    // uniqueness: phi is pinned on the monomial basis
    FreeModuleSpec slice = gradeSliceSpec(source, d);
    for (const auto& comp : weakCompositions(d, 2)) {
      MultiIndex k = MultiIndex::fromDense(source.basis, comp);
      std::uint32_t pos = static_cast<std::uint32_t>(slice.basis.indexOf(k.monomialLabel()));
      ModuleVector column =
          phi.columns.count(pos) ? phi.columns.at(pos) : ModuleVector(target);
      if (column != hom.coeffAt(k)) {
        detail = "phi disagrees with the coefficient table";
        return false;
      }
    }
  }
  detail = "reconstruction over R and R[t], uniqueness on the basis, 100 laws";
  return true;
}

bool mutationSensitivity(std::string& detail) {
  for (DpMutation m : kAllMutations) {
    DpStructure<GammaElement> dp = corruptDp(gammaAugmentation(makeSpec(kZ, 2)), m);
    if (checkAxioms(dp, kDefaultSeed, 200, 4).allPass()) {
      detail = "axiom corruption " + std::to_string(static_cast<int>(m)) + " not caught";
      return false;
    }
  }
  Extension ext = parseExtensionTag("Z->Q");
  FreeModuleSpec spec = makeSpec(kZ, 2);
  ThetaTable corrupted = thetaTable(ext, spec, 3);
  MultiIndex victim = MultiIndex::single(spec.basis, 0, 2);
  corrupted.at(victim) = corrupted.at(victim).natScaled(2);
  if (thetaUniqueness(ext, spec, corrupted)) {
    detail = "theta corruption not caught";
    return false;
  }
  detail = "7 axiom corruptions + 1 theta corruption all caught within 200 samples";
  return true;
}

bool padicBound(std::string& detail) {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
    for (std::uint64_t n = 0; n <= 200; ++n) {
      if (padicValFactorial(p, n) > n) {
        detail = "bound violated at p=" + std::to_string(p) + ", n=" + std::to_string(n);
        return false;
      }
    }
  }
  detail = "v_p(n!) <= n for n <= 200, p in {2,3,5,7}";
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"divided-power-axiom-suite", axiomSuite},
      {"derived-identity-x^n=n!gamma_n", derivedPowerIdentity},
      {"oracle-equivalence", oracleEquivalence},
      {"rank-1-multiplication-table", rankOneTable},
      {"gamma-on-grade-one", gammaOnGradeOne},
      {"base-change-isomorphism", baseChange},
      {"quotient-kernel", quotientKernel},
      {"polynomial-law-isomorphism", lawIsomorphism},
      {"component-decomposition", componentDecomposition},
      {"divided-differentials", dividedDifferentials},
      {"universal-factorization", universalFactorization},
      {"mutation-sensitivity", mutationSensitivity},
      {"p-adic-valuation-bound", padicBound},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %-34s %s\n", ok ? "PASS" : "FAIL", c.name.c_str(), detail.c_str());
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
