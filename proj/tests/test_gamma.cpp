#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gammaforge/dpaxioms.hpp"
#include "gammaforge/gamma.hpp"
#include "support.hpp"

using namespace gammaforge;
using namespace gammaforge::testsupport;

namespace {

const RingDescriptor kZ = RingDescriptor::integers();
const RingDescriptor kQ = RingDescriptor::rationals();

const FreeModuleSpec kRank1 = makeSpec(kZ, 1, "T");  // basis {T1}
const FreeModuleSpec kRank2 = makeSpec(kZ, 2);       // basis {b1, b2}
const FreeModuleSpec kRank3 = makeSpec(kZ, 3);

GammaElement tPow(std::uint32_t n, long coeff = 1) {
  return mono(kRank1, {{"T1", n}}, coeff);
}

}  // namespace

TEST_CASE("rank-1 multiplication table") {
  CHECK(tPow(1) * tPow(1) == tPow(2, 2));
  CHECK(tPow(2) * tPow(3) == tPow(5, 10));
  for (std::uint32_t m = 0; m <= 8; ++m)
    for (std::uint32_t n = 0; n <= 8; ++n)
      CHECK(tPow(m) * tPow(n) == mono(kRank1, {{"T1", m + n}}).natScaled(binomial(m + n, n)));
}

TEST_CASE("the product is a unital commutative ring operation") {
  GammaElement a = mono(kRank2, {{"b1", 1}}, 3) + mono(kRank2, {{"b2", 2}}, -1);
  CHECK(a * GammaElement::one(kRank2) == a);
  CHECK_THROWS_AS(a * GammaElement::one(kRank3), Error);

  for (const auto& ring : {kZ, kQ, RingDescriptor::integersMod(6)}) {
    FreeModuleSpec spec = makeSpec(ring, 3);
    Rng rng(mixSeed(kDefaultSeed, 23));
    for (int i = 0; i < 120; ++i) {
      GammaElement x = sampleGamma(rng, spec, 4, 6);
      GammaElement y = sampleGamma(rng, spec, 4, 6);
      GammaElement z = sampleGamma(rng, spec, 4, 6);
      CHECK(x * y == y * x);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
    }
  }
}

TEST_CASE("multiplication respects the grading") {
  Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    std::uint32_t d = static_cast<std::uint32_t>(rng.below(4));
    std::uint32_t e = static_cast<std::uint32_t>(rng.below(4));
    GammaElement a = sampleGamma(rng, kRank3, 3, d, d);  // homogeneous of degree d
    GammaElement b = sampleGamma(rng, kRank3, 3, e, e);
    GammaElement ab = a * b;
    CHECK(ab.gradeComponent(d + e) == ab);
  }
}

TEST_CASE("dpGenerator expands the divided power of a vector") {
  CHECK(dpGenerator(0, vec(kRank2, {{"b1", 7}})) == GammaElement::one(kRank2));
  CHECK(dpGenerator(2, vec(kRank2, {{"b1", 1}, {"b2", 1}})) ==
        mono(kRank2, {{"b1", 2}}) + mono(kRank2, {{"b1", 1}, {"b2", 1}}) +
            mono(kRank2, {{"b2", 2}}));
  CHECK(dpGenerator(3, vec(kRank2, {{"b1", 2}})) == mono(kRank2, {{"b1", 3}}, 8));
  CHECK(dpGenerator(4, ModuleVector(kRank2)).isZero());  // 0^[n] = 0 for n > 0

  Rng rng(37);
  for (int i = 0; i < 80; ++i) {
    ModuleVector x = sampleVector(rng, kRank3);
    ModuleVector y = sampleVector(rng, kRank3);
    std::uint32_t m = static_cast<std::uint32_t>(rng.below(4));
    std::uint32_t n = static_cast<std::uint32_t>(rng.below(4));

    // x^[m] x^[n] = binom(m+n, m) x^[m+n]
    CHECK(dpGenerator(m, x) * dpGenerator(n, x) ==
          dpGenerator(m + n, x).natScaled(binomial(m + n, m)));

    // (x+y)^[n] = sum_{i+j=n} x^[i] y^[j]
    GammaElement sum = GammaElement::zero(kRank3);
    for (std::uint32_t j = 0; j <= n; ++j)
      sum = sum + dpGenerator(j, x) * dpGenerator(n - j, y);
    CHECK(dpGenerator(n, x + y) == sum);

    // homogeneous of degree n
    GammaElement g = dpGenerator(n, x);
    CHECK(g.gradeComponent(n) == g);
  }
}

TEST_CASE("grade components decompose and resum") {
  GammaElement a = mono(kRank2, {}, 5) + mono(kRank2, {{"b1", 2}}, 3);
  CHECK(a.gradeComponent(0) == mono(kRank2, {}, 5));
  CHECK(a.gradeComponent(2) == mono(kRank2, {{"b1", 2}}, 3));
  CHECK(a.gradeComponent(1).isZero());
  CHECK(GammaElement::zero(kRank2).gradeDecompose().empty());

  Rng rng(41);
  for (int i = 0; i < 50; ++i) {
    GammaElement x = sampleGamma(rng, kRank3, 5, 5);
    GammaElement resum = GammaElement::zero(kRank3);
    for (const auto& [d, part] : x.gradeDecompose()) {
      CHECK(part.gradeComponent(d) == part);
      resum = resum + part;
    }
    CHECK(resum == x);
  }
}

TEST_CASE("augmentation ideal membership") {
  CHECK(mono(kRank2, {{"b1", 1}}).inAugmentationIdeal());
  CHECK(!(GammaElement::one(kRank2) + mono(kRank2, {{"b1", 1}})).inAugmentationIdeal());
  CHECK(GammaElement::zero(kRank2).inAugmentationIdeal());
}

TEST_CASE("gammaN on generators and scaled monomials") {
  CHECK(gammaN(2, mono(kRank2, {{"b1", 1}})) == mono(kRank2, {{"b1", 2}}));
  CHECK(gammaN(2, tPow(2)) == tPow(4, 3));
  CHECK(gammaN(2, mono(kRank2, {{"b1", 1}}, 2)) == mono(kRank2, {{"b1", 2}}, 4));
  CHECK(gammaN(0, GammaElement::zero(kRank2)) == GammaElement::one(kRank2));
  CHECK_THROWS_AS(gammaN(1, GammaElement::one(kRank2)), Error);

  try {
    gammaN(1, GammaElement::one(kRank2) + mono(kRank2, {{"b1", 1}}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == Errc::NotInAugmentationIdeal);
  }
}

TEST_CASE("gammaN extends dpGenerator through iota") {
  Rng rng(43);
  for (int i = 0; i < 100; ++i) {
    ModuleVector x = sampleVector(rng, kRank3);
    std::uint32_t n = static_cast<std::uint32_t>(rng.below(5));
    CHECK(gammaN(n, gradeOneIota(x)) == dpGenerator(n, x));
  }
}

TEST_CASE("x^n = n! gamma_n(x) on the augmentation ideal") {
  Rng rng(47);
  for (int i = 0; i < 100; ++i) {
    GammaElement x = sampleAugmentation(rng, kRank3);
    std::uint32_t n = static_cast<std::uint32_t>(rng.below(6));
    CHECK(x.pow(n) == gammaN(n, x).natScaled(factorial(n)));
  }
}

TEST_CASE("gammaN enforces its term budget") {
  GammaElement big = GammaElement::zero(kRank3);
  for (std::uint32_t d = 1; d <= 4; ++d)
    for (const auto& comp : weakCompositions(d, 3))
      big.accumulate(MultiIndex::fromDense(kRank3.basis, comp), Scalar::one(kZ));
  CHECK_THROWS_AS(gammaN(6, big, 100), Error);
  try {
    gammaN(6, big, 100);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == Errc::BudgetExceeded);
  }
  CHECK(gammaN(2, mono(kRank3, {{"b1", 1}}), 2) == mono(kRank3, {{"b1", 2}}));
}

TEST_CASE("mapLinear is the functorial algebra morphism") {
  FreeModuleSpec target = makeSpec(kZ, 2, "c");
  LinearMap f{kRank1.basis, target, {}};
  f.columns.emplace(0, vec(target, {{"c1", 1}, {"c2", 1}}));

  CHECK(mapLinear(f, tPow(1)) == mono(target, {{"c1", 1}}) + mono(target, {{"c2", 1}}));
  CHECK(mapLinear(f, tPow(2)) ==
        mono(target, {{"c1", 2}}) + mono(target, {{"c1", 1}, {"c2", 1}}) +
            mono(target, {{"c2", 2}}));

  Rng rng(53);
  for (int i = 0; i < 60; ++i) {
    GammaElement a = sampleGamma(rng, kRank2, 3, 3);
    GammaElement b = sampleGamma(rng, kRank2, 3, 3);
    CHECK(mapLinear(identityMap(kRank2), a) == a);

    LinearMap g1 = sampleLinearMap(rng, kRank2.basis, kRank3);
    LinearMap g2 = sampleLinearMap(rng, kRank3.basis, target);
    CHECK(mapLinear(composeLinear(g2, g1), a) == mapLinear(g2, mapLinear(g1, a)));
    CHECK(mapLinear(g1, a * b) == mapLinear(g1, a) * mapLinear(g1, b));
    CHECK(mapLinear(g1, a + b) == mapLinear(g1, a) + mapLinear(g1, b));

    // grade preserved
    std::uint32_t d = static_cast<std::uint32_t>(rng.below(4));
    GammaElement hom = sampleGamma(rng, kRank2, 3, d, d);
    GammaElement image = mapLinear(g1, hom);
    CHECK(image.gradeComponent(d) == image);
  }
}

TEST_CASE("quotient by a basis span kills touched monomials") {
  std::set<std::string> drop{"b2"};
  GammaElement a = mono(kRank2, {{"b1", 2}}) + mono(kRank2, {{"b1", 1}, {"b2", 1}});
  FreeModuleSpec reduced = quotientSpec(kRank2, drop);
  CHECK(quotientByBasisSpan(drop, a) == mono(reduced, {{"b1", 2}}));
  CHECK(quotientByBasisSpan(drop, mono(kRank2, {{"b2", 3}})).isZero());
  CHECK(quotientByBasisSpan(drop, GammaElement::one(kRank2)) == GammaElement::one(reduced));
  CHECK_THROWS_AS(quotientByBasisSpan({"b1", "b2"}, a), Error);
  CHECK_THROWS_AS(quotientByBasisSpan({"nope"}, a), Error);

  Rng rng(59);
  std::set<std::string> drop3{"b3"};
  for (int i = 0; i < 60; ++i) {
    GammaElement x = sampleGamma(rng, kRank3, 4, 3);
    GammaElement y = sampleGamma(rng, kRank3, 4, 3);
    CHECK(quotientByBasisSpan(drop3, x * y) ==
          quotientByBasisSpan(drop3, x) * quotientByBasisSpan(drop3, y));

    GammaElement u = sampleAugmentation(rng, kRank3, 4, 3);
    std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(3));
    CHECK(quotientByBasisSpan(drop3, gammaN(n, u)) ==
          gammaN(n, quotientByBasisSpan(drop3, u)));
  }
}

TEST_CASE("grade one is a linear isomorphism onto degree-1 elements") {
  CHECK(gradeOneIota(vec(kRank2, {{"b1", 1}})) == mono(kRank2, {{"b1", 1}}));
  CHECK(gradeOneIota(vec(kRank2, {{"b1", 2}, {"b2", 3}})) ==
        mono(kRank2, {{"b1", 1}}, 2) + mono(kRank2, {{"b2", 1}}, 3));
  CHECK_THROWS_AS(gradeOneInverse(mono(kRank2, {{"b1", 2}})), Error);

  Rng rng(61);
  for (int i = 0; i < 100; ++i) {
    ModuleVector x = sampleVector(rng, kRank3);
    ModuleVector y = sampleVector(rng, kRank3);
    CHECK(gradeOneInverse(gradeOneIota(x)) == x);
    CHECK(gradeOneIota(x + y) == gradeOneIota(x) + gradeOneIota(y));
    if (x != y) CHECK(gradeOneIota(x) != gradeOneIota(y));  // injective
  }
}

TEST_CASE("liftToDp realizes the weak universal property") {
  // Lifting along iota into the algebra itself is the identity.
  DpStructure<GammaElement> self = gammaAugmentation(kRank2);
  std::map<std::string, GammaElement> iotaImages{
      {"b1", mono(kRank2, {{"b1", 1}})}, {"b2", mono(kRank2, {{"b2", 1}})}};
  Rng rng(67);
  for (int i = 0; i < 40; ++i) {
    GammaElement a = sampleGamma(rng, kRank2, 4, 3);
    CHECK(liftToDp(self, iotaImages, a) == a);
  }

  // Into a Q-algebra with canonical divided powers: b1^[n] |-> q^n/n!.
  FreeModuleSpec rank1Q = makeSpec(kQ, 1, "T");
  DpStructure<Scalar> rational = rationalCanonical(kQ, {});
  Scalar q = Scalar::rational(3, 2);
  std::map<std::string, Scalar> qImage{{"T1", q}};
  for (std::uint32_t n = 0; n <= 5; ++n) {
    GammaElement gen = GammaElement::monomial(
        rank1Q, MultiIndex::single(rank1Q.basis, 0, n), Scalar::one(kQ));
    CHECK(liftToDp(rational, qImage, gen) == divByInt(q.pow(n), factorial(n)));
  }

  // liftToDp(x^[n]) = gamma_n(phi(x)) for random linear phi into Gamma(Q^3).
  FreeModuleSpec rank2Q = makeSpec(kQ, 2);
  FreeModuleSpec rank3Q = makeSpec(kQ, 3, "c");
  DpStructure<GammaElement> target = gammaAugmentation(rank3Q);
  for (int i = 0; i < 40; ++i) {
    std::map<std::string, GammaElement> images;
    GammaElement phiOfSum = GammaElement::zero(rank3Q);
    for (const auto& label : rank2Q.basis.all()) {
      GammaElement image = sampleAugmentation(rng, rank3Q, 3, 2);
      images.emplace(label, image);
      phiOfSum = phiOfSum + image;
    }
    std::uint32_t n = static_cast<std::uint32_t>(rng.below(4));
    ModuleVector ones(rank2Q);
    for (std::size_t j = 0; j < rank2Q.basis.size(); ++j)
      ones.accumulate(static_cast<std::uint32_t>(j), Scalar::one(kQ));
    CHECK(liftToDp(target, images, dpGenerator(n, ones)) == gammaN(n, phiOfSum));
  }

  // Images outside the target ideal are rejected.
  std::map<std::string, GammaElement> bad{{"b1", GammaElement::one(rank3Q)},
                                          {"b2", GammaElement::one(rank3Q)}};
  CHECK_THROWS_AS(liftToDp(target, bad, dpGenerator(1, vec(rank2Q, {{"b1", 1}}))), Error);
}
