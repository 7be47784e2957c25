#include "gammaforge/gamma.hpp"

#include <algorithm>

namespace gammaforge {

bool operator==(const FreeModuleSpec& a, const FreeModuleSpec& b) {
  return a.ring == b.ring && a.basis == b.basis;
}

void requireSameSpec(const FreeModuleSpec& a, const FreeModuleSpec& b) {
  if (a != b) fail(Errc::SpecMismatch, "operands live over different module specs");
}

// --- ModuleVector -----------------------------------------------------------

Scalar ModuleVector::coordAt(std::uint32_t pos) const {
  auto it = coords_.find(pos);
  return it == coords_.end() ? Scalar::zero(spec_.ring) : it->second;
}

void ModuleVector::accumulate(std::uint32_t pos, const Scalar& value) {
  if (value.ring() != spec_.ring) fail(Errc::RingMismatch, "coordinate outside the module's ring");
  auto it = coords_.find(pos);
  if (it == coords_.end()) {
    if (!value.isZero()) coords_.emplace(pos, value);
    return;
  }
  it->second = it->second + value;
  if (it->second.isZero()) coords_.erase(it);
}

ModuleVector ModuleVector::basisVector(const FreeModuleSpec& spec, std::size_t pos) {
  ModuleVector v(spec);
  v.accumulate(static_cast<std::uint32_t>(pos), Scalar::one(spec.ring));
  return v;
}

ModuleVector ModuleVector::operator+(const ModuleVector& o) const {
  requireSameSpec(spec_, o.spec_);
  ModuleVector out = *this;
  for (const auto& [pos, c] : o.coords_) out.accumulate(pos, c);
  return out;
}

ModuleVector ModuleVector::operator-() const {
  ModuleVector out(spec_);
  for (const auto& [pos, c] : coords_) out.accumulate(pos, -c);
  return out;
}

ModuleVector ModuleVector::scaled(const Scalar& r) const {
  ModuleVector out(spec_);
  for (const auto& [pos, c] : coords_) out.accumulate(pos, r * c);
  return out;
}

// --- GammaElement -----------------------------------------------------------

GammaElement GammaElement::one(const FreeModuleSpec& spec) {
  return monomial(spec, MultiIndex(spec.basis), Scalar::one(spec.ring));
}

GammaElement GammaElement::monomial(const FreeModuleSpec& spec, const MultiIndex& index,
                                    const Scalar& coeff) {
  GammaElement e(spec);
  e.accumulate(index, coeff);
  return e;
}

Scalar GammaElement::coeffAt(const MultiIndex& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Scalar::zero(spec_.ring) : it->second;
}

void GammaElement::accumulate(const MultiIndex& index, const Scalar& coeff) {
  requireSameBasis(index.basis(), spec_.basis);
  if (coeff.ring() != spec_.ring) fail(Errc::RingMismatch, "coefficient outside the algebra's ring");
  auto it = terms_.find(index);
  if (it == terms_.end()) {
    if (!coeff.isZero()) terms_.emplace(index, coeff);
    return;
  }
  it->second = it->second + coeff;
  if (it->second.isZero()) terms_.erase(it);
}

GammaElement GammaElement::operator+(const GammaElement& o) const {
  requireSameSpec(spec_, o.spec_);
  GammaElement out = *this;
  for (const auto& [k, c] : o.terms_) out.accumulate(k, c);
  return out;
}

GammaElement GammaElement::operator-() const {
  GammaElement out(spec_);
  for (const auto& [k, c] : terms_) out.accumulate(k, -c);
  return out;
}

GammaElement GammaElement::operator*(const GammaElement& o) const {
  requireSameSpec(spec_, o.spec_);
  GammaElement out(spec_);
  for (const auto& [j, cj] : terms_) {
    for (const auto& [k, ck] : o.terms_) {
      Scalar c = cj * ck;
      Int binom = miBinomialProduct(j, k);
      if (binom != 1) c = c * Scalar::fromInt(spec_.ring, binom);
      out.accumulate(miAdd(j, k), c);
    }
  }
  return out;
}

GammaElement GammaElement::scaled(const Scalar& r) const {
  GammaElement out(spec_);
  for (const auto& [k, c] : terms_) out.accumulate(k, r * c);
  return out;
}

GammaElement GammaElement::natScaled(const Int& n) const {
  return scaled(Scalar::fromInt(spec_.ring, n));
}

GammaElement GammaElement::pow(std::uint32_t n) const {
  GammaElement result = one(spec_);
  GammaElement b = *this;
  while (n) {
    if (n & 1) result = result * b;
    if (n >>= 1) b = b * b;
  }
  return result;
}

GammaElement GammaElement::gradeComponent(std::uint32_t d) const {
  GammaElement out(spec_);
  for (const auto& [k, c] : terms_)
    if (k.degree() == d) out.accumulate(k, c);
  return out;
}

std::map<std::uint32_t, GammaElement> GammaElement::gradeDecompose() const {
  std::map<std::uint32_t, GammaElement> out;
  for (const auto& [k, c] : terms_) {
    auto [it, inserted] = out.try_emplace(k.degree(), spec_);
    it->second.accumulate(k, c);
  }
  return out;
}

std::uint32_t GammaElement::maxGrade() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

bool GammaElement::inAugmentationIdeal() const {
  return terms_.empty() || terms_.begin()->first.degree() > 0;
}

// --- divided power operations ------------------------------------------------

GammaElement dpGenerator(std::uint32_t n, const ModuleVector& x) {
  FreeModuleSpec spec = x.spec();
  if (n == 0) return GammaElement::one(spec);
  GammaElement out(spec);
  std::vector<std::uint32_t> supp;
  std::vector<Scalar> coord;
  for (const auto& [pos, c] : x.coords()) {
    supp.push_back(pos);
    coord.push_back(c);
  }
  for (const auto& comp : weakCompositions(n, supp.size())) {
    Scalar c = Scalar::one(spec.ring);
    std::vector<std::uint32_t> denseK(spec.basis.size(), 0);
    for (std::size_t i = 0; i < supp.size(); ++i) {
      if (comp[i] == 0) continue;
      c = c * coord[i].pow(comp[i]);
      denseK[supp[i]] = comp[i];
    }
    out.accumulate(MultiIndex::fromDense(spec.basis, denseK), c);
  }
  return out;
}

GammaElement gammaN(std::uint32_t n, const GammaElement& a, std::uint64_t termBudget) {
  FreeModuleSpec spec = a.spec();
  if (n == 0) return GammaElement::one(spec);
  if (!a.inAugmentationIdeal())
    fail(Errc::NotInAugmentationIdeal, "gamma_n with n >= 1 needs a zero grade-0 part");
  if (weakCompositionCount(n, a.terms().size()) > Int(termBudget))
    fail(Errc::BudgetExceeded, "gamma_" + std::to_string(n) + " over a support of " +
                                   std::to_string(a.terms().size()) + " monomials");

  std::vector<const MultiIndex*> keys;
  std::vector<const Scalar*> coeffs;
  for (const auto& [k, c] : a.terms()) {
    keys.push_back(&k);
    coeffs.push_back(&c);
  }

  GammaElement out(spec);
  for (const auto& comp : weakCompositions(n, keys.size())) {
    // One basis monomial per composition: every factor
    // gamma_{e}(r b^[k]) = r^e dpCoeffMulti(e,k) b^[e*k] is a monomial.
    Scalar c = Scalar::one(spec.ring);
    MultiIndex k(spec.basis);
    for (std::size_t i = 0; i < keys.size(); ++i) {
      std::uint32_t e = comp[i];
      if (e == 0) continue;
      Scalar factorCoeff = coeffs[i]->pow(e) * Scalar::fromInt(spec.ring, dpCoeffMulti(e, *keys[i]));
      MultiIndex factorIndex = miScale(e, *keys[i]);
      c = c * factorCoeff * Scalar::fromInt(spec.ring, miBinomialProduct(k, factorIndex));
      k = miAdd(k, factorIndex);
    }
    out.accumulate(k, c);
  }
  return out;
}

// --- functoriality -----------------------------------------------------------

ModuleVector LinearMap::apply(const ModuleVector& x) const {
  if (x.spec().basis != source) fail(Errc::SpecMismatch, "vector not over the map's source basis");
  FreeModuleSpec outSpec{x.spec().ring, target.basis};
  ModuleVector out(outSpec);
  for (const auto& [pos, c] : x.coords()) {
    auto col = columns.find(pos);
    if (col == columns.end()) continue;
    for (const auto& [tpos, entry] : col->second.coords())
      out.accumulate(tpos, c * scalarEmbed(entry, x.spec().ring));
  }
  return out;
}

LinearMap identityMap(const FreeModuleSpec& spec) {
  LinearMap f{spec.basis, spec, {}};
  for (std::size_t i = 0; i < spec.basis.size(); ++i)
    f.columns.emplace(static_cast<std::uint32_t>(i), ModuleVector::basisVector(spec, i));
  return f;
}

LinearMap composeLinear(const LinearMap& g, const LinearMap& f) {
  if (f.target.basis != g.source) fail(Errc::SpecMismatch, "maps do not compose");
  LinearMap out{f.source, g.target, {}};
  for (const auto& [pos, col] : f.columns) out.columns.emplace(pos, g.apply(col));
  return out;
}

GammaElement mapLinear(const LinearMap& f, const GammaElement& a) {
  if (a.spec().basis != f.source) fail(Errc::SpecMismatch, "element not over the map's source basis");
  if (f.target.ring != a.spec().ring) fail(Errc::SpecMismatch, "map target ring differs");
  FreeModuleSpec outSpec = f.target;
  GammaElement out(outSpec);
  for (const auto& [k, c] : a.terms()) {
    GammaElement image = GammaElement::one(outSpec);
    for (const auto& [pos, e] : k.entries()) {
      auto col = f.columns.find(pos);
      ModuleVector fx = col == f.columns.end() ? ModuleVector(outSpec) : col->second;
      image = image * dpGenerator(e, fx);
    }
    out = out + image.scaled(c);
  }
  return out;
}

// --- quotients ----------------------------------------------------------------

FreeModuleSpec quotientSpec(const FreeModuleSpec& spec, const std::set<std::string>& drop) {
  for (const auto& l : drop)
    if (!spec.basis.contains(l)) fail(Errc::BasisMismatch, "dropped label " + l + " not in basis");
  std::vector<std::string> kept;
  for (const auto& l : spec.basis.all())
    if (!drop.count(l)) kept.push_back(l);
  if (kept.empty()) fail(Errc::EmptyQuotientBasis, "cannot drop the whole basis");
  return FreeModuleSpec{spec.ring, BasisLabels(kept)};
}

GammaElement quotientByBasisSpan(const std::set<std::string>& drop, const GammaElement& a) {
  FreeModuleSpec reduced = quotientSpec(a.spec(), drop);
  GammaElement out(reduced);
  for (const auto& [k, c] : a.terms()) {
    bool touchesDropped = false;
    std::vector<std::uint32_t> exps(reduced.basis.size(), 0);
    for (const auto& [pos, e] : k.entries()) {
      const std::string& label = a.spec().basis.at(pos);
      if (drop.count(label)) {
        touchesDropped = true;
        break;
      }
      exps[reduced.basis.indexOf(label)] = e;
    }
    if (!touchesDropped) out.accumulate(MultiIndex::fromDense(reduced.basis, exps), c);
  }
  return out;
}

GammaElement includeFromQuotient(const FreeModuleSpec& fullSpec, const GammaElement& reduced) {
  if (fullSpec.ring != reduced.spec().ring) fail(Errc::SpecMismatch, "ring mismatch in section");
  GammaElement out(fullSpec);
  for (const auto& [k, c] : reduced.terms()) {
    std::vector<std::uint32_t> exps(fullSpec.basis.size(), 0);
    for (const auto& [pos, e] : k.entries())
      exps[fullSpec.basis.indexOf(reduced.spec().basis.at(pos))] = e;
    out.accumulate(MultiIndex::fromDense(fullSpec.basis, exps), c);
  }
  return out;
}

// --- grade one ------------------------------------------------------------------

GammaElement gradeOneIota(const ModuleVector& x) { return dpGenerator(1, x); }

ModuleVector gradeOneInverse(const GammaElement& a) {
  ModuleVector out(a.spec());
  for (const auto& [k, c] : a.terms()) {
    if (k.degree() != 1) fail(Errc::NotDegreeOne, "element has a term of degree " +
                                                      std::to_string(k.degree()));
    out.accumulate(k.entries().begin()->first, c);
  }
  return out;
}

}  // namespace gammaforge
