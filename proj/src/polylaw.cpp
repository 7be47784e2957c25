#include "gammaforge/polylaw.hpp"

#include <algorithm>
#include <functional>

namespace gammaforge {

PolyLaw::PolyLaw(FreeModuleSpec source, FreeModuleSpec target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (source_.ring != target_.ring)
    fail(Errc::SpecMismatch, "a polynomial law needs one ring on both sides");
}

std::uint32_t PolyLaw::maxDegree() const {
  return coeffs_.empty() ? 0 : coeffs_.rbegin()->first.degree();
}

ModuleVector PolyLaw::coeffAt(const MultiIndex& k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? ModuleVector(target_) : it->second;
}

void PolyLaw::accumulate(const MultiIndex& index, const ModuleVector& value) {
  requireSameBasis(index.basis(), source_.basis);
  requireSameSpec(value.spec(), target_);
  auto it = coeffs_.find(index);
  if (it == coeffs_.end()) {
    if (!value.isZero()) coeffs_.emplace(index, value);
    return;
  }
  it->second = it->second + value;
  if (it->second.isZero()) coeffs_.erase(it);
}

PolyLaw PolyLaw::operator+(const PolyLaw& o) const {
  requireSameSpec(source_, o.source_);
  requireSameSpec(target_, o.target_);
  PolyLaw out = *this;
  for (const auto& [k, v] : o.coeffs_) out.accumulate(k, v);
  return out;
}

PolyLaw PolyLaw::scaled(const Scalar& r) const {
  PolyLaw out(source_, target_);
  for (const auto& [k, v] : coeffs_) out.accumulate(k, v.scaled(r));
  return out;
}

// --- evaluation ---------------------------------------------------------------

ModuleVector evalAt(const PolyLaw& f, const RingDescriptor& algebra, const ModuleVector& point) {
  if (point.spec().ring != algebra)
    fail(Errc::AlgebraMismatch, "point coordinates are not in " + algebra.tag());
  if (point.spec().basis != f.source().basis)
    fail(Errc::AlgebraMismatch, "point is not on the law's source basis");
  if (!embeddable(f.source().ring, algebra))
    fail(Errc::AlgebraMismatch, "no embedding of " + f.source().ring.tag() + " into " +
                                    algebra.tag());
  ModuleVector out(FreeModuleSpec{algebra, f.target().basis});
  for (const auto& [k, vec] : f.coeffs()) {
    Scalar mono = Scalar::one(algebra);
    bool vanishes = false;
    for (const auto& [pos, e] : k.entries()) {
      Scalar c = point.coordAt(pos);
      if (c.isZero()) {
        vanishes = true;
        break;
      }
      mono = mono * c.pow(e);
    }
    if (vanishes) continue;
    for (const auto& [tpos, c] : vec.coords()) out.accumulate(tpos, mono * scalarEmbed(c, algebra));
  }
  return out;
}

// --- variable bookkeeping for symbolic evaluation -------------------------------

namespace {

struct AdjoinInfo {
  RingDescriptor ext;
  std::vector<std::string> names;    // actual (freshened) names, in stem order
  std::vector<std::size_t> newPos;   // their positions in ext
  std::vector<std::size_t> oldPos;   // positions of the original vars in ext
};

AdjoinInfo adjoinTracked(const RingDescriptor& ring, const std::vector<std::string>& stems) {
  std::vector<std::string> names = freshVarNames(ring, stems);
  AdjoinInfo info{adjoinVars(ring, names), std::move(names), {}, {}};
  for (const auto& n : info.names) info.newPos.push_back(info.ext.varIndex(n));
  if (ring.isPoly())
    for (const auto& v : ring.vars()) info.oldPos.push_back(info.ext.varIndex(v));
  return info;
}

// Decomposes an element of the extended ring along the adjoined variables:
// exponent vector over the new vars -> residual scalar over the original ring.
std::map<std::vector<std::uint32_t>, Scalar> splitByNewVars(const Scalar& s,
                                                            const AdjoinInfo& info,
                                                            const RingDescriptor& orig) {
  std::map<std::vector<std::uint32_t>, Scalar> out;
  for (const auto& term : s.asPoly()) {
    std::vector<std::uint32_t> newExps(info.newPos.size(), 0);
    for (std::size_t i = 0; i < info.newPos.size(); ++i) newExps[i] = term.exps[info.newPos[i]];
    Scalar resid = term.coeff;
    if (orig.isPoly()) {
      std::vector<std::uint32_t> oldExps(info.oldPos.size(), 0);
      for (std::size_t i = 0; i < info.oldPos.size(); ++i) oldExps[i] = term.exps[info.oldPos[i]];
      Scalar::PolyTerms t;
      t.push_back({std::move(oldExps), term.coeff});
      resid = Scalar::fromPolyTerms(orig, std::move(t));
    }
    auto it = out.find(newExps);
    if (it == out.end())
      out.emplace(std::move(newExps), std::move(resid));
    else
      it->second = it->second + resid;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.isZero() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

PolyLaw::CoeffMap coeffOf(const PolyLaw& f, const BasisLabels& familyLabels,
                          const std::vector<ModuleVector>& family) {
  if (family.size() != familyLabels.size())
    fail(Errc::MalformedInput, "family size does not match its label set");
  const RingDescriptor& base = f.source().ring;
  AdjoinInfo info = adjoinTracked(base, familyLabels.all());

  ModuleVector point(FreeModuleSpec{info.ext, f.source().basis});
  for (std::size_t i = 0; i < family.size(); ++i) {
    requireSameSpec(family[i].spec(), f.source());
    Scalar ti = Scalar::variable(info.ext, info.names[i]);
    for (const auto& [pos, c] : family[i].coords())
      point.accumulate(pos, ti * scalarEmbed(c, info.ext));
  }
  ModuleVector image = evalAt(f, info.ext, point);

  PolyLaw::CoeffMap out;
  for (const auto& [tpos, s] : image.coords()) {
    for (const auto& [exps, resid] : splitByNewVars(s, info, base)) {
      MultiIndex a = MultiIndex::fromDense(familyLabels, exps);
      auto [it, inserted] = out.try_emplace(a, ModuleVector(f.target()));
      it->second.accumulate(tpos, resid);
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.isZero() ? out.erase(it) : std::next(it);
  return out;
}

// --- homogeneity and components ---------------------------------------------------

bool isHomogeneous(const PolyLaw& f, std::uint32_t d) {
  for (const auto& [k, v] : f.coeffs())
    if (k.degree() != d) return false;
  return true;
}

std::optional<std::uint32_t> homogeneousDegree(const PolyLaw& f) {
  if (f.isZero()) return 0;
  std::uint32_t d = f.coeffs().begin()->first.degree();
  return isHomogeneous(f, d) ? std::optional<std::uint32_t>(d) : std::nullopt;
}

PolyLaw component(const PolyLaw& f, std::uint32_t d) {
  PolyLaw out(f.source(), f.target());
  for (const auto& [k, v] : f.coeffs())
    if (k.degree() == d) out.accumulate(k, v);
  return out;
}

PolyLaw componentSum(const PolyLaw& f) {
  PolyLaw out(f.source(), f.target());
  for (std::uint32_t d = 0; d <= f.maxDegree(); ++d) out = out + component(f, d);
  return out;
}

namespace {

// part index per basis position; PartitionInvalid unless each position is
// covered exactly once.
std::vector<std::size_t> partitionIndex(const BasisLabels& basis, const BasisPartition& p) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(basis.size(), kUnset);
  for (std::size_t part = 0; part < p.parts.size(); ++part) {
    for (const auto& label : p.parts[part]) {
      if (!basis.contains(label))
        fail(Errc::PartitionInvalid, "label " + label + " not in the source basis");
      std::size_t pos = basis.indexOf(label);
      if (owner[pos] != kUnset) fail(Errc::PartitionInvalid, "label " + label + " listed twice");
      owner[pos] = part;
    }
  }
  for (std::size_t pos = 0; pos < owner.size(); ++pos)
    if (owner[pos] == kUnset)
      fail(Errc::PartitionInvalid, "label " + basis.at(pos) + " missing from the partition");
  return owner;
}

}  // namespace

PolyLaw multiComponent(const PolyLaw& f, const BasisPartition& partition,
                       const std::vector<std::uint32_t>& degrees) {
  if (degrees.size() != partition.parts.size())
    fail(Errc::PartitionInvalid, "one degree per factor required");
  std::vector<std::size_t> owner = partitionIndex(f.source().basis, partition);
  PolyLaw out(f.source(), f.target());
  for (const auto& [k, v] : f.coeffs()) {
    std::vector<std::uint32_t> perFactor(partition.parts.size(), 0);
    for (const auto& [pos, e] : k.entries()) perFactor[owner[pos]] += e;
    if (perFactor == degrees) out.accumulate(k, v);
  }
  return out;
}

PolyLaw biComponent(const PolyLaw& f, const std::vector<std::string>& part1,
                    const std::vector<std::string>& part2, std::uint32_t p, std::uint32_t n) {
  return multiComponent(f, BasisPartition{{part1, part2}}, {p, n});
}

// --- divided differentials -----------------------------------------------------------

FreeModuleSpec doubledSpec(const FreeModuleSpec& spec) {
  std::vector<std::string> labels;
  for (const auto& l : spec.basis.all()) labels.push_back(l + ".1");
  for (const auto& l : spec.basis.all()) labels.push_back(l + ".2");
  return FreeModuleSpec{spec.ring, BasisLabels(labels)};
}

std::vector<std::string> doubledPart(const FreeModuleSpec& spec, int factor) {
  std::vector<std::string> labels;
  for (const auto& l : spec.basis.all()) labels.push_back(l + (factor == 1 ? ".1" : ".2"));
  return labels;
}

PolyLaw precomposeAddition(const PolyLaw& f) {
  FreeModuleSpec doubled = doubledSpec(f.source());
  std::size_t rank = f.source().basis.size();
  PolyLaw out(doubled, f.target());

  for (const auto& [k, vec] : f.coeffs()) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> entries(k.entries().begin(),
                                                                 k.entries().end());
    // Split each exponent k_i between the two copies; the split (j, k-j)
    // carries prod_i binomial(k_i, j_i), from expanding (z_i + z'_i)^(k_i).
    std::vector<std::uint32_t> firstCopy(entries.size(), 0);
    std::function<void(std::size_t, Int)> walk = [&](std::size_t at, Int binomProd) {
      if (at == entries.size()) {
        std::vector<std::uint32_t> exps(2 * rank, 0);
        for (std::size_t i = 0; i < entries.size(); ++i) {
          exps[entries[i].first] = firstCopy[i];
          exps[rank + entries[i].first] = entries[i].second - firstCopy[i];
        }
        out.accumulate(MultiIndex::fromDense(doubled.basis, exps),
                       vec.scaled(Scalar::fromInt(f.source().ring, binomProd)));
        return;
      }
      for (std::uint32_t j = 0; j <= entries[at].second; ++j) {
        firstCopy[at] = j;
        walk(at + 1, binomProd * binomial(entries[at].second, j));
      }
    };
    walk(0, Int(1));
  }
  return out;
}

PolyLaw dividedDifferentialStructural(std::uint32_t n, const PolyLaw& f) {
  PolyLaw pi2 = precomposeAddition(f);
  std::vector<std::string> part1 = doubledPart(f.source(), 1);
  std::vector<std::string> part2 = doubledPart(f.source(), 2);
  PolyLaw out(pi2.source(), pi2.target());
  for (std::uint32_t p = 0; p <= f.maxDegree(); ++p)
    out = out + biComponent(pi2, part1, part2, p, n);
  return out;
}

PolyLaw dividedDifferentialExtraction(std::uint32_t n, const PolyLaw& f) {
  const RingDescriptor& base = f.source().ring;
  std::size_t rank = f.source().basis.size();

  // Symbolic coordinates: f(z T1 + z' T2) over R[T1, T2, z..., z'...].
  std::vector<std::string> stems = {"T1", "T2"};
  for (const auto& l : f.source().basis.all()) stems.push_back("z1." + l);
  for (const auto& l : f.source().basis.all()) stems.push_back("z2." + l);
  AdjoinInfo info = adjoinTracked(base, stems);

  Scalar t1 = Scalar::variable(info.ext, info.names[0]);
  Scalar t2 = Scalar::variable(info.ext, info.names[1]);
  ModuleVector point(FreeModuleSpec{info.ext, f.source().basis});
  for (std::size_t i = 0; i < rank; ++i) {
    Scalar z1 = Scalar::variable(info.ext, info.names[2 + i]);
    Scalar z2 = Scalar::variable(info.ext, info.names[2 + rank + i]);
    point.accumulate(static_cast<std::uint32_t>(i), z1 * t1 + z2 * t2);
  }
  ModuleVector image = evalAt(f, info.ext, point);

  FreeModuleSpec doubled = doubledSpec(f.source());
  PolyLaw out(doubled, f.target());
  for (const auto& [tpos, s] : image.coords()) {
    for (const auto& [exps, resid] : splitByNewVars(s, info, base)) {
      if (exps[1] != n) continue;  // keep degree n in T2 only
      std::vector<std::uint32_t> idx(2 * rank, 0);
      for (std::size_t i = 0; i < rank; ++i) {
        idx[i] = exps[2 + i];
        idx[rank + i] = exps[2 + rank + i];
      }
      ModuleVector unit(f.target());
      unit.accumulate(tpos, resid);
      out.accumulate(MultiIndex::fromDense(doubled.basis, idx), unit);
    }
  }
  return out;
}

bool taylorSumCheck(const PolyLaw& f, const ModuleVector& z, const ModuleVector& zp) {
  requireSameSpec(z.spec(), f.source());
  requireSameSpec(zp.spec(), f.source());
  const RingDescriptor& ring = f.source().ring;
  ModuleVector lhs = evalAt(f, ring, z + zp);

  FreeModuleSpec doubled = doubledSpec(f.source());
  ModuleVector pair(doubled);
  std::size_t rank = f.source().basis.size();
  for (const auto& [pos, c] : z.coords()) pair.accumulate(pos, c);
  for (const auto& [pos, c] : zp.coords())
    pair.accumulate(static_cast<std::uint32_t>(rank + pos), c);

  ModuleVector rhs(FreeModuleSpec{ring, f.target().basis});
  for (std::uint32_t n = 0; n <= f.maxDegree(); ++n)
    rhs = rhs + evalAt(dividedDifferential(n, f), ring, pair);
  return lhs == rhs;
}

// --- the universal homogeneous law ---------------------------------------------------

FreeModuleSpec gradeSliceSpec(const FreeModuleSpec& spec, std::uint32_t d) {
  std::vector<std::string> labels;
  for (const auto& comp : weakCompositions(d, spec.basis.size()))
    labels.push_back(MultiIndex::fromDense(spec.basis, comp).monomialLabel());
  return FreeModuleSpec{spec.ring, BasisLabels(labels)};
}

ModuleVector gradeSliceCoords(const GammaElement& a, std::uint32_t d) {
  FreeModuleSpec slice = gradeSliceSpec(a.spec(), d);
  ModuleVector out(slice);
  for (const auto& [k, c] : a.terms())
    if (k.degree() == d)
      out.accumulate(static_cast<std::uint32_t>(slice.basis.indexOf(k.monomialLabel())), c);
  return out;
}

PolyLaw deltaLaw(const FreeModuleSpec& spec, std::uint32_t d) {
  FreeModuleSpec slice = gradeSliceSpec(spec, d);
  PolyLaw out(spec, slice);
  std::uint32_t position = 0;
  for (const auto& comp : weakCompositions(d, spec.basis.size())) {
    out.accumulate(MultiIndex::fromDense(spec.basis, comp),
                   ModuleVector::basisVector(slice, position));
    ++position;
  }
  return out;
}

LinearMap factorHomogeneous(const PolyLaw& f, std::uint32_t d) {
  if (!isHomogeneous(f, d))
    fail(Errc::NotHomogeneous, "law has support outside degree " + std::to_string(d));
  FreeModuleSpec slice = gradeSliceSpec(f.source(), d);
  LinearMap phi{slice.basis, f.target(), {}};
  std::uint32_t position = 0;
  for (const auto& comp : weakCompositions(d, f.source().basis.size())) {
    ModuleVector column = f.coeffAt(MultiIndex::fromDense(f.source().basis, comp));
    if (!column.isZero()) phi.columns.emplace(position, column);
    ++position;
  }
  return phi;
}

// --- test-algebra morphisms -----------------------------------------------------------

TestAlgebraHom::TestAlgebraHom(RingDescriptor dom, RingDescriptor cod,
                               std::map<std::string, Scalar> varImages)
    : dom_(std::move(dom)), cod_(std::move(cod)), varImages_(std::move(varImages)) {
  if (dom_.scalarRing() != cod_.scalarRing())
    fail(Errc::AlgebraMismatch, "test-algebra morphisms fix the base ring");
  for (const auto& [var, image] : varImages_) {
    if (!dom_.hasVar(var)) fail(Errc::AlgebraMismatch, "no variable " + var + " in " + dom_.tag());
    if (image.ring() != cod_) fail(Errc::AlgebraMismatch, "image of " + var + " not in " + cod_.tag());
  }
  if (dom_.isPoly()) {
    for (const auto& var : dom_.vars())
      if (!varImages_.count(var) && !cod_.hasVar(var))
        fail(Errc::AlgebraMismatch, "variable " + var + " has no image in " + cod_.tag());
  }
}

Scalar TestAlgebraHom::apply(const Scalar& a) const {
  if (a.ring() != dom_) fail(Errc::AlgebraMismatch, "element not in " + dom_.tag());
  if (!dom_.isPoly()) return scalarEmbed(a, cod_);
  Scalar out = Scalar::zero(cod_);
  for (const auto& term : a.asPoly()) {
    Scalar value = scalarEmbed(term.coeff, cod_);
    for (std::size_t i = 0; i < term.exps.size(); ++i) {
      if (term.exps[i] == 0) continue;
      const std::string& var = dom_.vars()[i];
      auto it = varImages_.find(var);
      Scalar image = it != varImages_.end() ? it->second : Scalar::variable(cod_, var);
      value = value * image.pow(term.exps[i]);
    }
    out = out + value;
  }
  return out;
}

ModuleVector TestAlgebraHom::apply(const ModuleVector& v) const {
  ModuleVector out(FreeModuleSpec{cod_, v.spec().basis});
  for (const auto& [pos, c] : v.coords()) out.accumulate(pos, apply(c));
  return out;
}

bool compatCheck(const PolyLaw& f, const TestAlgebraHom& hom, const ModuleVector& point) {
  ModuleVector lhs = hom.apply(evalAt(f, hom.dom(), point));
  ModuleVector rhs = evalAt(f, hom.cod(), hom.apply(point));
  return lhs == rhs;
}

// --- degree-one laws --------------------------------------------------------------------

PolyLaw ofLinearMap(const LinearMap& f) {
  FreeModuleSpec source{f.target.ring, f.source};
  PolyLaw out(source, f.target);
  for (const auto& [pos, column] : f.columns)
    out.accumulate(MultiIndex::single(source.basis, pos, 1), column);
  return out;
}

LinearMap toLinearMap(const PolyLaw& f) {
  LinearMap out{f.source().basis, f.target(), {}};
  for (const auto& [k, vec] : f.coeffs()) {
    if (k.degree() != 1)
      fail(Errc::NotDegreeOne, "law is not the law of a linear map");
    out.columns.emplace(k.entries().begin()->first, vec);
  }
  return out;
}

}  // namespace gammaforge
