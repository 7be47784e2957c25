#ifndef GAMMAFORGE_POLYLAW_HPP
#define GAMMAFORGE_POLYLAW_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gammaforge/gamma.hpp"
#include "gammaforge/multiindex.hpp"

namespace gammaforge {

// A polynomial law between free modules over the same ring, stored by its
// coefficient table: a finitely supported map from source multi-indices to
// target vectors. Over any algebra S the law evaluates as
//   f(m) = sum_k (prod_i m_i^(k_i)) coeff(k),
// and the table determines the whole family of maps. The law is homogeneous
// of degree d exactly when its support sits in degree d.
class PolyLaw {
public:
  using CoeffMap = std::map<MultiIndex, ModuleVector, MultiIndexLess>;

  PolyLaw(FreeModuleSpec source, FreeModuleSpec target);

  const FreeModuleSpec& source() const { return source_; }
  const FreeModuleSpec& target() const { return target_; }
  const CoeffMap& coeffs() const { return coeffs_; }
  bool isZero() const { return coeffs_.empty(); }
  std::uint32_t maxDegree() const;  // 0 for the zero law
  ModuleVector coeffAt(const MultiIndex& k) const;

  void accumulate(const MultiIndex& index, const ModuleVector& value);

  PolyLaw operator+(const PolyLaw& o) const;
  PolyLaw scaled(const Scalar& r) const;

  friend bool operator==(const PolyLaw& a, const PolyLaw& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const PolyLaw& a, const PolyLaw& b) { return !(a == b); }

private:
  FreeModuleSpec source_;
  FreeModuleSpec target_;
  CoeffMap coeffs_;
};

// Evaluation over a test algebra (the base ring or a polynomial ring over
// it). The point is a vector with coordinates in `algebra` on the law's
// source basis; the result has coordinates in `algebra` on the target
// basis. AlgebraMismatch if the point lives elsewhere.
ModuleVector evalAt(const PolyLaw& f, const RingDescriptor& algebra, const ModuleVector& point);

// Coefficients of f relative to a finite family of vectors: evaluates f at
// sum_i T_i family_i over R[(T_i)] and reads off the coefficient of T^a.
// With the standard basis as family this returns the stored table.
PolyLaw::CoeffMap coeffOf(const PolyLaw& f, const BasisLabels& familyLabels,
                          const std::vector<ModuleVector>& family);

bool isHomogeneous(const PolyLaw& f, std::uint32_t d);
// The common degree of the support, when there is one (0 for the zero law).
std::optional<std::uint32_t> homogeneousDegree(const PolyLaw& f);

PolyLaw component(const PolyLaw& f, std::uint32_t d);
PolyLaw componentSum(const PolyLaw& f);  // sum of all components; equals f

// Source basis split into consecutive factors. PartitionInvalid unless the
// parts are disjoint and cover the basis.
struct BasisPartition {
  std::vector<std::vector<std::string>> parts;
};

// Component of multi-degree `degrees` (one per factor).
PolyLaw multiComponent(const PolyLaw& f, const BasisPartition& partition,
                       const std::vector<std::uint32_t>& degrees);
PolyLaw biComponent(const PolyLaw& f, const std::vector<std::string>& part1,
                    const std::vector<std::string>& part2, std::uint32_t p, std::uint32_t n);

// The product module M x M with labels "L.1" (first factor, in basis
// order) then "L.2".
FreeModuleSpec doubledSpec(const FreeModuleSpec& spec);
std::vector<std::string> doubledPart(const FreeModuleSpec& spec, int factor);  // 1 or 2

// The law (m1, m2) |-> f(m1 + m2) on the doubled module. Each coefficient
// index k splits over the two copies with a product of binomials, the
// expansion of prod_i (z_i + z'_i)^(k_i).
PolyLaw precomposeAddition(const PolyLaw& f);

// Divided differential of order n, two independent routes:
//  - structural: bihomogeneous components of precomposeAddition(f), summing
//    the (p, n) pieces over all p;
//  - extraction: evaluate f at z T1 + z' T2 with symbolic coordinates and
//    collect the monomials of degree n in T2.
// The two must agree exactly; the suites check that.
PolyLaw dividedDifferentialStructural(std::uint32_t n, const PolyLaw& f);
PolyLaw dividedDifferentialExtraction(std::uint32_t n, const PolyLaw& f);
inline PolyLaw dividedDifferential(std::uint32_t n, const PolyLaw& f) {
  return dividedDifferentialStructural(n, f);
}

// f(z + z') = sum_n (D^n f)(z, z'), the specialization T1 = T2 = 1 of the
// defining expansion.
bool taylorSumCheck(const PolyLaw& f, const ModuleVector& z, const ModuleVector& zp);

// Degree-d slice of the divided power algebra as a free module: one basis
// label per degree-d monomial, in canonical order.
FreeModuleSpec gradeSliceSpec(const FreeModuleSpec& spec, std::uint32_t d);
// Coordinates of the grade-d part of an element in that slice.
ModuleVector gradeSliceCoords(const GammaElement& a, std::uint32_t d);

// The universal homogeneous law of degree d: m |-> m^[d], valued in the
// grade-d slice. Every homogeneous degree-d law factors through it.
PolyLaw deltaLaw(const FreeModuleSpec& spec, std::uint32_t d);

// The unique linear factorization f = phi . delta_d for a homogeneous law:
// phi sends the monomial b^[k] to coeff(k). NotHomogeneous if the support
// strays from degree d.
LinearMap factorHomogeneous(const PolyLaw& f, std::uint32_t d);

// A morphism of test algebras over the same base ring, given by variable
// substitution. Variables without an explicit image map to the same-named
// variable of the codomain.
class TestAlgebraHom {
public:
  TestAlgebraHom(RingDescriptor dom, RingDescriptor cod, std::map<std::string, Scalar> varImages);

  const RingDescriptor& dom() const { return dom_; }
  const RingDescriptor& cod() const { return cod_; }
  Scalar apply(const Scalar& a) const;
  ModuleVector apply(const ModuleVector& v) const;

private:
  RingDescriptor dom_;
  RingDescriptor cod_;
  std::map<std::string, Scalar> varImages_;
};

// The naturality square of a polynomial law along a test-algebra morphism,
// evaluated at one point and compared exactly.
bool compatCheck(const PolyLaw& f, const TestAlgebraHom& hom, const ModuleVector& point);

// Degree-1 laws are exactly linear maps.
PolyLaw ofLinearMap(const LinearMap& f);
LinearMap toLinearMap(const PolyLaw& f);  // NotDegreeOne if support strays from degree 1

}  // namespace gammaforge

#endif
