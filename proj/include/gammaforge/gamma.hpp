#ifndef GAMMAFORGE_GAMMA_HPP
#define GAMMAFORGE_GAMMA_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gammaforge/multiindex.hpp"
#include "gammaforge/scalar.hpp"

namespace gammaforge {

// Guard for the combinatorial expansion in gammaN: the number of
// intermediate monomials (one per weak composition of n over the support)
// may not exceed this unless the caller raises it.
inline constexpr std::uint64_t kDefaultTermBudget = 1000000;

struct FreeModuleSpec {
  RingDescriptor ring;
  BasisLabels basis;
};

bool operator==(const FreeModuleSpec& a, const FreeModuleSpec& b);
inline bool operator!=(const FreeModuleSpec& a, const FreeModuleSpec& b) { return !(a == b); }
void requireSameSpec(const FreeModuleSpec& a, const FreeModuleSpec& b);

// An element of the free module: finitely supported coordinates, no
// explicit zeros.
class ModuleVector {
public:
  explicit ModuleVector(FreeModuleSpec spec) : spec_(std::move(spec)) {}

  const FreeModuleSpec& spec() const { return spec_; }
  const std::map<std::uint32_t, Scalar>& coords() const { return coords_; }
  Scalar coordAt(std::uint32_t pos) const;
  bool isZero() const { return coords_.empty(); }

  void accumulate(std::uint32_t pos, const Scalar& value);
  static ModuleVector basisVector(const FreeModuleSpec& spec, std::size_t pos);

  ModuleVector operator+(const ModuleVector& o) const;
  ModuleVector operator-() const;
  ModuleVector scaled(const Scalar& r) const;

  friend bool operator==(const ModuleVector& a, const ModuleVector& b) {
    return a.spec_ == b.spec_ && a.coords_ == b.coords_;
  }
  friend bool operator!=(const ModuleVector& a, const ModuleVector& b) { return !(a == b); }

private:
  FreeModuleSpec spec_;
  std::map<std::uint32_t, Scalar> coords_;
};

// An element of the universal divided power algebra of a free module,
// written in the monomial basis b^[k]: a finitely supported map from
// multi-indices to nonzero scalars. The grade-d part is the restriction to
// indices of degree d.
class GammaElement {
public:
  using TermMap = std::map<MultiIndex, Scalar, MultiIndexLess>;

  explicit GammaElement(FreeModuleSpec spec) : spec_(std::move(spec)) {}
  static GammaElement zero(const FreeModuleSpec& spec) { return GammaElement(spec); }
  static GammaElement one(const FreeModuleSpec& spec);
  static GammaElement monomial(const FreeModuleSpec& spec, const MultiIndex& index,
                               const Scalar& coeff);

  const FreeModuleSpec& spec() const { return spec_; }
  const TermMap& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  Scalar coeffAt(const MultiIndex& index) const;

  // Adds coeff at index, pruning the term when the sum cancels.
  void accumulate(const MultiIndex& index, const Scalar& coeff);

  GammaElement operator+(const GammaElement& o) const;
  GammaElement operator-() const;
  GammaElement operator-(const GammaElement& o) const { return *this + (-o); }
  // The algebra product: bilinear extension of
  //   b^[j] * b^[k] = (prod_i binomial(j_i+k_i, j_i)) * b^[j+k].
  GammaElement operator*(const GammaElement& o) const;
  GammaElement scaled(const Scalar& r) const;
  GammaElement natScaled(const Int& n) const;
  GammaElement pow(std::uint32_t n) const;

  GammaElement gradeComponent(std::uint32_t d) const;
  std::map<std::uint32_t, GammaElement> gradeDecompose() const;
  std::uint32_t maxGrade() const;  // 0 for the zero element
  bool inAugmentationIdeal() const;

  friend bool operator==(const GammaElement& a, const GammaElement& b) {
    return a.spec_ == b.spec_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const GammaElement& a, const GammaElement& b) { return !(a == b); }

private:
  FreeModuleSpec spec_;
  TermMap terms_;
};

// x^[n], the n-th divided power of a module vector, expanded in the
// monomial basis: sum over |k| = n of (prod_i x_i^(k_i)) b^[k].
GammaElement dpGenerator(std::uint32_t n, const ModuleVector& x);

// The divided power maps on the augmentation ideal. For n >= 1 the input
// must have zero grade-0 part (NotInAugmentationIdeal otherwise); gamma_0 is
// identically 1. Writing a = sum_k r_k b^[k], the value is
//   sum over weak compositions e of n over supp(a) of
//     prod_k r_k^(e_k) * dpCoeffMulti(e_k, k) * b^[e_k * k],
// the product taken in the algebra (cross-term binomials included).
// Throws BudgetExceeded when the composition count passes termBudget.
GammaElement gammaN(std::uint32_t n, const GammaElement& a,
                    std::uint64_t termBudget = kDefaultTermBudget);

// Sparse column form of a linear map between free modules: one target
// vector per source basis position.
struct LinearMap {
  BasisLabels source;
  FreeModuleSpec target;
  std::map<std::uint32_t, ModuleVector> columns;  // omitted column = zero

  // Applies the map; scalars of x may live in an extension of the target
  // ring, in which case column entries are embedded.
  ModuleVector apply(const ModuleVector& x) const;
};

LinearMap identityMap(const FreeModuleSpec& spec);
LinearMap composeLinear(const LinearMap& g, const LinearMap& f);

// The algebra morphism induced by a linear map f on the module:
// b^[k] |-> prod_i f(b_i)^[k_i], extended linearly. Preserves grade.
GammaElement mapLinear(const LinearMap& f, const GammaElement& a);

FreeModuleSpec quotientSpec(const FreeModuleSpec& spec, const std::set<std::string>& drop);

// The quotient map onto the algebra of the reduced basis: kills every term
// whose index touches a dropped label, keeps the rest verbatim.
GammaElement quotientByBasisSpan(const std::set<std::string>& drop, const GammaElement& a);

// Sections/embeddings between a quotient algebra and the full one (the
// reduced basis included as a subset of the full basis).
GammaElement includeFromQuotient(const FreeModuleSpec& fullSpec, const GammaElement& reduced);

// Linear isomorphism between the module and the grade-1 part.
GammaElement gradeOneIota(const ModuleVector& x);
ModuleVector gradeOneInverse(const GammaElement& a);  // NotDegreeOne unless homogeneous of degree 1

}  // namespace gammaforge

#endif
