#ifndef GAMMAFORGE_MULTIINDEX_HPP
#define GAMMAFORGE_MULTIINDEX_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gammaforge/scalar.hpp"

namespace gammaforge {

// An ordered list of distinct basis labels. The construction order is fixed
// and used for every canonical serialization and term ordering.
class BasisLabels {
public:
  explicit BasisLabels(std::vector<std::string> labels);

  std::size_t size() const { return labels_->size(); }
  const std::string& at(std::size_t i) const { return (*labels_)[i]; }
  const std::vector<std::string>& all() const { return *labels_; }
  bool contains(const std::string& label) const;
  std::size_t indexOf(const std::string& label) const;  // throws BasisMismatch if absent

  friend bool operator==(const BasisLabels& a, const BasisLabels& b) {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }
  friend bool operator!=(const BasisLabels& a, const BasisLabels& b) { return !(a == b); }

private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

// A finitely supported exponent map on a basis: position -> exponent > 0.
// Indexes the monomial basis of the divided power algebra as well as the
// coefficients of polynomial laws.
class MultiIndex {
public:
  explicit MultiIndex(BasisLabels basis) : basis_(std::move(basis)) {}
  static MultiIndex fromExps(const BasisLabels& basis,
                             const std::map<std::string, std::uint32_t>& exps);
  static MultiIndex fromDense(const BasisLabels& basis, const std::vector<std::uint32_t>& exps);
  static MultiIndex single(const BasisLabels& basis, std::size_t pos, std::uint32_t exp);

  const BasisLabels& basis() const { return basis_; }
  const std::map<std::uint32_t, std::uint32_t>& entries() const { return entries_; }
  std::uint32_t degree() const;
  std::uint32_t expAt(std::uint32_t pos) const;
  bool empty() const { return entries_.empty(); }
  std::vector<std::uint32_t> dense() const;

  // Readable name of the monomial, e.g. "b1^2*b2"; "1" for the empty index.
  // Used as a basis label for graded slices of the divided power algebra.
  std::string monomialLabel() const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.basis_ == b.basis_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return !(a == b); }

private:
  BasisLabels basis_;
  std::map<std::uint32_t, std::uint32_t> entries_;
};

// Canonical term order: degree first, then exponent vectors compared
// lexicographically with the larger vector first. This matches the
// enumeration order of weakCompositions, so degree-d monomials always appear
// in the same order no matter how they were produced. Assumes both indices
// share a basis (operations validate that before comparing).
struct MultiIndexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

MultiIndex miAdd(const MultiIndex& a, const MultiIndex& b);

// prod_i binomial(a_i + b_i, a_i): the coefficient picked up when two basis
// monomials multiply.
Int miBinomialProduct(const MultiIndex& a, const MultiIndex& b);

MultiIndex miScale(std::uint32_t m, const MultiIndex& k);

// The coefficient of the m-th divided power of a basis monomial:
//   gamma_m(b^[k]) = dpCoeffMulti(m, k) * b^[m*k],
// computed as (1/m!) * prod_i (m*k_i)! / (k_i!)^m with the division checked
// exact. The closed form is cross-validated against the fraction-field
// oracle by the test suites; NotIntegral firing would mean a genuine bug.
Int dpCoeffMulti(std::uint32_t m, const MultiIndex& k);

// All e: slots -> N with sum n, enumerated exactly once. Order: first slot
// descending, then recursively — e.g. n=2 over two slots gives
// (2,0),(1,1),(0,2).
std::vector<std::vector<std::uint32_t>> weakCompositions(std::uint32_t n, std::size_t slots);

Int weakCompositionCount(std::uint32_t n, std::size_t slots);

void requireSameBasis(const BasisLabels& a, const BasisLabels& b);

}  // namespace gammaforge

#endif
