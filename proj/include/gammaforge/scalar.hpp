#ifndef GAMMAFORGE_SCALAR_HPP
#define GAMMAFORGE_SCALAR_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gammaforge/errors.hpp"

namespace gammaforge {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class RingKind { Integers, Rationals, IntegersMod, Poly };

// One of the supported exact coefficient rings: Z, Q, Z/n (n >= 2, possibly
// composite), or a sparse multivariate polynomial ring over one of those.
// Polynomial rings are never nested: adjoining variables to a polynomial
// ring extends its variable list instead.
class RingDescriptor {
public:
  static RingDescriptor integers();
  static RingDescriptor rationals();
  static RingDescriptor integersMod(std::uint64_t modulus);
  // Variables are stored sorted by name; duplicates are rejected.
  static RingDescriptor poly(const RingDescriptor& base, std::vector<std::string> vars);

  RingKind kind() const { return kind_; }
  bool isPoly() const { return kind_ == RingKind::Poly; }
  std::uint64_t modulus() const { return modulus_; }
  const RingDescriptor& base() const;
  const std::vector<std::string>& vars() const { return vars_; }
  // The coefficient ring: base() for polynomial rings, *this otherwise.
  const RingDescriptor& scalarRing() const;
  bool hasVar(const std::string& name) const;
  std::size_t varIndex(const std::string& name) const;  // throws UnsupportedRing if absent

  // Human-readable tag, e.g. "Z", "Q", "Z/6", "Q[X,Y]".
  std::string tag() const;

  friend bool operator==(const RingDescriptor& a, const RingDescriptor& b);
  friend bool operator!=(const RingDescriptor& a, const RingDescriptor& b) { return !(a == b); }

private:
  RingDescriptor(RingKind kind, std::uint64_t modulus, std::shared_ptr<const RingDescriptor> base,
                 std::vector<std::string> vars)
      : kind_(kind), modulus_(modulus), base_(std::move(base)), vars_(std::move(vars)) {}

  RingKind kind_;
  std::uint64_t modulus_ = 0;
  std::shared_ptr<const RingDescriptor> base_;
  std::vector<std::string> vars_;
};

// Extend a ring by fresh variables. Flattens: adjoining to Z[X] yields
// Z[X,...], not a polynomial ring over a polynomial ring. Throws
// UnsupportedRing if a name is already taken.
RingDescriptor adjoinVars(const RingDescriptor& ring, const std::vector<std::string>& names);

// Pick variable names that do not collide with the ring's existing ones,
// starting from the given stems (deterministic: appends '_' until free).
std::vector<std::string> freshVarNames(const RingDescriptor& ring,
                                       const std::vector<std::string>& stems);

// An exact ring element. All arithmetic is exact; there is no floating
// point anywhere. Values are canonical: rationals reduced with positive
// denominator (cpp_rational guarantees this), residues in [0, n),
// polynomials sorted by exponent vector with no zero coefficients.
class Scalar {
public:
  struct PolyTerm;
  // Sorted by exponent vector (lexicographic, aligned with the ring's
  // variable order); no zero coefficients stored.
  using PolyTerms = std::vector<PolyTerm>;
  using Value = std::variant<Int, Rat, PolyTerms>;

  static Scalar zero(const RingDescriptor& ring);
  static Scalar one(const RingDescriptor& ring);
  // Canonical image of an integer in any supported ring.
  static Scalar fromInt(const RingDescriptor& ring, const Int& k);
  static Scalar integer(Int k);
  static Scalar rational(const Int& num, const Int& den);
  static Scalar rational(Rat q);
  static Scalar residue(const Int& v, std::uint64_t modulus);
  static Scalar variable(const RingDescriptor& polyRing, const std::string& name);
  // Canonicalizes: merges duplicate exponent vectors, prunes zeros.
  static Scalar fromPolyTerms(const RingDescriptor& polyRing, PolyTerms terms);

  const RingDescriptor& ring() const { return ring_; }
  bool isZero() const;
  bool isOne() const;

  const Int& asInt() const;        // Integers / IntegersMod
  const Rat& asRat() const;        // Rationals
  const PolyTerms& asPoly() const; // Poly

  Scalar operator+(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator-(const Scalar& o) const { return *this + (-o); }
  Scalar operator*(const Scalar& o) const;
  Scalar pow(std::uint64_t e) const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
  Scalar(RingDescriptor ring, Value value) : ring_(std::move(ring)), value_(std::move(value)) {}

  RingDescriptor ring_;
  Value value_;
};

struct Scalar::PolyTerm {
  std::vector<std::uint32_t> exps;  // dense, aligned with ring().vars()
  Scalar coeff;                     // element of the base ring
};

bool operator==(const Scalar::PolyTerm& a, const Scalar::PolyTerm& b);

// --- combinatorial coefficients -------------------------------------------

Int factorial(std::uint64_t n);

// binomial(a, b); 0 when b > a.
Int binomial(std::uint64_t a, std::uint64_t b);

// (m*n)! / (m! * (n!)^m) for n >= 1. The quotient is always integral; a
// remainder would indicate a bug, reported as NotIntegral.
Int uniformDpCoeff(std::uint64_t m, std::uint64_t n);

// Legendre's formula: sum_{i>=1} floor(n / p^i). Checks primality of p by
// trial division (inputs are desk-scale) and throws NotPrime otherwise.
std::uint64_t padicValFactorial(std::uint64_t p, std::uint64_t n);

// --- ring homomorphisms ----------------------------------------------------

// Z -> Q (or Z[X..] -> Q[X..], coefficient-wise). UnsupportedRing for Z/n.
Scalar fractionEmbed(const Scalar& a);

// Canonical embedding into `target` when one exists in the closed universe:
// identity, Z->Q, Z->Z/n, constants into a polynomial ring, variable-set
// extension, and composites of those. Throws UnsupportedRing otherwise.
Scalar scalarEmbed(const Scalar& a, const RingDescriptor& target);
bool embeddable(const RingDescriptor& from, const RingDescriptor& to);

// Exact division by a nonzero integer; requires a Q-algebra (Q or Q[X..]).
Scalar divByInt(const Scalar& a, const Int& n);

// Exact value as an integer, if the scalar is an integer-valued element of
// Z or Q. Empty when a rational has a nontrivial denominator.
std::optional<Int> exactInt(const Scalar& a);

}  // namespace gammaforge

#endif
