#include "gammaforge/scalar.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gammaforge {

const char* errcName(Errc kind) noexcept {
  switch (kind) {
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::ModulusInvalid: return "ModulusInvalid";
    case Errc::NotIntegral: return "NotIntegral";
    case Errc::NotPrime: return "NotPrime";
    case Errc::UnsupportedRing: return "UnsupportedRing";
    case Errc::BasisMismatch: return "BasisMismatch";
    case Errc::EmptyIndex: return "EmptyIndex";
    case Errc::SpecMismatch: return "SpecMismatch";
    case Errc::NotInAugmentationIdeal: return "NotInAugmentationIdeal";
    case Errc::NotDegreeOne: return "NotDegreeOne";
    case Errc::ImageNotInIdeal: return "ImageNotInIdeal";
    case Errc::EmptyQuotientBasis: return "EmptyQuotientBasis";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::PartitionInvalid: return "PartitionInvalid";
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::KernelNotStable: return "KernelNotStable";
    case Errc::AlgebraMismatch: return "AlgebraMismatch";
    case Errc::ExtensionMismatch: return "ExtensionMismatch";
    case Errc::NotRationalAlgebra: return "NotRationalAlgebra";
    case Errc::MalformedInput: return "MalformedInput";
    case Errc::UsageError: return "UsageError";
    case Errc::Count_: break;
  }
  return "UnknownError";
}

// --- RingDescriptor ---------------------------------------------------------

RingDescriptor RingDescriptor::integers() {
  return RingDescriptor(RingKind::Integers, 0, nullptr, {});
}

RingDescriptor RingDescriptor::rationals() {
  return RingDescriptor(RingKind::Rationals, 0, nullptr, {});
}

RingDescriptor RingDescriptor::integersMod(std::uint64_t modulus) {
  if (modulus < 2) fail(Errc::ModulusInvalid, "modulus must be >= 2, got " + std::to_string(modulus));
  return RingDescriptor(RingKind::IntegersMod, modulus, nullptr, {});
}

RingDescriptor RingDescriptor::poly(const RingDescriptor& base, std::vector<std::string> vars) {
  if (base.isPoly()) fail(Errc::UnsupportedRing, "polynomial rings do not nest; adjoin variables instead");
  if (vars.empty()) fail(Errc::UnsupportedRing, "polynomial ring needs at least one variable");
  std::sort(vars.begin(), vars.end());
  if (std::adjacent_find(vars.begin(), vars.end()) != vars.end())
    fail(Errc::UnsupportedRing, "duplicate variable name");
  return RingDescriptor(RingKind::Poly, 0, std::make_shared<RingDescriptor>(base), std::move(vars));
}

const RingDescriptor& RingDescriptor::base() const {
  if (!isPoly()) fail(Errc::UnsupportedRing, "base() on a non-polynomial ring");
  return *base_;
}

const RingDescriptor& RingDescriptor::scalarRing() const { return isPoly() ? *base_ : *this; }

bool RingDescriptor::hasVar(const std::string& name) const {
  return isPoly() && std::binary_search(vars_.begin(), vars_.end(), name);
}

std::size_t RingDescriptor::varIndex(const std::string& name) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
  if (it == vars_.end() || *it != name) fail(Errc::UnsupportedRing, "unknown variable " + name);
  return static_cast<std::size_t>(it - vars_.begin());
}

std::string RingDescriptor::tag() const {
  switch (kind_) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::IntegersMod: return "Z/" + std::to_string(modulus_);
    case RingKind::Poly: {
      std::string s = base_->tag() + "[";
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) s += ",";
        s += vars_[i];
      }
      return s + "]";
    }
  }
  return "?";
}

bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case RingKind::Integers:
    case RingKind::Rationals: return true;
    case RingKind::IntegersMod: return a.modulus_ == b.modulus_;
    case RingKind::Poly: return a.vars_ == b.vars_ && *a.base_ == *b.base_;
  }
  return false;
}

RingDescriptor adjoinVars(const RingDescriptor& ring, const std::vector<std::string>& names) {
  std::vector<std::string> all = ring.isPoly() ? ring.vars() : std::vector<std::string>{};
  for (const auto& n : names) {
    if (std::find(all.begin(), all.end(), n) != all.end())
      fail(Errc::UnsupportedRing, "variable " + n + " already present");
    all.push_back(n);
  }
  return RingDescriptor::poly(ring.scalarRing(), std::move(all));
}

std::vector<std::string> freshVarNames(const RingDescriptor& ring,
                                       const std::vector<std::string>& stems) {
  std::set<std::string> taken;
  if (ring.isPoly()) taken.insert(ring.vars().begin(), ring.vars().end());
  std::vector<std::string> out;
  for (std::string name : stems) {
    while (taken.count(name)) name += "_";
    taken.insert(name);
    out.push_back(name);
  }
  return out;
}

// --- Scalar helpers ---------------------------------------------------------

namespace {

void requireSameRing(const RingDescriptor& a, const RingDescriptor& b) {
  if (a != b) fail(Errc::RingMismatch, a.tag() + " vs " + b.tag());
}

Int modReduce(const Int& v, std::uint64_t n) {
  Int m(n);
  Int r = v % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

bool operator==(const Scalar::PolyTerm& a, const Scalar::PolyTerm& b) {
  return a.exps == b.exps && a.coeff == b.coeff;
}

Scalar Scalar::zero(const RingDescriptor& ring) {
  switch (ring.kind()) {
    case RingKind::Integers:
    case RingKind::IntegersMod: return Scalar(ring, Int(0));
    case RingKind::Rationals: return Scalar(ring, Rat(0));
    case RingKind::Poly: return Scalar(ring, PolyTerms{});
  }
  fail(Errc::UnsupportedRing, "zero");
}

Scalar Scalar::one(const RingDescriptor& ring) { return fromInt(ring, Int(1)); }

Scalar Scalar::fromInt(const RingDescriptor& ring, const Int& k) {
  switch (ring.kind()) {
    case RingKind::Integers: return Scalar(ring, k);
    case RingKind::Rationals: return Scalar(ring, Rat(k));
    case RingKind::IntegersMod: return Scalar(ring, modReduce(k, ring.modulus()));
    case RingKind::Poly: {
      Scalar c = fromInt(ring.base(), k);
      if (c.isZero()) return zero(ring);
      PolyTerms t;
      t.push_back({std::vector<std::uint32_t>(ring.vars().size(), 0), std::move(c)});
      return Scalar(ring, std::move(t));
    }
  }
  fail(Errc::UnsupportedRing, "fromInt");
}

Scalar Scalar::integer(Int k) { return Scalar(RingDescriptor::integers(), std::move(k)); }

Scalar Scalar::rational(const Int& num, const Int& den) {
  if (den == 0) fail(Errc::MalformedInput, "rational with zero denominator");
  Int n = num, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Scalar(RingDescriptor::rationals(), Rat(n, d));
}

Scalar Scalar::rational(Rat q) { return Scalar(RingDescriptor::rationals(), std::move(q)); }

Scalar Scalar::residue(const Int& v, std::uint64_t modulus) {
  RingDescriptor ring = RingDescriptor::integersMod(modulus);
  return Scalar(ring, modReduce(v, modulus));
}

Scalar Scalar::variable(const RingDescriptor& polyRing, const std::string& name) {
  std::size_t i = polyRing.varIndex(name);
  std::vector<std::uint32_t> e(polyRing.vars().size(), 0);
  e[i] = 1;
  PolyTerms t;
  t.push_back({std::move(e), one(polyRing.base())});
  return Scalar(polyRing, std::move(t));
}

Scalar Scalar::fromPolyTerms(const RingDescriptor& polyRing, PolyTerms terms) {
  if (!polyRing.isPoly()) fail(Errc::UnsupportedRing, "fromPolyTerms on " + polyRing.tag());
  std::map<std::vector<std::uint32_t>, Scalar> acc;
  for (auto& t : terms) {
    if (t.exps.size() != polyRing.vars().size())
      fail(Errc::MalformedInput, "exponent vector length mismatch");
    requireSameRing(t.coeff.ring(), polyRing.base());
    auto it = acc.find(t.exps);
    if (it == acc.end())
      acc.emplace(std::move(t.exps), std::move(t.coeff));
    else
      it->second = it->second + t.coeff;
  }
  PolyTerms out;
  for (auto& [e, c] : acc)
    if (!c.isZero()) out.push_back({e, c});
  return Scalar(polyRing, std::move(out));
}

bool Scalar::isZero() const {
  switch (ring_.kind()) {
    case RingKind::Integers:
    case RingKind::IntegersMod: return std::get<Int>(value_) == 0;
    case RingKind::Rationals: return std::get<Rat>(value_) == 0;
    case RingKind::Poly: return std::get<PolyTerms>(value_).empty();
  }
  return false;
}

bool Scalar::isOne() const { return *this == one(ring_); }

const Int& Scalar::asInt() const {
  if (ring_.kind() != RingKind::Integers && ring_.kind() != RingKind::IntegersMod)
    fail(Errc::UnsupportedRing, "asInt on " + ring_.tag());
  return std::get<Int>(value_);
}

const Rat& Scalar::asRat() const {
  if (ring_.kind() != RingKind::Rationals) fail(Errc::UnsupportedRing, "asRat on " + ring_.tag());
  return std::get<Rat>(value_);
}

const Scalar::PolyTerms& Scalar::asPoly() const {
  if (!ring_.isPoly()) fail(Errc::UnsupportedRing, "asPoly on " + ring_.tag());
  return std::get<PolyTerms>(value_);
}

Scalar Scalar::operator+(const Scalar& o) const {
  requireSameRing(ring_, o.ring_);
  switch (ring_.kind()) {
    case RingKind::Integers: return Scalar(ring_, Int(std::get<Int>(value_) + std::get<Int>(o.value_)));
    case RingKind::Rationals: return Scalar(ring_, Rat(std::get<Rat>(value_) + std::get<Rat>(o.value_)));
    case RingKind::IntegersMod:
      return Scalar(ring_, modReduce(std::get<Int>(value_) + std::get<Int>(o.value_), ring_.modulus()));
    case RingKind::Poly: {
      // Merge of two sorted term lists.
      const PolyTerms& a = std::get<PolyTerms>(value_);
      const PolyTerms& b = std::get<PolyTerms>(o.value_);
      PolyTerms out;
      out.reserve(a.size() + b.size());
      std::size_t i = 0, j = 0;
      while (i < a.size() && j < b.size()) {
        if (a[i].exps < b[j].exps) {
          out.push_back(a[i++]);
        } else if (b[j].exps < a[i].exps) {
          out.push_back(b[j++]);
        } else {
          Scalar c = a[i].coeff + b[j].coeff;
          if (!c.isZero()) out.push_back({a[i].exps, std::move(c)});
          ++i;
          ++j;
        }
      }
      for (; i < a.size(); ++i) out.push_back(a[i]);
      for (; j < b.size(); ++j) out.push_back(b[j]);
      return Scalar(ring_, std::move(out));
    }
  }
  fail(Errc::UnsupportedRing, "add");
}

Scalar Scalar::operator-() const {
  switch (ring_.kind()) {
    case RingKind::Integers: return Scalar(ring_, Int(-std::get<Int>(value_)));
    case RingKind::Rationals: return Scalar(ring_, Rat(-std::get<Rat>(value_)));
    case RingKind::IntegersMod:
      return Scalar(ring_, modReduce(-std::get<Int>(value_), ring_.modulus()));
    case RingKind::Poly: {
      PolyTerms out = std::get<PolyTerms>(value_);
      for (auto& t : out) t.coeff = -t.coeff;
      return Scalar(ring_, std::move(out));
    }
  }
  fail(Errc::UnsupportedRing, "neg");
}

Scalar Scalar::operator*(const Scalar& o) const {
  requireSameRing(ring_, o.ring_);
  switch (ring_.kind()) {
    case RingKind::Integers: return Scalar(ring_, Int(std::get<Int>(value_) * std::get<Int>(o.value_)));
    case RingKind::Rationals: return Scalar(ring_, Rat(std::get<Rat>(value_) * std::get<Rat>(o.value_)));
    case RingKind::IntegersMod:
      return Scalar(ring_, modReduce(std::get<Int>(value_) * std::get<Int>(o.value_), ring_.modulus()));
    case RingKind::Poly: {
      const PolyTerms& a = std::get<PolyTerms>(value_);
      const PolyTerms& b = std::get<PolyTerms>(o.value_);
      std::map<std::vector<std::uint32_t>, Scalar> acc;
      for (const auto& ta : a) {
        for (const auto& tb : b) {
          std::vector<std::uint32_t> e(ta.exps.size());
          for (std::size_t k = 0; k < e.size(); ++k) e[k] = ta.exps[k] + tb.exps[k];
          Scalar c = ta.coeff * tb.coeff;
          auto it = acc.find(e);
          if (it == acc.end())
            acc.emplace(std::move(e), std::move(c));
          else
            it->second = it->second + c;
        }
      }
      PolyTerms out;
      for (auto& [e, c] : acc)
        if (!c.isZero()) out.push_back({e, c});
      return Scalar(ring_, std::move(out));
    }
  }
  fail(Errc::UnsupportedRing, "mul");
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar result = one(ring_);
  Scalar b = *this;
  while (e) {
    if (e & 1) result = result * b;
    if (e >>= 1) b = b * b;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.ring_ == b.ring_ && a.value_ == b.value_;
}

// --- combinatorics ----------------------------------------------------------

Int factorial(std::uint64_t n) {
  Int r(1);
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(std::uint64_t a, std::uint64_t b) {
  if (b > a) return Int(0);
  if (b > a - b) b = a - b;
  Int r(1);
  for (std::uint64_t i = 1; i <= b; ++i) {
    r *= Int(a - b + i);
    r /= Int(i);  // exact at every step along this order
  }
  return r;
}

Int uniformDpCoeff(std::uint64_t m, std::uint64_t n) {
  if (n < 1) fail(Errc::MalformedInput, "uniformDpCoeff needs n >= 1");
  Int num = factorial(m * n);
  Int den = factorial(m);
  Int nf = factorial(n);
  for (std::uint64_t i = 0; i < m; ++i) den *= nf;
  Int q = num / den;
  if (q * den != num)
    fail(Errc::NotIntegral, "(m*n)!/(m!*(n!)^m) not integral at m=" + std::to_string(m) +
                                ", n=" + std::to_string(n));
  return q;
}

std::uint64_t padicValFactorial(std::uint64_t p, std::uint64_t n) {
  if (p < 2) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
  std::uint64_t total = 0;
  for (std::uint64_t q = p; q <= n; q *= p) {
    total += n / q;
    if (q > n / p) break;  // next q would overflow
  }
  return total;
}

// --- embeddings -------------------------------------------------------------

namespace {

bool baseEmbeddable(const RingDescriptor& from, const RingDescriptor& to) {
  if (from == to) return true;
  if (from.kind() == RingKind::Integers)
    return to.kind() == RingKind::Rationals || to.kind() == RingKind::IntegersMod;
  return false;
}

// Embedding of a non-poly scalar into a non-poly ring.
Scalar baseEmbed(const Scalar& a, const RingDescriptor& to) {
  if (a.ring() == to) return a;
  if (a.ring().kind() == RingKind::Integers) {
    if (to.kind() == RingKind::Rationals) return Scalar::rational(Rat(a.asInt()));
    if (to.kind() == RingKind::IntegersMod) return Scalar::fromInt(to, a.asInt());
  }
  fail(Errc::UnsupportedRing, "no embedding " + a.ring().tag() + " -> " + to.tag());
}

}  // namespace

bool embeddable(const RingDescriptor& from, const RingDescriptor& to) {
  if (from == to) return true;
  if (!from.isPoly() && !to.isPoly()) return baseEmbeddable(from, to);
  if (!from.isPoly() && to.isPoly()) return baseEmbeddable(from, to.base());
  if (from.isPoly() && to.isPoly()) {
    if (!baseEmbeddable(from.base(), to.base())) return false;
    return std::includes(to.vars().begin(), to.vars().end(), from.vars().begin(),
                         from.vars().end());
  }
  return false;
}

Scalar scalarEmbed(const Scalar& a, const RingDescriptor& target) {
  if (a.ring() == target) return a;
  if (!embeddable(a.ring(), target))
    fail(Errc::UnsupportedRing, "no embedding " + a.ring().tag() + " -> " + target.tag());
  if (!target.isPoly()) return baseEmbed(a, target);
  if (!a.ring().isPoly()) {
    Scalar c = baseEmbed(a, target.base());
    if (c.isZero()) return Scalar::zero(target);
    Scalar::PolyTerms t;
    t.push_back({std::vector<std::uint32_t>(target.vars().size(), 0), std::move(c)});
    return Scalar::fromPolyTerms(target, std::move(t));
  }
  // Poly -> Poly: remap exponent positions, embed coefficients.
  std::vector<std::size_t> pos(a.ring().vars().size());
  for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = target.varIndex(a.ring().vars()[i]);
  Scalar::PolyTerms out;
  for (const auto& t : a.asPoly()) {
    std::vector<std::uint32_t> e(target.vars().size(), 0);
    for (std::size_t i = 0; i < t.exps.size(); ++i) e[pos[i]] = t.exps[i];
    out.push_back({std::move(e), baseEmbed(t.coeff, target.base())});
  }
  return Scalar::fromPolyTerms(target, std::move(out));
}

Scalar fractionEmbed(const Scalar& a) {
  switch (a.ring().kind()) {
    case RingKind::Integers: return scalarEmbed(a, RingDescriptor::rationals());
    case RingKind::Rationals: return a;
    case RingKind::Poly: {
      const RingDescriptor& b = a.ring().base();
      if (b.kind() == RingKind::IntegersMod)
        fail(Errc::UnsupportedRing, "fractionEmbed of " + a.ring().tag());
      return scalarEmbed(a, RingDescriptor::poly(RingDescriptor::rationals(), a.ring().vars()));
    }
    case RingKind::IntegersMod: fail(Errc::UnsupportedRing, "fractionEmbed of " + a.ring().tag());
  }
  fail(Errc::UnsupportedRing, "fractionEmbed");
}

Scalar divByInt(const Scalar& a, const Int& n) {
  if (n == 0) fail(Errc::MalformedInput, "division by zero");
  const RingDescriptor& coeff = a.ring().scalarRing();
  if (coeff.kind() != RingKind::Rationals)
    fail(Errc::NotRationalAlgebra, "exact division needs a Q-algebra, got " + a.ring().tag());
  if (!a.ring().isPoly()) return Scalar::rational(a.asRat() / Rat(n));
  Scalar::PolyTerms out = a.asPoly();
  for (auto& t : out) t.coeff = Scalar::rational(t.coeff.asRat() / Rat(n));
  return Scalar::fromPolyTerms(a.ring(), std::move(out));
}

std::optional<Int> exactInt(const Scalar& a) {
  if (a.ring().kind() == RingKind::Integers) return a.asInt();
  if (a.ring().kind() == RingKind::Rationals) {
    const Rat& q = a.asRat();
    if (denominator(q) == 1) return numerator(q);
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace gammaforge
