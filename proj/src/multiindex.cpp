#include "gammaforge/multiindex.hpp"

#include <algorithm>
#include <set>

namespace gammaforge {

BasisLabels::BasisLabels(std::vector<std::string> labels) {
  if (labels.empty()) fail(Errc::BasisMismatch, "basis must be nonempty");
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) fail(Errc::BasisMismatch, "duplicate basis label " + l);
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

bool BasisLabels::contains(const std::string& label) const {
  return std::find(labels_->begin(), labels_->end(), label) != labels_->end();
}

std::size_t BasisLabels::indexOf(const std::string& label) const {
  auto it = std::find(labels_->begin(), labels_->end(), label);
  if (it == labels_->end()) fail(Errc::BasisMismatch, "label " + label + " not in basis");
  return static_cast<std::size_t>(it - labels_->begin());
}

void requireSameBasis(const BasisLabels& a, const BasisLabels& b) {
  if (a != b) fail(Errc::BasisMismatch, "operands index different bases");
}

MultiIndex MultiIndex::fromExps(const BasisLabels& basis,
                                const std::map<std::string, std::uint32_t>& exps) {
  MultiIndex mi(basis);
  for (const auto& [label, e] : exps) {
    if (e == 0) continue;
    mi.entries_[static_cast<std::uint32_t>(basis.indexOf(label))] = e;
  }
  return mi;
}

MultiIndex MultiIndex::fromDense(const BasisLabels& basis, const std::vector<std::uint32_t>& exps) {
  if (exps.size() != basis.size()) fail(Errc::BasisMismatch, "dense exponent length mismatch");
  MultiIndex mi(basis);
  for (std::uint32_t i = 0; i < exps.size(); ++i)
    if (exps[i]) mi.entries_[i] = exps[i];
  return mi;
}

MultiIndex MultiIndex::single(const BasisLabels& basis, std::size_t pos, std::uint32_t exp) {
  MultiIndex mi(basis);
  if (pos >= basis.size()) fail(Errc::BasisMismatch, "basis position out of range");
  if (exp) mi.entries_[static_cast<std::uint32_t>(pos)] = exp;
  return mi;
}

std::uint32_t MultiIndex::degree() const {
  std::uint32_t d = 0;
  for (const auto& [pos, e] : entries_) d += e;
  return d;
}

std::uint32_t MultiIndex::expAt(std::uint32_t pos) const {
  auto it = entries_.find(pos);
  return it == entries_.end() ? 0 : it->second;
}

std::vector<std::uint32_t> MultiIndex::dense() const {
  std::vector<std::uint32_t> v(basis_.size(), 0);
  for (const auto& [pos, e] : entries_) v[pos] = e;
  return v;
}

std::string MultiIndex::monomialLabel() const {
  if (entries_.empty()) return "1";
  std::string s;
  for (const auto& [pos, e] : entries_) {
    if (!s.empty()) s += "*";
    s += basis_.at(pos);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

bool MultiIndexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
  std::uint32_t da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Same degree: larger exponent vector first (matches weak composition
  // enumeration). Sparse maps are compared without densifying.
  auto ia = a.entries().begin(), ea = a.entries().end();
  auto ib = b.entries().begin(), eb = b.entries().end();
  while (ia != ea && ib != eb) {
    if (ia->first != ib->first) return ia->first < ib->first;  // earlier support position = larger vector
    if (ia->second != ib->second) return ia->second > ib->second;
    ++ia;
    ++ib;
  }
  return false;  // equal degree and one is a prefix of the other => equal maps
}

MultiIndex miAdd(const MultiIndex& a, const MultiIndex& b) {
  requireSameBasis(a.basis(), b.basis());
  std::vector<std::uint32_t> v = a.dense();
  for (const auto& [pos, e] : b.entries()) v[pos] += e;
  return MultiIndex::fromDense(a.basis(), v);
}

Int miBinomialProduct(const MultiIndex& a, const MultiIndex& b) {
  requireSameBasis(a.basis(), b.basis());
  Int r(1);
  for (const auto& [pos, e] : a.entries()) {
    std::uint32_t f = b.expAt(pos);
    if (f) r *= binomial(e + f, e);
  }
  return r;
}

MultiIndex miScale(std::uint32_t m, const MultiIndex& k) {
  if (m == 0) return MultiIndex(k.basis());
  std::vector<std::uint32_t> v = k.dense();
  for (auto& e : v) e *= m;
  return MultiIndex::fromDense(k.basis(), v);
}

Int dpCoeffMulti(std::uint32_t m, const MultiIndex& k) {
  if (k.degree() == 0) fail(Errc::EmptyIndex, "dpCoeffMulti needs a positive-degree index");
  Int num(1);
  Int den = factorial(m);
  for (const auto& [pos, e] : k.entries()) {
    num *= factorial(static_cast<std::uint64_t>(m) * e);
    Int ef = factorial(e);
    for (std::uint32_t i = 0; i < m; ++i) den *= ef;
  }
  Int q = num / den;
  if (q * den != num) fail(Errc::NotIntegral, "dpCoeffMulti not integral at m=" + std::to_string(m));
  return q;
}

namespace {

void compose(std::uint32_t n, std::size_t slot, std::vector<std::uint32_t>& cur,
             std::vector<std::vector<std::uint32_t>>& out) {
  if (slot + 1 == cur.size()) {
    cur[slot] = n;
    out.push_back(cur);
    return;
  }
  for (std::uint32_t v = n;; --v) {
    cur[slot] = v;
    compose(n - v, slot + 1, cur, out);
    if (v == 0) break;
  }
}

}  // namespace

std::vector<std::vector<std::uint32_t>> weakCompositions(std::uint32_t n, std::size_t slots) {
  std::vector<std::vector<std::uint32_t>> out;
  if (slots == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  std::vector<std::uint32_t> cur(slots, 0);
  compose(n, 0, cur, out);
  return out;
}

Int weakCompositionCount(std::uint32_t n, std::size_t slots) {
  if (slots == 0) return Int(n == 0 ? 1 : 0);
  return binomial(n + slots - 1, slots - 1);
}

}  // namespace gammaforge
