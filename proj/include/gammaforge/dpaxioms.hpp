#ifndef GAMMAFORGE_DPAXIOMS_HPP
#define GAMMAFORGE_DPAXIOMS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "gammaforge/gamma.hpp"
#include "gammaforge/rng.hpp"
#include "gammaforge/sampling.hpp"

namespace gammaforge {

using Json = nlohmann::ordered_json;

// A divided power structure under test: a commutative algebra with exact
// equality (the element type E), an ideal-membership predicate, the family
// gamma_n, and samplers for the property harness. The harness *checks* the
// seven axioms; nothing here assumes them.
template <class E>
struct DpStructure {
  explicit DpStructure(E unit) : one(std::move(unit)) {}

  std::string name;
  std::function<bool(const E&)> idealContains;
  std::function<E(std::uint32_t, const E&)> gamma;
  std::function<E(Rng&)> sampleIdeal;
  std::function<E(Rng&)> sampleRing;
  std::function<Json(const E&)> elemJson;
  E one;
};

struct Counterexample {
  Json inputs;
  Json lhs;
  Json rhs;
  std::uint64_t sampleIndex = 0;
};

struct AxiomResult {
  std::string axiom;  // "i" .. "vii"
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::optional<Counterexample> first;
};

struct AxiomReport {
  std::uint64_t seed = 0;
  std::uint32_t samples = 0;
  std::uint32_t maxN = 0;
  std::vector<AxiomResult> axioms;

  bool allPass() const {
    for (const auto& a : axioms)
      if (a.fail) return false;
    return true;
  }
};

// Algebra-element helpers shared by the generic code below.
inline Scalar dpNatMul(const Int& n, const Scalar& x) { return Scalar::fromInt(x.ring(), n) * x; }
inline GammaElement dpNatMul(const Int& n, const GammaElement& x) { return x.natScaled(n); }
inline Scalar scalarAct(const Scalar& r, const Scalar& x) { return scalarEmbed(r, x.ring()) * x; }
inline GammaElement scalarAct(const Scalar& r, const GammaElement& x) {
  return x.scaled(scalarEmbed(r, x.spec().ring));
}

namespace detail {

inline const char* kAxiomNames[7] = {"i", "ii", "iii", "iv", "v", "vi", "vii"};

// Evaluates one sampled case of one axiom. Failures are data, not
// exceptions: a throwing gamma (possible once a structure is corrupted) is
// recorded as a counterexample.
template <class E>
bool evalAxiomCase(const DpStructure<E>& dp, int axiom, std::uint32_t maxN, Rng& rng,
                   Json* inputs, Json* lhsOut, Json* rhsOut) {
  auto record = [&](const E& lhs, const E& rhs, Json in) {
    bool ok = lhs == rhs;
    if (!ok && inputs) {
      *inputs = std::move(in);
      *lhsOut = dp.elemJson(lhs);
      *rhsOut = dp.elemJson(rhs);
    }
    return ok;
  };
  try {
    switch (axiom) {
      case 0: {  // gamma_0(x) = 1
        E x = dp.sampleIdeal(rng);
        return record(dp.gamma(0, x), dp.one, Json{{"x", dp.elemJson(x)}});
      }
      case 1: {  // gamma_1(x) = x
        E x = dp.sampleIdeal(rng);
        return record(dp.gamma(1, x), x, Json{{"x", dp.elemJson(x)}});
      }
      case 2: {  // n > 0: gamma_n(x) in the ideal
        E x = dp.sampleIdeal(rng);
        std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(maxN));
        E g = dp.gamma(n, x);
        bool ok = dp.idealContains(g);
        if (!ok && inputs) {
          *inputs = Json{{"x", dp.elemJson(x)}, {"n", n}};
          *lhsOut = dp.elemJson(g);
          *rhsOut = "membership in the ideal";
        }
        return ok;
      }
      case 3: {  // gamma_n(x+y) = sum_{i+j=n} gamma_i(x) gamma_j(y)
        E x = dp.sampleIdeal(rng);
        E y = dp.sampleIdeal(rng);
        std::uint32_t n = static_cast<std::uint32_t>(rng.below(maxN + 1));
        E lhs = dp.gamma(n, x + y);
        E rhs = dp.gamma(0, x) * dp.gamma(n, y);
        for (std::uint32_t i = 1; i <= n; ++i) rhs = rhs + dp.gamma(i, x) * dp.gamma(n - i, y);
        return record(lhs, rhs,
                      Json{{"x", dp.elemJson(x)}, {"y", dp.elemJson(y)}, {"n", n}});
      }
      case 4: {  // gamma_n(r x) = r^n gamma_n(x)
        E x = dp.sampleIdeal(rng);
        E r = dp.sampleRing(rng);
        std::uint32_t n = static_cast<std::uint32_t>(rng.below(maxN + 1));
        E lhs = dp.gamma(n, r * x);
        E rn = dp.one;
        for (std::uint32_t i = 0; i < n; ++i) rn = rn * r;
        return record(lhs, rn * dp.gamma(n, x),
                      Json{{"x", dp.elemJson(x)}, {"r", dp.elemJson(r)}, {"n", n}});
      }
      case 5: {  // gamma_m(x) gamma_n(x) = binom(m+n, m) gamma_{m+n}(x)
        E x = dp.sampleIdeal(rng);
        std::uint32_t m = static_cast<std::uint32_t>(rng.below(maxN + 1));
        std::uint32_t n = static_cast<std::uint32_t>(rng.below(maxN + 1));
        E lhs = dp.gamma(m, x) * dp.gamma(n, x);
        E rhs = dpNatMul(binomial(m + n, m), dp.gamma(m + n, x));
        return record(lhs, rhs, Json{{"x", dp.elemJson(x)}, {"m", m}, {"n", n}});
      }
      case 6: {  // n > 0: gamma_m(gamma_n(x)) = (mn)!/(m!(n!)^m) gamma_{mn}(x)
        E x = dp.sampleIdeal(rng);
        std::uint32_t m = static_cast<std::uint32_t>(rng.below(maxN + 1));
        std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(maxN));
        E lhs = dp.gamma(m, dp.gamma(n, x));
        E rhs = dpNatMul(uniformDpCoeff(m, n), dp.gamma(m * n, x));
        return record(lhs, rhs, Json{{"x", dp.elemJson(x)}, {"m", m}, {"n", n}});
      }
    }
  } catch (const Error& e) {
    if (inputs) {
      *inputs = Json{{"exception", e.what()}};
      *lhsOut = nullptr;
      *rhsOut = nullptr;
    }
    return false;
  }
  return false;
}

}  // namespace detail

// Runs `samples` independent cases of each of the seven axioms. Each case
// is seeded from (seed, axiom, index), so results do not depend on the
// number of workers; with jobs > 1 cases are fanned out across threads and
// the report is the deterministic fold (order-independent counts, first
// counterexample = least sample index).
template <class E>
AxiomReport checkAxioms(const DpStructure<E>& dp, std::uint64_t seed, std::uint32_t samples,
                        std::uint32_t maxN, unsigned jobs = 1) {
  if (maxN < 2) fail(Errc::UsageError, "checkAxioms needs maxN >= 2");
  AxiomReport report;
  report.seed = seed;
  report.samples = samples;
  report.maxN = maxN;
  for (int axiom = 0; axiom < 7; ++axiom) {
    AxiomResult result;
    result.axiom = detail::kAxiomNames[axiom];
    std::uint64_t axiomSeed = mixSeed(seed, static_cast<std::uint64_t>(axiom));

    auto runCase = [&](std::uint64_t idx, AxiomResult& local) {
      Rng rng(mixSeed(axiomSeed, idx));
      Json inputs, lhs, rhs;
      if (detail::evalAxiomCase(dp, axiom, maxN, rng, &inputs, &lhs, &rhs)) {
        ++local.pass;
      } else {
        ++local.fail;
        if (!local.first || idx < local.first->sampleIndex)
          local.first = Counterexample{std::move(inputs), std::move(lhs), std::move(rhs), idx};
      }
    };

    if (jobs <= 1) {
      for (std::uint64_t idx = 0; idx < samples; ++idx) runCase(idx, result);
    } else {
      std::vector<AxiomResult> partial(jobs);
      std::vector<std::thread> workers;
      for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
          for (std::uint64_t idx = w; idx < samples; idx += jobs) runCase(idx, partial[w]);
        });
      }
      for (auto& t : workers) t.join();
      for (auto& p : partial) {
        result.pass += p.pass;
        result.fail += p.fail;
        if (p.first && (!result.first || p.first->sampleIndex < result.first->sampleIndex))
          result.first = std::move(p.first);
      }
    }
    report.axioms.push_back(std::move(result));
  }
  return report;
}

// The canonical structure on a Q-algebra: gamma_n(x) = x^n / n!. The ideal
// is the monomial ideal generated by idealVars (every term divisible by one
// of them); an empty list means the whole algebra.
DpStructure<Scalar> rationalCanonical(const RingDescriptor& algebra,
                                      const std::vector<std::string>& idealVars);

// The divided power structure carried by the augmentation ideal of the
// divided power algebra itself (gammaN).
DpStructure<GammaElement> gammaAugmentation(const FreeModuleSpec& spec,
                                            std::uint64_t termBudget = kDefaultTermBudget);

// Independent brute-force route to gamma_n over Z: embed the algebra into
// Q[X_1..X_r] by b^[k] |-> prod_i X_i^(k_i)/k_i!, compute x^n/n! exactly,
// pull back by X^v |-> (prod_i v_i!) b^[v]. Every pulled-back coefficient
// must be an integer; NotIntegral would contradict the integrality of the
// divided power coefficients and must never fire.
GammaElement gammaOracle(std::uint32_t n, const GammaElement& a);

// The induced structure on the quotient by a basis-aligned submodule:
// include the reduced basis, apply gamma, project. Checks on construction
// that the kernel generators p^[n] stay in the kernel under gamma
// (KernelNotStable otherwise).
DpStructure<GammaElement> quotientDp(const DpStructure<GammaElement>& dp,
                                     const FreeModuleSpec& fullSpec,
                                     const std::set<std::string>& drop);

// Seeded single-axiom corruptions for mutation testing of the harness.
enum class DpMutation {
  ZeroGammaZero,       // gamma_0 = 0
  DoubleGammaOne,      // gamma_1 doubled
  ShiftGammaThree,     // gamma_3 + 1 (escapes the ideal)
  DoubleGammaTwo,      // gamma_2 doubled
  AddInputToGammaTwo,  // gamma_2(x) + x
  TripleGammaFour,     // gamma_4 tripled
  DoubleGammaSix,      // gamma_6 doubled
};

inline constexpr DpMutation kAllMutations[7] = {
    DpMutation::ZeroGammaZero,  DpMutation::DoubleGammaOne,     DpMutation::ShiftGammaThree,
    DpMutation::DoubleGammaTwo, DpMutation::AddInputToGammaTwo, DpMutation::TripleGammaFour,
    DpMutation::DoubleGammaSix};

template <class E>
DpStructure<E> corruptDp(DpStructure<E> dp, DpMutation m) {
  auto base = dp.gamma;
  E unit = dp.one;
  switch (m) {
    case DpMutation::ZeroGammaZero:
      dp.gamma = [base, unit](std::uint32_t n, const E& x) {
        return n == 0 ? dpNatMul(Int(0), unit) : base(n, x);
      };
      break;
    case DpMutation::DoubleGammaOne:
      dp.gamma = [base](std::uint32_t n, const E& x) {
        E g = base(n, x);
        return n == 1 ? dpNatMul(Int(2), g) : g;
      };
      break;
    case DpMutation::ShiftGammaThree:
      dp.gamma = [base, unit](std::uint32_t n, const E& x) {
        E g = base(n, x);
        return n == 3 ? g + unit : g;
      };
      break;
    case DpMutation::DoubleGammaTwo:
      dp.gamma = [base](std::uint32_t n, const E& x) {
        E g = base(n, x);
        return n == 2 ? dpNatMul(Int(2), g) : g;
      };
      break;
    case DpMutation::AddInputToGammaTwo:
      dp.gamma = [base](std::uint32_t n, const E& x) {
        E g = base(n, x);
        return n == 2 ? g + x : g;
      };
      break;
    case DpMutation::TripleGammaFour:
      dp.gamma = [base](std::uint32_t n, const E& x) {
        E g = base(n, x);
        return n == 4 ? dpNatMul(Int(3), g) : g;
      };
      break;
    case DpMutation::DoubleGammaSix:
      dp.gamma = [base](std::uint32_t n, const E& x) {
        E g = base(n, x);
        return n == 6 ? dpNatMul(Int(2), g) : g;
      };
      break;
  }
  dp.name += " (corrupted)";
  return dp;
}

// The algebra morphism granted by the weak universal property: given a
// target structure and basis images inside its ideal, send
// b^[k] |-> prod_i gamma_{k_i}(images[b_i]) and extend linearly. Satisfies
// liftToDp(x^[n]) = gamma_n(phi(x)).
template <class E>
E liftToDp(const DpStructure<E>& target, const std::map<std::string, E>& images,
           const GammaElement& a) {
  const BasisLabels& basis = a.spec().basis;
  for (const auto& label : basis.all()) {
    auto it = images.find(label);
    if (it == images.end()) fail(Errc::MalformedInput, "no image for basis label " + label);
    if (!target.idealContains(it->second))
      fail(Errc::ImageNotInIdeal, "image of " + label + " is outside the target ideal");
  }
  E acc = dpNatMul(Int(0), target.one);
  for (const auto& [k, c] : a.terms()) {
    E prod = target.one;
    for (const auto& [pos, e] : k.entries())
      prod = prod * target.gamma(e, images.at(basis.at(pos)));
    acc = acc + scalarAct(c, prod);
  }
  return acc;
}

}  // namespace gammaforge

#endif
