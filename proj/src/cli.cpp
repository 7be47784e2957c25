#include "gammaforge/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "gammaforge/basechange.hpp"
#include "gammaforge/dpaxioms.hpp"
#include "gammaforge/json_io.hpp"
#include "gammaforge/polylaw.hpp"

namespace gammaforge {

namespace {

struct CliConfig {
  std::string inputPath;
  std::string inlineJson;
  std::string outputPath;
  std::uint64_t seed = kDefaultSeed;
  std::uint32_t samples = 200;
  std::uint32_t maxN = 4;
  std::uint64_t budget = kDefaultTermBudget;
  unsigned jobs = 1;
  bool pretty = false;
};

Json readInput(const CliConfig& cfg) {
  if (!cfg.inlineJson.empty()) return parseJsonText(cfg.inlineJson);
  if (!cfg.inputPath.empty()) {
    std::ifstream in(cfg.inputPath);
    if (!in) fail(Errc::MalformedInput, "cannot read " + cfg.inputPath);
    std::stringstream ss;
    ss << in.rdbuf();
    return parseJsonText(ss.str());
  }
  fail(Errc::UsageError, "provide --input <path> or --json <text>");
}

bool hasInput(const CliConfig& cfg) { return !cfg.inlineJson.empty() || !cfg.inputPath.empty(); }

FreeModuleSpec rankSpec(const RingDescriptor& ring, std::uint32_t rank) {
  std::vector<std::string> labels;
  for (std::uint32_t i = 1; i <= rank; ++i) labels.push_back("b" + std::to_string(i));
  return FreeModuleSpec{ring, BasisLabels(labels)};
}

Json basechangeJson(const BasechangeReport& r) {
  return Json{{"extension", r.extension},
              {"samples", r.samples},
              {"seed", r.seed},
              {"checks",
               Json{{"additiveFail", r.additiveFail},
                    {"multiplicativeFail", r.multiplicativeFail},
                    {"unitalFail", r.unitalFail},
                    {"roundTripFail", r.roundTripFail},
                    {"generatorFormulaFail", r.generatorFormulaFail},
                    {"dpCompatFail", r.dpCompatFail}}},
              {"mutationDetected", r.mutationDetected},
              {"allPass", r.allPass()}};
}

}  // namespace

CliResult runCli(const std::vector<std::string>& args) {
  CliConfig cfg;
  CLI::App app{"exact computations and property suites for divided power algebras"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  app.add_option("--input", cfg.inputPath, "path to the input JSON document");
  app.add_option("--json", cfg.inlineJson, "inline input JSON");
  app.add_option("--output", cfg.outputPath, "write the result here instead of stdout");
  app.add_option("--seed", cfg.seed, "seed for every sampling suite")
      ->envname("GAMMA_FORGE_SEED");
  app.add_option("--samples", cfg.samples, "samples per property")->check(CLI::PositiveNumber);
  app.add_option("--max-n", cfg.maxN, "largest divided power index exercised")
      ->check(CLI::Range(2u, 64u));
  app.add_option("--budget", cfg.budget, "intermediate term budget for gamma expansion");
  app.add_option("--jobs", cfg.jobs, "worker threads for the axiom harness")
      ->check(CLI::PositiveNumber);
  app.add_flag("--pretty", cfg.pretty, "indent the output document");

  std::uint32_t n = 0;
  std::uint32_t degree = 0;
  std::uint32_t rank = 2;
  std::uint64_t modulus = 0;
  std::uint32_t mIndex = 0;
  std::string ringTag = "Z";
  std::string algebraKind = "gamma";
  std::string extensionTag;
  std::vector<std::string> dropLabels;
  std::vector<std::string> idealVars;

  CLI::App* gammaMul = app.add_subcommand("gamma-mul", "product of two algebra elements");
  CLI::App* gammaDp = app.add_subcommand("gamma-dp", "divided power x^[n] of a module vector");
  gammaDp->add_option("--n", n, "power index")->required();
  CLI::App* gammaNCmd = app.add_subcommand("gamma-n", "gamma_n of an augmentation ideal element");
  gammaNCmd->add_option("--n", n, "power index")->required();
  CLI::App* gammaMap = app.add_subcommand("gamma-map", "apply the morphism induced by a linear map");
  CLI::App* gammaQuot =
      app.add_subcommand("gamma-quotient", "project onto the quotient by a basis span");
  gammaQuot->add_option("--drop", dropLabels, "basis label to drop (repeatable)")->required();
  CLI::App* axioms = app.add_subcommand("axioms-check", "run the seven-axiom property suite");
  axioms->add_option("--ring", ringTag, "coefficient ring tag, e.g. Z, Q, Z/6, Q[X]");
  axioms->add_option("--rank", rank, "basis rank for the gamma algebra");
  axioms->add_option("--algebra", algebraKind, "gamma (augmentation ideal) or rational (x^n/n!)")
      ->check(CLI::IsMember({"gamma", "rational"}));
  axioms->add_option("--ideal", idealVars, "ideal generator variable (rational algebra)");
  CLI::App* oracle = app.add_subcommand("oracle-check", "gamma_n against the fraction-field oracle");
  oracle->add_option("--rank", rank, "basis rank");
  CLI::App* lawEval = app.add_subcommand("law-eval", "evaluate a polynomial law at a point");
  CLI::App* lawCoeff = app.add_subcommand("law-coeff", "coefficients relative to a family");
  CLI::App* lawComp = app.add_subcommand("law-component", "homogeneous component of a law");
  lawComp->add_option("--degree", degree, "component degree")->required();
  CLI::App* lawDiff = app.add_subcommand("law-diff", "divided differential of a law");
  lawDiff->add_option("--n", n, "differential order")->required();
  CLI::App* lawFactor =
      app.add_subcommand("law-factor", "linear factorization of a homogeneous law");
  CLI::App* basechange =
      app.add_subcommand("basechange-verify", "isomorphism suite for a ring extension");
  basechange->add_option("--extension", extensionTag, "extension tag, e.g. Z->Q, Z->Z[X]")
      ->required();
  basechange->add_option("--rank", rank, "basis rank");
  CLI::App* reduction =
      app.add_subcommand("reduction-check", "gamma commutes with reduction mod n");
  reduction->add_option("--mod", modulus, "modulus")->required();
  CLI::Option* mOpt = reduction->add_option("--m", mIndex, "gamma index (single-case mode)");
  reduction->add_option("--rank", rank, "basis rank (suite mode)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return {0, app.help()};
  } catch (const CLI::ParseError& e) {
    Json err{{"error", Json{{"kind", "UsageError"}, {"detail", e.what()}}}};
    return {2, err.dump() + "\n"};
  }

  int exitCode = 0;
  Json doc;
  try {
    if (app.got_subcommand(gammaMul)) {
      Json in = readInput(cfg);
      GammaElement a = gammaFromJson(in.at("a"));
      GammaElement b = gammaFromJson(in.at("b"));
      doc = toJson(a * b);
    } else if (app.got_subcommand(gammaDp)) {
      doc = toJson(dpGenerator(n, vectorFromJson(readInput(cfg))));
    } else if (app.got_subcommand(gammaNCmd)) {
      doc = toJson(gammaN(n, gammaFromJson(readInput(cfg)), cfg.budget));
    } else if (app.got_subcommand(gammaMap)) {
      Json in = readInput(cfg);
      LinearMap f = linearMapFromJson(in.at("map"));
      doc = toJson(mapLinear(f, gammaFromJson(in.at("element"))));
    } else if (app.got_subcommand(gammaQuot)) {
      std::set<std::string> drop(dropLabels.begin(), dropLabels.end());
      doc = toJson(quotientByBasisSpan(drop, gammaFromJson(readInput(cfg))));
    } else if (app.got_subcommand(axioms)) {
      RingDescriptor ring = parseRingTag(ringTag);
      AxiomReport report;
      std::string structureName;
      if (algebraKind == "rational") {
        DpStructure<Scalar> dp = rationalCanonical(ring, idealVars);
        structureName = dp.name;
        report = checkAxioms(dp, cfg.seed, cfg.samples, cfg.maxN, cfg.jobs);
      } else {
        DpStructure<GammaElement> dp = gammaAugmentation(rankSpec(ring, rank), cfg.budget);
        structureName = dp.name;
        report = checkAxioms(dp, cfg.seed, cfg.samples, cfg.maxN, cfg.jobs);
      }
      doc = Json{{"structure", structureName}, {"report", toJson(report)}};
      if (!report.allPass()) exitCode = 1;
    } else if (app.got_subcommand(oracle)) {
      FreeModuleSpec spec = rankSpec(RingDescriptor::integers(), rank);
      std::uint64_t failures = 0;
      Json first = nullptr;
      for (std::uint32_t i = 0; i < cfg.samples; ++i) {
        Rng rng(mixSeed(cfg.seed, i));
        GammaElement a = sampleAugmentation(rng, spec);
        std::uint32_t gn = 1 + static_cast<std::uint32_t>(rng.below(cfg.maxN));
        GammaElement lhs = gammaN(gn, a, cfg.budget);
        GammaElement rhs = gammaOracle(gn, a);
        if (lhs != rhs) {
          ++failures;
          if (first.is_null())
            first = Json{{"n", gn}, {"input", toJson(a)}, {"gammaN", toJson(lhs)},
                         {"oracle", toJson(rhs)}};
        }
      }
      doc = Json{{"cases", cfg.samples}, {"rank", rank},   {"seed", cfg.seed},
                 {"failures", failures}, {"first", first}, {"allPass", failures == 0}};
      if (failures) exitCode = 1;
    } else if (app.got_subcommand(lawEval)) {
      Json in = readInput(cfg);
      PolyLaw f = lawFromJson(in.at("law"));
      RingDescriptor algebra = ringFromJson(in.at("algebra"));
      ModuleVector point(FreeModuleSpec{algebra, f.source().basis});
      for (const auto& [label, c] : in.at("point").items())
        point.accumulate(static_cast<std::uint32_t>(f.source().basis.indexOf(label)),
                         scalarFromJson(algebra, c));
      doc = toJson(evalAt(f, algebra, point));
    } else if (app.got_subcommand(lawCoeff)) {
      Json in = readInput(cfg);
      PolyLaw f = lawFromJson(in.at("law"));
      std::vector<std::string> labels;
      for (const auto& l : in.at("family").at("labels")) labels.push_back(l.get<std::string>());
      std::vector<ModuleVector> family;
      for (const auto& v : in.at("family").at("vectors")) family.push_back(vectorFromJson(v));
      BasisLabels familyLabels(labels);
      PolyLaw table(FreeModuleSpec{f.source().ring, familyLabels}, f.target());
      for (const auto& [k, vec] : coeffOf(f, familyLabels, family)) table.accumulate(k, vec);
      doc = toJson(table);
    } else if (app.got_subcommand(lawComp)) {
      doc = toJson(component(lawFromJson(readInput(cfg)), degree));
    } else if (app.got_subcommand(lawDiff)) {
      PolyLaw f = lawFromJson(readInput(cfg));
      PolyLaw structural = dividedDifferentialStructural(n, f);
      bool agree = structural == dividedDifferentialExtraction(n, f);
      doc = Json{{"law", toJson(structural)}, {"pathsAgree", agree}};
      if (!agree) exitCode = 1;
    } else if (app.got_subcommand(lawFactor)) {
      PolyLaw f = lawFromJson(readInput(cfg));
      auto d = homogeneousDegree(f);
      if (!d) fail(Errc::NotHomogeneous, "law mixes degrees; factor a component instead");
      doc = Json{{"degree", *d}, {"map", toJson(factorHomogeneous(f, *d))}};
    } else if (app.got_subcommand(basechange)) {
      BasechangeReport report =
          verifyExtension(parseExtensionTag(extensionTag), rank, cfg.seed, cfg.samples);
      doc = basechangeJson(report);
      if (!report.allPass()) exitCode = 1;
    } else if (app.got_subcommand(reduction)) {
      if (hasInput(cfg)) {
        if (mOpt->count() == 0) fail(Errc::UsageError, "single-case mode needs --m");
        bool commutes = reductionSquare(modulus, gammaFromJson(readInput(cfg)), mIndex, cfg.budget);
        doc = Json{{"modulus", modulus}, {"m", mIndex}, {"commutes", commutes}};
        if (!commutes) exitCode = 1;
      } else {
        FreeModuleSpec spec = rankSpec(RingDescriptor::integers(), rank);
        std::uint64_t failures = 0;
        for (std::uint32_t i = 0; i < cfg.samples; ++i) {
          Rng rng(mixSeed(cfg.seed, 0xced + i));
          GammaElement a = sampleAugmentation(rng, spec);
          std::uint32_t m = 1 + static_cast<std::uint32_t>(rng.below(cfg.maxN));
          if (!reductionSquare(modulus, a, m, cfg.budget)) ++failures;
        }
        doc = Json{{"modulus", modulus}, {"cases", cfg.samples}, {"seed", cfg.seed},
                   {"failures", failures}, {"allPass", failures == 0}};
        if (failures) exitCode = 1;
      }
    }
  } catch (const Error& e) {
    Json err{{"error", Json{{"kind", errcName(e.kind())}, {"detail", e.detail()}}}};
    return {2, err.dump() + "\n"};
  } catch (const Json::exception& e) {
    Json err{{"error", Json{{"kind", "MalformedInput"}, {"detail", e.what()}}}};
    return {2, err.dump() + "\n"};
  }

  std::string text = cfg.pretty ? doc.dump(2) + "\n" : doc.dump() + "\n";
  if (!cfg.outputPath.empty()) {
    std::ofstream out(cfg.outputPath);
    if (!out) {
      Json err{{"error", Json{{"kind", "UsageError"}, {"detail", "cannot write " + cfg.outputPath}}}};
      return {2, err.dump() + "\n"};
    }
    out << text;
    return {exitCode, ""};
  }
  return {exitCode, text};
}

}  // namespace gammaforge
