#include "gammaforge/json_io.hpp"

#include <algorithm>

namespace gammaforge {

namespace {

Int intFromJson(const Json& j, const char* what) {
  try {
    if (j.is_string()) return Int(j.get<std::string>());
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  } catch (const std::exception&) {
  }
  fail(Errc::MalformedInput, std::string("expected an integer for ") + what);
}

std::uint32_t natFromJson(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    fail(Errc::MalformedInput, std::string("expected a natural number for ") + what);
  return j.get<std::uint32_t>();
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(Errc::MalformedInput, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Json parseJsonText(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
}

// --- rings ------------------------------------------------------------------

Json toJson(const RingDescriptor& ring) {
  switch (ring.kind()) {
    case RingKind::Integers: return Json("Z");
    case RingKind::Rationals: return Json("Q");
    case RingKind::IntegersMod: return Json{{"mod", ring.modulus()}};
    case RingKind::Poly:
      return Json{{"poly", Json{{"base", toJson(ring.base())}, {"vars", ring.vars()}}}};
  }
  fail(Errc::UnsupportedRing, "toJson(ring)");
}

RingDescriptor ringFromJson(const Json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "Z") return RingDescriptor::integers();
    if (s == "Q") return RingDescriptor::rationals();
    return parseRingTag(s);
  }
  if (j.is_object() && j.contains("mod")) {
    Int m = intFromJson(j.at("mod"), "modulus");
    if (m < 2 || m > Int(std::numeric_limits<std::uint64_t>::max()))
      fail(Errc::ModulusInvalid, "modulus out of range");
    return RingDescriptor::integersMod(m.convert_to<std::uint64_t>());
  }
  if (j.is_object() && j.contains("poly")) {
    const Json& p = j.at("poly");
    std::vector<std::string> vars;
    for (const auto& v : member(p, "vars")) vars.push_back(v.get<std::string>());
    return RingDescriptor::poly(ringFromJson(member(p, "base")), std::move(vars));
  }
  fail(Errc::MalformedInput, "unrecognized ring descriptor");
}

RingDescriptor parseRingTag(const std::string& tag) {
  std::string head = tag;
  std::vector<std::string> vars;
  auto bracket = tag.find('[');
  if (bracket != std::string::npos) {
    if (tag.back() != ']') fail(Errc::MalformedInput, "unterminated variable list in " + tag);
    head = tag.substr(0, bracket);
    std::string body = tag.substr(bracket + 1, tag.size() - bracket - 2);
    std::string cur;
    for (char c : body) {
      if (c == ',') {
        vars.push_back(cur);
        cur.clear();
      } else if (c != ' ') {
        cur += c;
      }
    }
    if (!cur.empty()) vars.push_back(cur);
    if (vars.empty()) fail(Errc::MalformedInput, "empty variable list in " + tag);
  }
  RingDescriptor base = RingDescriptor::integers();
  if (head == "Z") {
    base = RingDescriptor::integers();
  } else if (head == "Q") {
    base = RingDescriptor::rationals();
  } else if (head.rfind("Z/", 0) == 0) {
    try {
      base = RingDescriptor::integersMod(std::stoull(head.substr(2)));
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(Errc::MalformedInput, "bad modulus in ring tag " + tag);
    }
  } else {
    fail(Errc::MalformedInput, "unrecognized ring tag " + tag);
  }
  return vars.empty() ? base : RingDescriptor::poly(base, std::move(vars));
}

// --- scalars ----------------------------------------------------------------

Json toJson(const Scalar& s) {
  switch (s.ring().kind()) {
    case RingKind::Integers: return Json(s.asInt().str());
    case RingKind::Rationals: {
      const Rat& q = s.asRat();
      return Json(numerator(q).str() + "/" + denominator(q).str());
    }
    case RingKind::IntegersMod:
      return Json{{"mod", s.ring().modulus()}, {"val", s.asInt().convert_to<std::uint64_t>()}};
    case RingKind::Poly: {
      Json terms = Json::array();
      for (const auto& t : s.asPoly()) {
        Json exps = Json::object();
        for (std::size_t i = 0; i < t.exps.size(); ++i)
          if (t.exps[i]) exps[s.ring().vars()[i]] = t.exps[i];
        terms.push_back(Json{{"exps", exps}, {"coeff", toJson(t.coeff)}});
      }
      return terms;
    }
  }
  fail(Errc::UnsupportedRing, "toJson(scalar)");
}

Scalar scalarFromJson(const RingDescriptor& ring, const Json& j) {
  switch (ring.kind()) {
    case RingKind::Integers: return Scalar::integer(intFromJson(j, "integer"));
    case RingKind::Rationals: {
      if (j.is_string()) {
        std::string s = j.get<std::string>();
        auto slash = s.find('/');
        try {
          if (slash == std::string::npos) return Scalar::rational(Rat(Int(s)));
          Int num(s.substr(0, slash));
          Int den(s.substr(slash + 1));
          if (den == 0) fail(Errc::MalformedInput, "zero denominator");
          return Scalar::rational(num, den);
        } catch (const Error&) {
          throw;
        } catch (const std::exception&) {
          fail(Errc::MalformedInput, "bad rational " + s);
        }
      }
      if (j.is_number_integer()) return Scalar::rational(Rat(j.get<std::int64_t>()));
      fail(Errc::MalformedInput, "expected a \"p/q\" string");
    }
    case RingKind::IntegersMod: {
      Int mod = intFromJson(member(j, "mod"), "modulus");
      if (mod != Int(ring.modulus()))
        fail(Errc::RingMismatch, "residue modulus " + mod.str() + " vs ring " + ring.tag());
      return Scalar::fromInt(ring, intFromJson(member(j, "val"), "residue"));
    }
    case RingKind::Poly: {
      if (!j.is_array()) fail(Errc::MalformedInput, "polynomial must be a term array");
      Scalar::PolyTerms terms;
      for (const auto& t : j) {
        std::vector<std::uint32_t> exps(ring.vars().size(), 0);
        for (const auto& [var, e] : member(t, "exps").items())
          exps[ring.varIndex(var)] = natFromJson(e, "exponent");
        terms.push_back({std::move(exps), scalarFromJson(ring.base(), member(t, "coeff"))});
      }
      return Scalar::fromPolyTerms(ring, std::move(terms));
    }
  }
  fail(Errc::UnsupportedRing, "scalarFromJson");
}

// --- indices and module elements ---------------------------------------------

Json toJson(const MultiIndex& k) {
  Json exps = Json::object();
  for (const auto& [pos, e] : k.entries()) exps[k.basis().at(pos)] = e;
  return Json{{"exps", exps}};
}

MultiIndex multiIndexFromJson(const BasisLabels& basis, const Json& j) {
  std::map<std::string, std::uint32_t> exps;
  for (const auto& [label, e] : member(j, "exps").items())
    exps[label] = natFromJson(e, "exponent");
  return MultiIndex::fromExps(basis, exps);
}

Json toJson(const ModuleVector& v) {
  Json coords = Json::object();
  for (const auto& [pos, c] : v.coords()) coords[v.spec().basis.at(pos)] = toJson(c);
  return Json{{"ring", toJson(v.spec().ring)}, {"basis", v.spec().basis.all()},
              {"coords", coords}};
}

ModuleVector vectorFromJson(const Json& j) {
  RingDescriptor ring = ringFromJson(member(j, "ring"));
  std::vector<std::string> labels;
  for (const auto& l : member(j, "basis")) labels.push_back(l.get<std::string>());
  FreeModuleSpec spec{ring, BasisLabels(labels)};
  ModuleVector v(spec);
  for (const auto& [label, c] : member(j, "coords").items())
    v.accumulate(static_cast<std::uint32_t>(spec.basis.indexOf(label)),
                 scalarFromJson(ring, c));
  return v;
}

Json toJson(const GammaElement& a) {
  Json terms = Json::array();
  for (const auto& [k, c] : a.terms())
    terms.push_back(Json{{"exps", toJson(k).at("exps")}, {"coeff", toJson(c)}});
  return Json{{"ring", toJson(a.spec().ring)}, {"basis", a.spec().basis.all()},
              {"terms", terms}};
}

GammaElement gammaFromJson(const Json& j) {
  RingDescriptor ring = ringFromJson(member(j, "ring"));
  std::vector<std::string> labels;
  for (const auto& l : member(j, "basis")) labels.push_back(l.get<std::string>());
  FreeModuleSpec spec{ring, BasisLabels(labels)};
  GammaElement a(spec);
  for (const auto& t : member(j, "terms"))
    a.accumulate(multiIndexFromJson(spec.basis, t),
                 scalarFromJson(ring, member(t, "coeff")));
  return a;
}

Json toJson(const LinearMap& f) {
  Json columns = Json::object();
  for (const auto& [pos, column] : f.columns) {
    Json entries = Json::object();
    for (const auto& [tpos, c] : column.coords()) entries[f.target.basis.at(tpos)] = toJson(c);
    columns[f.source.at(pos)] = entries;
  }
  return Json{{"ring", toJson(f.target.ring)}, {"source", f.source.all()},
              {"target", f.target.basis.all()}, {"columns", columns}};
}

LinearMap linearMapFromJson(const Json& j) {
  RingDescriptor ring = ringFromJson(member(j, "ring"));
  std::vector<std::string> src, tgt;
  for (const auto& l : member(j, "source")) src.push_back(l.get<std::string>());
  for (const auto& l : member(j, "target")) tgt.push_back(l.get<std::string>());
  LinearMap f{BasisLabels(src), FreeModuleSpec{ring, BasisLabels(tgt)}, {}};
  for (const auto& [label, entries] : member(j, "columns").items()) {
    ModuleVector column(f.target);
    for (const auto& [tlabel, c] : entries.items())
      column.accumulate(static_cast<std::uint32_t>(f.target.basis.indexOf(tlabel)),
                        scalarFromJson(ring, c));
    f.columns.emplace(static_cast<std::uint32_t>(f.source.indexOf(label)), column);
  }
  return f;
}

Json toJson(const PolyLaw& f) {
  Json coeffs = Json::array();
  for (const auto& [k, vec] : f.coeffs()) {
    Json entries = Json::object();
    for (const auto& [tpos, c] : vec.coords()) entries[f.target().basis.at(tpos)] = toJson(c);
    coeffs.push_back(Json{{"exps", toJson(k).at("exps")}, {"vector", entries}});
  }
  return Json{{"source", Json{{"ring", toJson(f.source().ring)}, {"basis", f.source().basis.all()}}},
              {"target", Json{{"ring", toJson(f.target().ring)}, {"basis", f.target().basis.all()}}},
              {"coeffs", coeffs}};
}

PolyLaw lawFromJson(const Json& j) {
  const Json& js = member(j, "source");
  const Json& jt = member(j, "target");
  std::vector<std::string> src, tgt;
  for (const auto& l : member(js, "basis")) src.push_back(l.get<std::string>());
  for (const auto& l : member(jt, "basis")) tgt.push_back(l.get<std::string>());
  RingDescriptor ring = ringFromJson(member(js, "ring"));
  if (ring != ringFromJson(member(jt, "ring")))
    fail(Errc::SpecMismatch, "law source and target rings differ");
  PolyLaw f(FreeModuleSpec{ring, BasisLabels(src)}, FreeModuleSpec{ring, BasisLabels(tgt)});
  for (const auto& t : member(j, "coeffs")) {
    ModuleVector vec(f.target());
    for (const auto& [label, c] : member(t, "vector").items())
      vec.accumulate(static_cast<std::uint32_t>(f.target().basis.indexOf(label)),
                     scalarFromJson(ring, c));
    f.accumulate(multiIndexFromJson(f.source().basis, t), vec);
  }
  return f;
}

// --- reports -----------------------------------------------------------------

Json toJson(const AxiomReport& report) {
  Json axioms = Json::array();
  for (const auto& a : report.axioms) {
    Json entry{{"axiom", a.axiom}, {"pass", a.pass}, {"fail", a.fail}};
    if (a.first) {
      entry["counterexample"] = Json{{"inputs", a.first->inputs},
                                     {"lhs", a.first->lhs},
                                     {"rhs", a.first->rhs},
                                     {"sampleIndex", a.first->sampleIndex}};
    } else {
      entry["counterexample"] = nullptr;
    }
    entry["seed"] = report.seed;
    entry["maxN"] = report.maxN;
    axioms.push_back(std::move(entry));
  }
  return Json{{"seed", report.seed},
              {"samples", report.samples},
              {"maxN", report.maxN},
              {"allPass", report.allPass()},
              {"axioms", axioms}};
}

}  // namespace gammaforge
