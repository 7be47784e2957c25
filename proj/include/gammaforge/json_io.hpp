#ifndef GAMMAFORGE_JSON_IO_HPP
#define GAMMAFORGE_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "gammaforge/dpaxioms.hpp"
#include "gammaforge/gamma.hpp"
#include "gammaforge/multiindex.hpp"
#include "gammaforge/polylaw.hpp"
#include "gammaforge/scalar.hpp"

namespace gammaforge {

// Canonical JSON forms. Integers print as decimal strings, rationals as
// "p/q", residues as {"mod": n, "val": v}, polynomials as term arrays in
// canonical order. Emission order is deterministic everywhere, so a
// document is byte-identical across runs for the same value.

Json toJson(const RingDescriptor& ring);
Json toJson(const Scalar& s);
Json toJson(const MultiIndex& k);
Json toJson(const ModuleVector& v);
Json toJson(const GammaElement& a);
Json toJson(const LinearMap& f);
Json toJson(const PolyLaw& f);
Json toJson(const AxiomReport& report);

RingDescriptor ringFromJson(const Json& j);
Scalar scalarFromJson(const RingDescriptor& ring, const Json& j);
MultiIndex multiIndexFromJson(const BasisLabels& basis, const Json& j);
ModuleVector vectorFromJson(const Json& j);
GammaElement gammaFromJson(const Json& j);
LinearMap linearMapFromJson(const Json& j);
PolyLaw lawFromJson(const Json& j);

// Ring tags as used on the command line: "Z", "Q", "Z/6", "Z[X]", "Q[X,Y]".
RingDescriptor parseRingTag(const std::string& tag);

Json parseJsonText(const std::string& text);  // MalformedInput on bad syntax

}  // namespace gammaforge

#endif
