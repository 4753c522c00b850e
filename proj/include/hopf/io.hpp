#pragma once

#include <string>

#include <json.hpp>

#include "hopf/cla.hpp"
#include "hopf/cobar.hpp"
#include "hopf/structure.hpp"

namespace hopf {

using Json = nlohmann::ordered_json;

// Every *_from_json function throws InputError on malformed documents.

Json monomial_to_json(const OrePresentation& alg, const Monomial& m);
Monomial monomial_from_json(const OrePresentation& alg, const Json& j);
/// [{"coeff": "q", "monomial": {...}}], highest term first.
Json element_to_json(const OrePresentation& alg, const Element& a);
Element element_from_json(const OrePresentation& alg, const Json& j);
/// Rank 2: [{"coeff", "left", "right"}]; other ranks use "factors": [...].
Json tensor_to_json(const OrePresentation& alg, const TensorElement& t);
TensorElement tensor_from_json(const OrePresentation& alg, const Json& j, size_t rank = 2);

/// {"generators": [...], "commutators": {"HIGHER,LOWER": [...]}}
Json presentation_to_json(const OrePresentation& alg);
OrePresentation presentation_from_json(const Json& j);
/// The presentation plus a "coproducts" map; absent generators are primitive.
Json hopf_to_json(const HopfPresentation& h);
HopfPresentation hopf_from_json(const Json& j);

/// {"dim", "basis", "brackets": {"i,j": [{"coeff", "basis"}]},
///  "delta": {"i": [{"coeff", "left", "right"}]}} with 0-based indices.
Json cla_to_json(const CLA& L);
CLA cla_from_json(const Json& j);

Json report_to_json(const VerificationReport& r);
Json subspace_to_json(const FilteredSubspace& s);
Json graded_lie_to_json(const GradedLie& g);
Json cobar_report_to_json(const CobarReport& r);

/// Plain-text listings: nonzero brackets and coproducts, one per line.
std::string cla_to_text(const CLA& L);
std::string graded_lie_to_text(const GradedLie& g);

enum class DocumentKind { Hopf, Cla };
/// A CLA document has "dim" or "brackets"; a presentation has "generators".
DocumentKind document_kind(const Json& j);
Json load_json_file(const std::string& path);

} // namespace hopf
