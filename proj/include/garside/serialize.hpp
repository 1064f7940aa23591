#pragma once

#include <string>

#include <json.hpp>

#include "garside/classify.hpp"
#include "garside/conjugacy.hpp"
#include "garside/curves.hpp"
#include "garside/family.hpp"
#include "garside/normal_form.hpp"
#include "garside/permutation.hpp"

// JSON and DOT renderings. Object keys are emitted in sorted order, so
// equal values always serialize to identical bytes.
namespace garside {

using Json = nlohmann::json;

Json to_json(const PermutationBraid& s);
PermutationBraid permutation_from_json(const Json& j);

/// {"n", "inf", "sup", "factors": [[images]...], "key"}.
Json to_json(const NormalForm& x);
/// Rebuilds and validates a normal form; throws std::invalid_argument if
/// the factors do not satisfy the normal-form invariants or the recorded
/// key/inf/sup disagree.
NormalForm normal_form_from_json(const Json& j);

Json to_json(const RoundCurve& c);
Json to_json(const BgnTrace& t);
Json to_json(const ConjugacySet& set);
Json to_json(const SingleOrbitCertificate& cert);
Json to_json(const NTVerdict& v);
Json to_json(const family::FamilyReport& report);

std::string to_dot(const ConjugacySet& set);
/// Aligned PASS/FAIL table.
std::string to_text(const family::FamilyReport& report);

}  // namespace garside
