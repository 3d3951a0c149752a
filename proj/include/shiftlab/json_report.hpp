#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "shiftlab/catalog.hpp"
#include "shiftlab/verdict.hpp"

namespace shiftlab {

using Json = nlohmann::ordered_json;

/// Non-finite doubles become the strings "inf", "-inf", "nan".
Json json_number(double v);

Json to_json(const TruncationBudget& b);
Json to_json(const Witness& w);
Json to_json(const Verdict& v);
Json to_json(const PropertyReport& r);
Json to_json(const std::vector<VerificationRow>& rows);
/// Timing is left out so that repeated runs serialize identically.
Json to_json(const EntryVerification& e);
Json catalog_json(const std::vector<EntryVerification>& entries, const TruncationBudget& b);

/// Two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace shiftlab
