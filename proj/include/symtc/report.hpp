#pragma once

#include <json.hpp>

#include "symtc/invariants.hpp"
#include "symtc/numtheory.hpp"

namespace symtc {

inline constexpr int kSchemaVersion = 1;

/// Terms of a tensor element as [{"tensor": "...", "coeff": "..."}], at most `limit` of them.
nlohmann::json terms_json(const TensorRing& ring, const TensorElement& x, std::size_t limit = 32);
nlohmann::json to_json(const Certificate& cert);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const ZclResult& r);
nlohmann::json to_json(const AdditivityReport& r);
nlohmann::json to_json(const GaneaReport& r);
nlohmann::json to_json(const GenfunReport& r);
nlohmann::json to_json(const DiagonalPowerReport& r);

/// "[l, u]" or "v" for exact values.
std::string interval(const BoundReport& r);

}  // namespace symtc
