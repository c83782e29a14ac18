#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "coupled_fp/ordered_space.hpp"

namespace coupled_fp {

/// Element of a finite space: an index into its element list.
using Index = std::size_t;
using FiniteSpace = SpaceModel<Index, Rational>;

/// Raw matrices describing a finite ordered metric space.
/// `leq[i][j]` is true iff element i ≤ element j.
struct FiniteSpaceData {
  std::vector<std::string> labels;
  std::vector<std::vector<Rational>> distance;
  std::vector<std::vector<bool>> leq;

  std::size_t size() const { return labels.size(); }
};

/// Builds a space model over indices 0..n-1. Validates shapes only; whether the
/// matrices form a metric and a partial order is `audit_space`'s job.
FiniteSpace make_finite_space(FiniteSpaceData data, std::string description = "finite space");

/// Parses `{"elements": [...], "distance": [[...]], "leq": [[...]]}`.
/// Distances may be JSON integers, decimals, or strings such as "3/2".
/// Errors carry the JSON location of the offending entry.
FiniteSpaceData parse_finite_space(const nlohmann::json& doc);

/// Exact value of a JSON scalar (number or "p/q" string).
Rational json_rational(const nlohmann::json& value, const std::string& where);

}  // namespace coupled_fp
