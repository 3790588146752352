#pragma once

#include <json.hpp>

#include <vector>

#include "latpoly/linalg.hpp"

namespace latpoly::detail {

/// An integer given as a JSON integer or a decimal string.
Integer integerFromJson(const nlohmann::json& value);

/// A nonempty array of equal-length integer arrays.
std::vector<IntVector> pointsFromJson(const nlohmann::json& value);

nlohmann::json pointsToJson(const std::vector<IntVector>& points);

}  // namespace latpoly::detail
