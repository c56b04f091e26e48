#pragma once

#include <string>

#include "pipedreams/classes.hpp"
#include "pipedreams/core.hpp"
#include "pipedreams/dreams.hpp"
#include "pipedreams/shifts.hpp"

// JSON interchange (1-based indices everywhere) and ASCII renderings.

namespace pipedreams {

std::string to_json(const PartialPermutation& f);
std::string to_json(const BoundedAffinePermutation& j);
std::string to_json(const Collection& c);
std::string to_json(const SchubertExpansion& e);
std::string to_json(const PipeDream& p);

PartialPermutation partial_permutation_from_json(const std::string& text);
BoundedAffinePermutation pattern_from_json(const std::string& text);

// Accepts either {"n":..,"dots":[..]} or {"n":..,"window":[..]}; a window is
// accepted only when it names an interval positroid pattern.
PartialPermutation variety_from_json(const std::string& text);

std::string render_dream_ascii(const PipeDream& p);

}  // namespace pipedreams
