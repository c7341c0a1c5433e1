#pragma once

#include <string>

#include "json.hpp"

#include "fusionprod/fusion.hpp"
#include "fusionprod/presented.hpp"
#include "fusionprod/schur.hpp"

namespace fusionprod {

using json = nlohmann::ordered_json;

/// Character as a sorted array of [[c_1..c_n], mult] entries.
json character_to_json(const CharacterPoly& ch);

/// Graded character as a sorted array of [[c_1..c_n], degree, mult] entries.
json graded_character_to_json(const GradedCharacter& gc);

/// Module dump: dimension, weight list, sparse matrices as
/// (row, col, numerator, denominator) quadruples per generator.
json module_to_json(const ExplicitModule& mod);

json verdict_to_json(const Verdict& v);
json schur_verdict_to_json(const SchurVerdict& v);
json caps_to_json(const RelationCaps& caps);

std::string partition_str(const Partition& p);

}  // namespace fusionprod
