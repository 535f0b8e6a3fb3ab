#pragma once

#include "wreath/characters.hpp"
#include "wreath/classes.hpp"
#include "wreath/model.hpp"
#include "wreath/tableaux.hpp"

#include <json.hpp>

#include <string>

namespace wreath {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Json to_json(const MultiPartition& mu);
Json to_json(const Tableau& t);
Json to_json(const StandardMultiTableau& t);
Json to_json(const SymmetricClassLabel& label);
Json to_json(const ConjClassLabel& label);
Json to_json(const ClassDecomposition& dec);

// full character table of G(r,n), reproducible bit for bit
Json character_table_json(int r, int n);
// inverse of character_table_json; throws on malformed input
std::vector<ClassFunction> character_table_from_json(const Json& doc, int r, int n);

} // namespace wreath
