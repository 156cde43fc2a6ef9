#ifndef NILALG_INTERCHANGE_HPP
#define NILALG_INTERCHANGE_HPP

#include "nilalg/structure_tensor.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace nilalg {

/// Algebra interchange document:
///   { "name": string?, "dim": n,
///     "brackets": [ { "i": int, "j": int, "rhs": [ {"k": int, "c": "p/q"} ] } ] }
/// Indices are 1-based with i < j. Any schema violation throws ParseError.
StructureTensor tensor_from_json(const nlohmann::json &doc);
StructureTensor parse_tensor(std::string_view text);
StructureTensor read_tensor_file(const std::filesystem::path &path);

nlohmann::ordered_json tensor_to_json(const StructureTensor &g);

} // namespace nilalg

#endif
