#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "pcf/choice_function.hpp"
#include "pcf/decompose.hpp"
#include "pcf/poset.hpp"

namespace pcf::io {

// {"elements": ["a","b","c"], "le": [["a","c"],["b","c"]]}
// where a pair [x, y] states x <= y; the closure is computed on load.
Poset poset_from_json(const nlohmann::json& j);
Poset load_poset(const std::filesystem::path& path);
nlohmann::json poset_to_json(const Poset& p);

// {"poset": <path or inline poset object>, "map": [{"from": [...], "to": [...]}, ...]}
// A missing entry for the empty ideal defaults to empty. A relative poset
// path is resolved against the file's own directory. When `expected` is set
// the file's poset (if any) must match it; a file without a "poset" key is
// adopted onto `expected`.
ChoiceFunction cf_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir,
                            LatticePtr expected = nullptr,
                            std::size_t ideal_cap = kDefaultIdealCap);
ChoiceFunction load_cf(const std::filesystem::path& path, LatticePtr expected = nullptr,
                       std::size_t ideal_cap = kDefaultIdealCap);
nlohmann::json cf_table_to_json(const ChoiceFunction& f);

// {"sequences": [["a","b"],["b","a"]]}
nlohmann::json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const nlohmann::json& j, LatticePtr lattice);
void save_decomposition(const Decomposition& d, const std::filesystem::path& path);
Decomposition load_decomposition(const std::filesystem::path& path, LatticePtr lattice);

nlohmann::json set_to_json(const Poset& p, ElemSet s);
nlohmann::json sequence_to_json(const Poset& p, const Sequence& a);

}  // namespace pcf::io
