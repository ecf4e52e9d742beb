#include "pcf/io.hpp"

#include <fstream>
#include <utility>
#include <vector>

namespace pcf::io {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorKind::ParseError, msg); }

json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  json j = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) fail("invalid JSON in " + path.string());
  return j;
}

std::vector<std::string> string_array(const json& j, const std::string& key) {
  if (!j.is_array()) fail("\"" + key + "\" must be an array of strings");
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_string()) fail("\"" + key + "\" must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

ElemSet set_from_json(const Poset& p, const json& j, const std::string& key) {
  ElemSet s;
  for (const auto& name : string_array(j, key)) s.add(p.index_of(name));
  return s;
}

}  // namespace

Poset poset_from_json(const json& j) {
  if (!j.is_object()) fail("poset must be a JSON object");
  if (!j.contains("elements")) fail("poset is missing \"elements\"");
  std::vector<std::string> elements = string_array(j.at("elements"), "elements");

  std::vector<std::pair<std::string, std::string>> le;
  if (j.contains("le")) {
    const json& pairs = j.at("le");
    if (!pairs.is_array()) fail("\"le\" must be an array of pairs");
    for (const auto& pair : pairs) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
        fail("every \"le\" entry must be a pair of element names");
      le.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
  }
  return Poset::build(elements, le);
}

Poset load_poset(const std::filesystem::path& path) { return poset_from_json(parse_file(path)); }

json poset_to_json(const Poset& p) {
  json j;
  j["elements"] = p.elements();
  json le = json::array();
  // Cover pairs are enough to reconstruct the order; emit them for brevity.
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      if (x == y || !p.le(x, y)) continue;
      bool cover = true;
      for (int z = 0; z < p.size(); ++z)
        if (z != x && z != y && p.le(x, z) && p.le(z, y)) cover = false;
      if (cover) le.push_back(json::array({p.name(x), p.name(y)}));
    }
  j["le"] = std::move(le);
  return j;
}

ChoiceFunction cf_from_json(const json& j, const std::filesystem::path& base_dir,
                            LatticePtr expected, std::size_t ideal_cap) {
  if (!j.is_object()) fail("choice function must be a JSON object");

  LatticePtr lattice;
  if (j.contains("poset")) {
    const json& pj = j.at("poset");
    Poset p = [&] {
      if (pj.is_string()) {
        std::filesystem::path ref(pj.get<std::string>());
        if (ref.is_relative()) ref = base_dir / ref;
        return load_poset(ref);
      }
      return poset_from_json(pj);
    }();
    if (expected) {
      if (!(p == expected->poset()))
        throw Error(ErrorKind::PosetMismatch,
                    "choice function file names a different poset than the one given");
      lattice = std::move(expected);
    } else {
      lattice = IdealLattice::build(std::move(p), ideal_cap);
    }
  } else if (expected) {
    lattice = std::move(expected);
  } else {
    fail("choice function is missing \"poset\"");
  }

  if (!j.contains("map")) fail("choice function is missing \"map\"");
  const json& map = j.at("map");
  if (!map.is_array()) fail("\"map\" must be an array");

  const Poset& p = lattice->poset();
  std::vector<std::pair<ElemSet, ElemSet>> table;
  table.reserve(map.size());
  for (const auto& entry : map) {
    if (!entry.is_object() || !entry.contains("from") || !entry.contains("to"))
      fail("every \"map\" entry must be an object with \"from\" and \"to\"");
    table.emplace_back(set_from_json(p, entry.at("from"), "from"),
                       set_from_json(p, entry.at("to"), "to"));
  }
  return ChoiceFunction::from_table(lattice, table);
}

ChoiceFunction load_cf(const std::filesystem::path& path, LatticePtr expected,
                       std::size_t ideal_cap) {
  return cf_from_json(parse_file(path), path.parent_path(), std::move(expected), ideal_cap);
}

json set_to_json(const Poset& p, ElemSet s) {
  json names = json::array();
  for (int x : s.members()) names.push_back(p.name(x));
  return names;
}

json sequence_to_json(const Poset& p, const Sequence& a) {
  json names = json::array();
  for (int x : a.items()) names.push_back(p.name(x));
  return names;
}

json cf_table_to_json(const ChoiceFunction& f) {
  const Poset& p = f.poset();
  json map = json::array();
  for (std::size_t i = 0; i < f.ideal_count(); ++i)
    map.push_back({{"from", set_to_json(p, f.ideal(i))}, {"to", set_to_json(p, f.value(i))}});
  return json{{"map", std::move(map)}};
}

json decomposition_to_json(const Decomposition& d) {
  const Poset& p = d.lattice->poset();
  json seqs = json::array();
  for (const Sequence& a : d.sequences) seqs.push_back(sequence_to_json(p, a));
  return json{{"sequences", std::move(seqs)}};
}

Decomposition decomposition_from_json(const json& j, LatticePtr lattice) {
  if (!j.is_object() || !j.contains("sequences")) fail("decomposition is missing \"sequences\"");
  const json& seqs = j.at("sequences");
  if (!seqs.is_array()) fail("\"sequences\" must be an array");
  Decomposition d{std::move(lattice), {}};
  const Poset& p = d.lattice->poset();
  for (const auto& names : seqs)
    d.sequences.push_back(Sequence::from_names(p, string_array(names, "sequences")));
  return d;
}

void save_decomposition(const Decomposition& d, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) fail("cannot write " + path.string());
  out << decomposition_to_json(d).dump(2) << '\n';
}

Decomposition load_decomposition(const std::filesystem::path& path, LatticePtr lattice) {
  return decomposition_from_json(parse_file(path), std::move(lattice));
}

}  // namespace pcf::io
