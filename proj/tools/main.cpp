#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcf/decompose.hpp"
#include "pcf/io.hpp"

namespace {

using nlohmann::json;
using namespace pcf;

constexpr int kPass = 0;
constexpr int kFail = 1;      // semantic failure, witness printed
constexpr int kBadInput = 2;  // file/format/feasibility errors

struct Ctx {
  bool json_out = false;
  bool strict = false;
  std::size_t ideal_cap = kDefaultIdealCap;
  std::uint64_t table_cap = kDefaultTableCap;
};

void emit(const Ctx& ctx, const json& report, const std::vector<std::string>& lines) {
  if (ctx.json_out) {
    std::cout << report.dump(2) << '\n';
  } else {
    for (const auto& line : lines) std::cout << line << '\n';
  }
}

std::string show_set(const Poset& p, ElemSet s) { return "{" + p.format_set(s) + "}"; }

json witness_to_json(const Poset& p, const Witness& w, const std::string& note) {
  json j{{"A", io::set_to_json(p, w.a)}, {"B", io::set_to_json(p, w.b)}, {"note", note}};
  j["element"] = w.element < 0 ? json() : json(p.name(w.element));
  return j;
}

void describe_witness(const Poset& p, const Witness& w, const std::string& note,
                      std::vector<std::string>& lines) {
  lines.push_back("  A = " + show_set(p, w.a));
  lines.push_back("  B = " + show_set(p, w.b));
  if (w.element >= 0) lines.push_back("  element = " + p.name(w.element));
  if (!note.empty()) lines.push_back("  " + note);
}

// Ideal literals: complete downward with a warning, or reject under --strict.
Ideal parse_ideal_literal(const Ctx& ctx, const Poset& p, const std::string& literal) {
  ElemSet s = p.parse_set(literal);
  if (p.is_ideal(s)) return s;
  if (ctx.strict)
    throw Error(ErrorKind::NotIdeal, "'" + literal + "' is not downward closed (--strict)");
  Ideal completed = p.ideal_generated(s);
  std::cerr << "warning: '" << literal << "' is not downward closed; using "
            << show_set(p, completed) << '\n';
  return completed;
}

LatticePtr load_lattice(const Ctx& ctx, const std::string& poset_path) {
  return IdealLattice::build(io::load_poset(poset_path), ctx.ideal_cap);
}

struct LawCheck {
  Law law;
  CheckReport (*run)(const ChoiceFunction&);
};

LawCheck law_by_name(const std::string& name) {
  if (name == "heredity") return {Law::Heredity, check_heredity};
  if (name == "outcast") return {Law::Outcast, check_outcast};
  if (name == "single") return {Law::SingleCondition, check_single_condition};
  if (name == "path-independence") return {Law::PathIndependence, check_path_independence};
  return {Law::Idempotence, check_idempotent};
}

const char* law_name(Law law) {
  switch (law) {
    case Law::Heredity: return "heredity";
    case Law::Outcast: return "outcast";
    case Law::SingleCondition: return "single";
    case Law::PathIndependence: return "path-independence";
    case Law::Idempotence: return "idempotent";
  }
  return "?";
}

// Counterexamples are re-derived straight from the table before printing;
// a witness the table does not confirm is a driver bug, not a verdict.
int report_violation(const Ctx& ctx, json& report, std::vector<std::string>& lines, Law law,
                     const ChoiceFunction& f, const CheckReport& check) {
  const Witness& w = *check.witness;
  if (!witness_violates(law, f, w)) {
    std::cerr << "internal error: witness failed re-validation\n";
    return kBadInput;
  }
  report["verdict"] = "fail";
  report["law_violated"] = law_name(law);
  report["witness"] = witness_to_json(f.poset(), w, check.note);
  lines.push_back(std::string(law_name(law)) + ": FAIL");
  describe_witness(f.poset(), w, check.note, lines);
  emit(ctx, report, lines);
  return kFail;
}

int cmd_check(const Ctx& ctx, const std::string& poset_path, const std::string& cf_path,
              const std::string& law) {
  LatticePtr lattice = load_lattice(ctx, poset_path);
  ChoiceFunction f = io::load_cf(cf_path, lattice);
  json report{{"command", "check"}, {"law", law}};
  std::vector<std::string> lines;

  if (law == "conservative") {
    for (const char* part : {"heredity", "outcast"}) {
      LawCheck lc = law_by_name(part);
      CheckReport r = lc.run(f);
      if (!r) return report_violation(ctx, report, lines, lc.law, f, r);
    }
  } else {
    LawCheck lc = law_by_name(law);
    CheckReport r = lc.run(f);
    if (!r) return report_violation(ctx, report, lines, lc.law, f, r);
  }
  report["verdict"] = "pass";
  lines.push_back(law + ": pass");
  emit(ctx, report, lines);
  return kPass;
}

int cmd_eval(const Ctx& ctx, const std::string& poset_path, const std::string& sequence_literal,
             const std::string& ideal_literal) {
  Poset p = io::load_poset(poset_path);
  Sequence a = Sequence::from_indices(p, p.parse_items(sequence_literal));
  Ideal x = parse_ideal_literal(ctx, p, ideal_literal);
  ElemSet value = eval_elementary(p, a, x);

  json report{{"command", "eval"},
              {"sequence", io::sequence_to_json(p, a)},
              {"ideal", io::set_to_json(p, x)},
              {"value", io::set_to_json(p, value)}};
  std::string csv = p.format_set(value);
  emit(ctx, report, {value.empty() ? "(empty)" : csv});
  return kPass;
}

int cmd_decompose(const Ctx& ctx, const std::string& poset_path, const std::string& cf_path,
                  bool do_minimize, const std::string& out_path) {
  LatticePtr lattice = load_lattice(ctx, poset_path);
  ChoiceFunction f = io::load_cf(cf_path, lattice);
  json report{{"command", "decompose"}};
  std::vector<std::string> lines;

  for (const char* part : {"heredity", "outcast"}) {
    LawCheck lc = law_by_name(part);
    CheckReport r = lc.run(f);
    if (!r) {
      lines.push_back("not conservative; no decomposition exists");
      report["error"] = to_string(ErrorKind::NotConservative);
      return report_violation(ctx, report, lines, lc.law, f, r);
    }
  }

  Decomposition d = decompose(f);
  if (do_minimize) d = minimize(f, d);
  CheckReport verified = verify_decomposition(f, d);
  if (!verified) {  // decompose() verifies internally; double failure is a bug
    std::cerr << "internal error: decomposition failed verification: " << verified.note << '\n';
    return kFail;
  }

  const Poset& p = lattice->poset();
  report["verdict"] = "ok";
  report["minimized"] = do_minimize;
  report["sequences"] = io::decomposition_to_json(d)["sequences"];
  lines.push_back("sequences (" + std::to_string(d.sequences.size()) + "):");
  for (const Sequence& a : d.sequences) lines.push_back("  " + p.format_sequence(a.items()));
  lines.push_back("verified: union of elementary functions reproduces the input");
  if (!out_path.empty()) {
    io::save_decomposition(d, out_path);
    report["out"] = out_path;
    lines.push_back("wrote " + out_path);
  }
  emit(ctx, report, lines);
  return kPass;
}

int cmd_enumerate(const Ctx& ctx, const std::string& poset_path, const std::string& kind,
                  bool tables) {
  LatticePtr lattice = load_lattice(ctx, poset_path);
  std::vector<ChoiceFunction> fs = kind == "conservative"
                                       ? enumerate_conservative(lattice, ctx.table_cap)
                                       : enumerate_path_independent(lattice, ctx.table_cap);

  json report{{"command", "enumerate"}, {"kind", kind}, {"count", fs.size()}};
  std::vector<std::string> lines{kind + " choice functions: " + std::to_string(fs.size())};
  if (tables) {
    json all = json::array();
    const Poset& p = lattice->poset();
    for (const ChoiceFunction& f : fs) {
      all.push_back(io::cf_table_to_json(f)["map"]);
      lines.push_back("--");
      for (int i = 0; i < f.ideal_count(); ++i)
        lines.push_back("  " + show_set(p, f.ideal(i)) + " -> " + show_set(p, f.value(i)));
    }
    report["tables"] = std::move(all);
  }
  emit(ctx, report, lines);
  return kPass;
}

int cmd_gallery(const Ctx& ctx, const std::string& poset_path, const std::string& cf_path,
                const std::string& target_literal, const std::string& element) {
  LatticePtr lattice = load_lattice(ctx, poset_path);
  ChoiceFunction f = io::load_cf(cf_path, lattice);
  const Poset& p = lattice->poset();
  json report{{"command", "gallery"}};
  std::vector<std::string> lines;

  Selector sel;
  std::optional<Ideal> target;
  int x = -1;
  if (element.empty()) {
    sel = min_index_selector(f);
    report["selector"] = "min-index";
  } else {
    target = parse_ideal_literal(ctx, p, target_literal);
    x = p.index_of(element);
    sel = capturing_selector(f, *target, x);  // throws ElementNotChosen -> exit 2
    report["selector"] = "capturing";
    report["target"] = io::set_to_json(p, *target);
    report["element"] = element;
  }

  Gallery g = build_gallery(f, sel);
  report["gallery"] = io::sequence_to_json(p, g);
  std::string shown = p.format_sequence(g.items());
  lines.push_back(shown.empty() ? "(empty)" : shown);

  if (target) {
    ElemSet at_target = eval_elementary(p, g, *target);
    report["value_at_target"] = io::set_to_json(p, at_target);
    bool ok = at_target.contains(x);
    report["contains_element"] = ok;
    lines.push_back("f_U(X) = " + show_set(p, at_target) + (ok ? ", contains " : ", MISSING ") +
                    element);
    if (!ok) {
      emit(ctx, report, lines);
      return kFail;
    }
  }
  emit(ctx, report, lines);
  return kPass;
}

int cmd_irreducible(const Ctx& ctx, const std::string& poset_path, const std::string& cf_path) {
  LatticePtr lattice = load_lattice(ctx, poset_path);
  ChoiceFunction f = io::load_cf(cf_path, lattice);
  const Poset& p = lattice->poset();
  json report{{"command", "irreducible"}};
  std::vector<std::string> lines;

  if (is_join_irreducible(f, ctx.table_cap)) {
    report["verdict"] = "irreducible";
    emit(ctx, report, {"join-irreducible: yes"});
    return kPass;
  }

  report["verdict"] = "reducible";
  lines.push_back("join-irreducible: no");
  if (auto split = join_split(f, ctx.table_cap)) {
    const auto& [g, h] = *split;
    std::vector<ChoiceFunction> parts{g, h};
    bool ok = union_cf(parts) == f && g.subset_of(f) && h.subset_of(f) && !(g == f) && !(h == f);
    if (!ok) {
      std::cerr << "internal error: split failed re-validation\n";
      return kBadInput;
    }
    report["parts"] = json::array({io::cf_table_to_json(g)["map"], io::cf_table_to_json(h)["map"]});
    for (const ChoiceFunction* part : {&g, &h}) {
      lines.push_back("part:");
      for (int i = 0; i < part->ideal_count(); ++i)
        lines.push_back("  " + show_set(p, part->ideal(i)) + " -> " + show_set(p, part->value(i)));
    }
  } else {  // the empty function: reducible as the union of nothing
    report["parts"] = json::array();
    lines.push_back("(the empty function is the union of no parts)");
  }
  emit(ctx, report, lines);
  return kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite posets and choice functions on their ideal lattices"};
  app.require_subcommand(1);
  app.fallthrough();

  Ctx ctx;
  std::optional<std::uint64_t> cap;
  app.add_flag("--json", ctx.json_out, "machine-readable reports on stdout");
  app.add_flag("--strict", ctx.strict, "reject ideal literals that are not downward closed");
  app.add_option("--cap", cap, "bound on enumerated ideals and candidate tables")
      ->envname("POSET_CHOICE_CAP");

  std::string poset_path, cf_path, law, sequence_literal, ideal_literal, kind, out_path;
  std::string target_literal, element;
  bool do_minimize = false, tables = false;

  CLI::App* check = app.add_subcommand("check", "test a choice function against a law");
  check->add_option("poset", poset_path)->required();
  check->add_option("cf", cf_path)->required();
  check->add_option("law", law)
      ->required()
      ->check(CLI::IsMember(
          {"heredity", "outcast", "conservative", "path-independence", "idempotent", "single"}));

  CLI::App* eval = app.add_subcommand("eval", "evaluate an elementary choice function");
  eval->add_option("poset", poset_path)->required();
  eval->add_option("sequence", sequence_literal, "comma-separated element names")->required();
  eval->add_option("ideal", ideal_literal, "comma-separated element names");

  CLI::App* decompose = app.add_subcommand("decompose", "write f as a union of elementary CFs");
  decompose->add_option("poset", poset_path)->required();
  decompose->add_option("cf", cf_path)->required();
  decompose->add_flag("--minimize", do_minimize, "drop redundant sequences");
  decompose->add_option("--out", out_path, "write the decomposition to this file");

  CLI::App* enumerate = app.add_subcommand("enumerate", "list choice functions of a kind");
  enumerate->add_option("poset", poset_path)->required();
  enumerate->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"conservative", "path-independent"}));
  enumerate->add_flag("--tables", tables, "print every table");

  CLI::App* gallery = app.add_subcommand("gallery", "build the through gallery of a selector");
  gallery->add_option("poset", poset_path)->required();
  gallery->add_option("cf", cf_path)->required();
  CLI::Option* tgt = gallery->add_option("--target", target_literal, "ideal the gallery must hit");
  CLI::Option* elem = gallery->add_option("--element", element, "element to capture in f_U(X)");
  tgt->needs(elem);
  elem->needs(tgt);

  CLI::App* irreducible = app.add_subcommand("irreducible", "test join-irreducibility");
  irreducible->add_option("poset", poset_path)->required();
  irreducible->add_option("cf", cf_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kBadInput;
  }
  if (cap) {
    ctx.ideal_cap = static_cast<std::size_t>(*cap);
    ctx.table_cap = *cap;
  }

  auto started = std::chrono::steady_clock::now();
  int rc = kBadInput;
  try {
    if (check->parsed()) rc = cmd_check(ctx, poset_path, cf_path, law);
    else if (eval->parsed()) rc = cmd_eval(ctx, poset_path, sequence_literal, ideal_literal);
    else if (decompose->parsed())
      rc = cmd_decompose(ctx, poset_path, cf_path, do_minimize, out_path);
    else if (enumerate->parsed()) rc = cmd_enumerate(ctx, poset_path, kind, tables);
    else if (gallery->parsed())
      rc = cmd_gallery(ctx, poset_path, cf_path, target_literal, element);
    else if (irreducible->parsed()) rc = cmd_irreducible(ctx, poset_path, cf_path);
  } catch (const Error& e) {
    if (ctx.json_out)
      std::cout << json{{"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}}.dump(2)
                << '\n';
    std::cerr << "error: " << e.what() << '\n';
    rc = kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    rc = kBadInput;
  }
  // Timing goes to stderr so stdout stays byte-identical across runs.
  auto elapsed = std::chrono::steady_clock::now() - started;
  std::cerr << "elapsed_ms="
            << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() << '\n';
  return rc;
}
