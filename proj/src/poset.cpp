#include "pcf/poset.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace pcf {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::CycleError: return "CycleError";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotTotal: return "NotTotal";
    case ErrorKind::NotSelection: return "NotSelection";
    case ErrorKind::NotIdeal: return "NotIdeal";
    case ErrorKind::DuplicateKey: return "DuplicateKey";
    case ErrorKind::PosetMismatch: return "PosetMismatch";
    case ErrorKind::NotConservative: return "NotConservative";
    case ErrorKind::ElementNotChosen: return "ElementNotChosen";
    case ErrorKind::SelectorViolation: return "SelectorViolation";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

Poset Poset::build(std::vector<std::string> elements,
                   const std::vector<std::pair<std::string, std::string>>& pairs) {
  if (elements.size() > 64)
    throw Error(ErrorKind::CapExceeded,
                "posets with more than 64 elements are not supported");

  Poset p;
  p.names_ = std::move(elements);
  for (std::size_t i = 0; i < p.names_.size(); ++i) {
    auto [it, inserted] = p.index_.emplace(p.names_[i], static_cast<int>(i));
    if (!inserted) throw Error(ErrorKind::DuplicateName, "element '" + p.names_[i] + "'");
  }

  const int n = p.size();
  for (int i = 0; i < n; ++i) p.universe_.add(i);

  p.below_.assign(static_cast<std::size_t>(n), ElemSet());
  for (int i = 0; i < n; ++i) p.below_[static_cast<std::size_t>(i)].add(i);
  for (const auto& [lo, hi] : pairs) {
    int x = p.index_of(lo);
    int y = p.index_of(hi);
    p.below_[static_cast<std::size_t>(y)].add(x);
  }

  // Reflexive-transitive closure: below_[y] collects everything reaching y.
  for (int k = 0; k < n; ++k)
    for (int y = 0; y < n; ++y)
      if (p.below_[static_cast<std::size_t>(y)].contains(k))
        p.below_[static_cast<std::size_t>(y)] |= p.below_[static_cast<std::size_t>(k)];

  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (p.le(x, y) && p.le(y, x))
        throw Error(ErrorKind::CycleError,
                    "'" + p.names_[static_cast<std::size_t>(x)] + "' and '" +
                        p.names_[static_cast<std::size_t>(y)] +
                        "' would be equivalent under the closure");

  p.above_.assign(static_cast<std::size_t>(n), ElemSet());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p.le(x, y)) p.above_[static_cast<std::size_t>(x)].add(y);

  return p;
}

int Poset::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end())
    throw Error(ErrorKind::UnknownElement, "element '" + std::string(name) + "'");
  return it->second;
}

std::size_t Poset::check(int x) const {
  if (x < 0 || x >= size())
    throw Error(ErrorKind::UnknownElement, "element index " + std::to_string(x));
  return static_cast<std::size_t>(x);
}

Ideal Poset::ideal_generated(ElemSet a) const {
  if (!a.subset_of(universe_))
    throw Error(ErrorKind::UnknownElement, "set contains indices outside the poset");
  ElemSet out;
  for (int x : a.members()) out |= below_[static_cast<std::size_t>(x)];
  return out;
}

Filter Poset::filter_generated(ElemSet a) const {
  if (!a.subset_of(universe_))
    throw Error(ErrorKind::UnknownElement, "set contains indices outside the poset");
  ElemSet out;
  for (int x : a.members()) out |= above_[static_cast<std::size_t>(x)];
  return out;
}

bool Poset::is_ideal(ElemSet s) const {
  for (int x : s.members())
    if (!below_[static_cast<std::size_t>(x)].subset_of(s)) return false;
  return true;
}

bool Poset::is_filter(ElemSet s) const {
  for (int x : s.members())
    if (!above_[static_cast<std::size_t>(x)].subset_of(s)) return false;
  return true;
}

bool Poset::is_antichain(ElemSet s) const {
  auto xs = s.members();
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (comparable(xs[i], xs[j])) return false;
  return true;
}

bool Poset::is_linear() const {
  for (int x = 0; x < size(); ++x)
    for (int y = x + 1; y < size(); ++y)
      if (!comparable(x, y)) return false;
  return true;
}

bool Poset::is_discrete() const {
  for (int x = 0; x < size(); ++x)
    for (int y = x + 1; y < size(); ++y)
      if (comparable(x, y)) return false;
  return true;
}

ElemSet Poset::minimal_elements(ElemSet s) const {
  ElemSet out;
  for (int x : s.members()) {
    bool minimal = true;
    for (int y : s.members())
      if (y != x && le(y, x)) {
        minimal = false;
        break;
      }
    if (minimal) out.add(x);
  }
  return out;
}

std::vector<Ideal> Poset::ideals(std::size_t cap) const {
  if (cap == 0) throw Error(ErrorKind::CapExceeded, "ideal cap must be positive");

  // Grow ideals one minimal-above element at a time, breadth first.
  std::vector<Ideal> found{ElemSet()};
  std::unordered_set<std::uint64_t> seen{0};
  for (std::size_t at = 0; at < found.size(); ++at) {
    ElemSet x = found[at];
    for (int e = 0; e < size(); ++e) {
      if (x.contains(e)) continue;
      if (!strict_principal_ideal(e).subset_of(x)) continue;
      ElemSet next = x;
      next.add(e);
      if (seen.insert(next.bits()).second) {
        found.push_back(next);
        if (found.size() > cap)
          throw Error(ErrorKind::CapExceeded,
                      "ideal count exceeds cap " + std::to_string(cap));
      }
    }
  }
  std::sort(found.begin(), found.end(), size_lex_less);
  return found;
}

std::string Poset::format_set(ElemSet s) const {
  std::string out;
  for (int x : s.members()) {
    if (!out.empty()) out += ',';
    out += name(x);
  }
  return out;
}

std::string Poset::format_sequence(std::span<const int> items) const {
  std::string out;
  for (int x : items) {
    if (!out.empty()) out += ',';
    out += name(x);
  }
  return out;
}

std::vector<int> Poset::parse_items(std::string_view csv) const {
  std::vector<int> out;
  std::string token;
  std::istringstream in{std::string(csv)};
  while (std::getline(in, token, ',')) {
    auto first = token.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    auto last = token.find_last_not_of(" \t");
    out.push_back(index_of(token.substr(first, last - first + 1)));
  }
  return out;
}

ElemSet Poset::parse_set(std::string_view csv) const {
  ElemSet out;
  for (int x : parse_items(csv)) out.add(x);
  return out;
}

IdealLattice::IdealLattice(Poset poset, std::vector<Ideal> ideals)
    : poset_(std::move(poset)), ideals_(std::move(ideals)) {
  position_.reserve(ideals_.size());
  for (std::size_t i = 0; i < ideals_.size(); ++i)
    position_.emplace(ideals_[i].bits(), static_cast<int>(i));
}

std::shared_ptr<const IdealLattice> IdealLattice::build(Poset poset, std::size_t cap) {
  auto ideals = poset.ideals(cap);
  return std::shared_ptr<const IdealLattice>(
      new IdealLattice(std::move(poset), std::move(ideals)));
}

int IdealLattice::index_of(Ideal x) const {
  auto it = position_.find(x.bits());
  if (it == position_.end())
    throw Error(ErrorKind::NotIdeal, "'" + poset_.format_set(x) + "' is not an ideal");
  return it->second;
}

}  // namespace pcf
