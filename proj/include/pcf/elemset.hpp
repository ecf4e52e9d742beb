#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace pcf {

// Subset of poset elements, stored as a bitmask over element indices.
// Supports posets of up to 64 elements; members are always reported in
// ascending index order, which is the canonical form everywhere.
class ElemSet {
 public:
  constexpr ElemSet() = default;
  constexpr explicit ElemSet(std::uint64_t bits) : bits_(bits) {}

  static ElemSet of(std::initializer_list<int> indices) {
    ElemSet s;
    for (int i : indices) s.add(i);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }

  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  ElemSet& add(int i) {
    bits_ |= std::uint64_t{1} << i;
    return *this;
  }
  ElemSet& remove(int i) {
    bits_ &= ~(std::uint64_t{1} << i);
    return *this;
  }

  constexpr bool subset_of(ElemSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ElemSet other) const { return (bits_ & other.bits_) != 0; }

  // Smallest member index, or -1 when empty.
  int min_element() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr ElemSet operator|(ElemSet a, ElemSet b) { return ElemSet(a.bits_ | b.bits_); }
  friend constexpr ElemSet operator&(ElemSet a, ElemSet b) { return ElemSet(a.bits_ & b.bits_); }
  friend constexpr ElemSet operator-(ElemSet a, ElemSet b) { return ElemSet(a.bits_ & ~b.bits_); }
  ElemSet& operator|=(ElemSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  ElemSet& operator&=(ElemSet o) {
    bits_ &= o.bits_;
    return *this;
  }

  friend constexpr bool operator==(ElemSet a, ElemSet b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(ElemSet a, ElemSet b) { return a.bits_ != b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

// Canonical set ordering: by size, then lexicographically by ascending
// member indices. Equal-sized sets are never prefixes of one another, so
// the lexicographic tie-break reduces to the lowest differing bit.
inline bool size_lex_less(ElemSet a, ElemSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  std::uint64_t lowest = diff & (~diff + 1);
  return (a.bits() & lowest) != 0;
}

}  // namespace pcf
