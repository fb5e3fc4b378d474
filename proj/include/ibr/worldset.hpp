#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ibr {

// 2^6 = 64 worlds is the largest vocabulary whose world sets fit one word.
inline constexpr unsigned kMaxAtoms = 6;

constexpr unsigned world_count(unsigned atom_count) { return 1u << atom_count; }

constexpr std::uint64_t universe_mask(unsigned atom_count) {
  const unsigned m = world_count(atom_count);
  return m == 64 ? ~0ULL : (1ULL << m) - 1;
}

// A set of possible worlds over an n-atom vocabulary, one bit per world.
// World i is the valuation that makes atom j true iff bit j of i is set,
// and bit i of the mask is set iff world i belongs to the set.
class WorldSet {
 public:
  WorldSet(std::uint64_t mask, unsigned atom_count) : mask_(mask), n_(atom_count) {
    if (atom_count < 1 || atom_count > kMaxAtoms)
      throw std::invalid_argument("WorldSet: atom count must be between 1 and 6");
    if (mask & ~universe_mask(atom_count))
      throw std::invalid_argument("WorldSet: mask has bits beyond the 2^n worlds");
  }

  static WorldSet empty(unsigned atom_count) { return {0, atom_count}; }
  static WorldSet full(unsigned atom_count) { return {universe_mask(atom_count), atom_count}; }
  static WorldSet singleton(unsigned world, unsigned atom_count) {
    if (world >= world_count(atom_count))
      throw std::invalid_argument("WorldSet: world index out of range");
    return {1ULL << world, atom_count};
  }

  std::uint64_t mask() const { return mask_; }
  unsigned atom_count() const { return n_; }
  unsigned world_count() const { return ibr::world_count(n_); }

  bool empty() const { return mask_ == 0; }
  unsigned size() const { return static_cast<unsigned>(std::popcount(mask_)); }
  bool contains(unsigned world) const {
    return world < world_count() && ((mask_ >> world) & 1);
  }

  WorldSet complement() const { return {~mask_ & universe_mask(n_), n_}; }

  friend WorldSet operator&(WorldSet a, WorldSet b) {
    check_same(a, b);
    return {a.mask_ & b.mask_, a.n_};
  }
  friend WorldSet operator|(WorldSet a, WorldSet b) {
    check_same(a, b);
    return {a.mask_ | b.mask_, a.n_};
  }

  bool operator==(const WorldSet&) const = default;

 private:
  static void check_same(const WorldSet& a, const WorldSet& b) {
    if (a.n_ != b.n_)
      throw std::invalid_argument("WorldSet: operands have different atom counts");
  }

  std::uint64_t mask_;
  unsigned n_;
};

// a |= b. The empty set entails everything; in particular an unsatisfiable
// belief entails every formula.
inline bool entails(WorldSet a, WorldSet b) {
  if (a.atom_count() != b.atom_count())
    throw std::invalid_argument("entails: operands have different atom counts");
  return (a.mask() & ~b.mask()) == 0;
}

// a == b as sets of worlds.
inline bool equivalent(WorldSet a, WorldSet b) {
  if (a.atom_count() != b.atom_count())
    throw std::invalid_argument("equivalent: operands have different atom counts");
  return a.mask() == b.mask();
}

// Fixed-width binary rendering, most significant world first: "0b1010".
inline std::string to_bit_string(std::uint64_t mask, unsigned atom_count) {
  const unsigned m = world_count(atom_count);
  std::string s = "0b";
  for (unsigned i = m; i-- > 0;) s += ((mask >> i) & 1) ? '1' : '0';
  return s;
}

}  // namespace ibr
