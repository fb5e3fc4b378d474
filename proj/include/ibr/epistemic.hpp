#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "worldset.hpp"

namespace ibr {

// A normalized ranking over all 2^n worlds: the ranks in use are exactly
// {0..max} and rank 0 is nonempty. Encodes the total preorder
// w <= w' iff rank(w) <= rank(w'). Two states are equal iff their rank
// sequences are identical.
class EpistemicState {
 public:
  explicit EpistemicState(std::vector<std::uint8_t> ranks) : ranks_(std::move(ranks)) {
    switch (ranks_.size()) {
      case 2: n_ = 1; break;
      case 4: n_ = 2; break;
      case 8: n_ = 3; break;
      case 16: n_ = 4; break;
      case 32: n_ = 5; break;
      case 64: n_ = 6; break;
      default:
        throw std::invalid_argument("EpistemicState: rank sequence length must be 2^n, n in [1,6]");
    }
    std::uint64_t used = 0;
    max_ = 0;
    for (unsigned w = 0; w < ranks_.size(); ++w) {
      const std::uint8_t r = ranks_[w];
      if (r >= ranks_.size())
        throw std::invalid_argument("EpistemicState: rank value out of range for a normalized state");
      used |= 1ULL << r;
      if (r > max_) max_ = r;
      if (r == 0) belief_mask_ |= 1ULL << w;
    }
    if (used != ((max_ == 63) ? ~0ULL : (1ULL << (max_ + 1)) - 1))
      throw std::invalid_argument("EpistemicState: ranks are not normalized onto {0..max}");
  }

  unsigned atom_count() const { return n_; }
  unsigned world_count() const { return ibr::world_count(n_); }
  std::uint8_t rank(unsigned world) const { return ranks_.at(world); }
  std::uint8_t max_rank() const { return max_; }
  unsigned rank_class_count() const { return max_ + 1u; }
  std::span<const std::uint8_t> ranks() const { return ranks_; }

  // The belief set: all minimal (rank-0) worlds. Nonempty by normalization.
  WorldSet belief_set() const { return {belief_mask_, n_}; }

  // The minimal worlds of `selection` under this preorder; empty iff the
  // selection is empty.
  WorldSet min_worlds(WorldSet selection) const {
    if (selection.atom_count() != n_)
      throw std::invalid_argument("min_worlds: selection has a different atom count");
    std::uint64_t best_mask = 0;
    unsigned best = ~0u;
    for (std::uint64_t rest = selection.mask(); rest; rest &= rest - 1) {
      const unsigned w = static_cast<unsigned>(std::countr_zero(rest));
      const unsigned r = ranks_[w];
      if (r < best) {
        best = r;
        best_mask = 1ULL << w;
      } else if (r == best) {
        best_mask |= 1ULL << w;
      }
    }
    return {best_mask, n_};
  }

  bool operator==(const EpistemicState&) const = default;

 private:
  std::vector<std::uint8_t> ranks_;
  unsigned n_ = 0;
  std::uint8_t max_ = 0;
  std::uint64_t belief_mask_ = 0;
};

// Order-preserving relabeling of an arbitrary rank assignment onto {0..max}
// with no gaps. Idempotent on already-normalized input.
inline EpistemicState canonicalize(std::span<const unsigned> raw) {
  std::vector<unsigned> levels(raw.begin(), raw.end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<std::uint8_t> ranks(raw.size());
  for (std::size_t w = 0; w < raw.size(); ++w) {
    const auto it = std::lower_bound(levels.begin(), levels.end(), raw[w]);
    ranks[w] = static_cast<std::uint8_t>(it - levels.begin());
  }
  return EpistemicState(std::move(ranks));
}

inline EpistemicState canonicalize(const std::vector<unsigned>& raw) {
  return canonicalize(std::span<const unsigned>(raw));
}

// Visits every normalized ranking over 2^n worlds exactly once, in ascending
// lexicographic order of the rank sequence. Depth-first generation with a
// feasibility bound: a partial assignment survives iff the ranks skipped so
// far can still be filled by the remaining positions, so no non-normalized
// sequence is ever completed. Exhaustive enumeration is capped at n <= 3;
// beyond that the state space (Fubini growth) is out of desk reach.
template <typename Visitor>
void for_each_state(unsigned n, Visitor&& visit) {
  if (n < 1 || n > 3)
    throw std::invalid_argument("for_each_state: exhaustive enumeration requires 1 <= n <= 3");
  const unsigned m = world_count(n);
  std::vector<std::uint8_t> cur(m, 0);
  auto rec = [&](auto&& self, unsigned pos, unsigned used, unsigned maxv, unsigned holes) -> void {
    if (pos == m) {
      visit(EpistemicState(std::vector<std::uint8_t>(cur)));
      return;
    }
    const unsigned remaining = m - pos - 1;
    for (unsigned v = 0; v < m; ++v) {
      unsigned nmax, nholes;
      if (used == 0) {
        nmax = v;
        nholes = v;
      } else if (v <= maxv) {
        nmax = maxv;
        nholes = holes - (((used >> v) & 1) ? 0 : 1);
      } else {
        nmax = v;
        nholes = holes + (v - maxv - 1);
      }
      if (nholes > remaining) continue;
      cur[pos] = static_cast<std::uint8_t>(v);
      self(self, pos + 1, used | (1u << v), nmax, nholes);
    }
  };
  rec(rec, 0, 0, 0, 0);
}

inline std::vector<EpistemicState> enumerate_states(unsigned n) {
  std::vector<EpistemicState> out;
  for_each_state(n, [&](EpistemicState s) { out.push_back(std::move(s)); });
  return out;
}

// Draws a state by assigning each world a uniform raw rank in [0, 2^n) and
// canonicalizing; every normalized state has nonzero probability. Raw draws
// use the low bits of the engine directly so the stream does not depend on
// the standard library's distribution implementations.
inline EpistemicState random_state(unsigned n, std::mt19937_64& rng) {
  if (n < 1 || n > kMaxAtoms)
    throw std::invalid_argument("random_state: atom count must be between 1 and 6");
  const unsigned m = world_count(n);
  std::vector<unsigned> raw(m);
  for (auto& v : raw) v = static_cast<unsigned>(rng() & (m - 1));
  return canonicalize(raw);
}

inline EpistemicState random_state(unsigned n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_state(n, rng);
}

}  // namespace ibr
