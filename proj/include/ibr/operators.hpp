#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "epistemic.hpp"
#include "worldset.hpp"

namespace ibr {

// One revision step. The belief is carried alongside the state so that
// formula-level judgments never have to re-derive it: the two coincide for
// faithful operators on satisfiable input, but non-compliant operators may
// diverge and the checkers must see exactly what the operator claims.
//
// Convention for unsatisfiable input: compliant operators return the state
// unchanged with an empty belief. An empty belief entails everything, which
// is what the single-step postulates require of revision by a contradiction.
struct RevisionOutcome {
  EpistemicState state;
  WorldSet belief;
};

using RevisionFn = std::function<RevisionOutcome(const EpistemicState&, WorldSet)>;

namespace detail {
inline void require_same_vocab(const EpistemicState& s, WorldSet mu) {
  if (s.atom_count() != mu.atom_count())
    throw std::invalid_argument("revision: state and input have different atom counts");
}
}  // namespace detail

// Natural (conservative) revision: the minimal input-worlds move to rank 0,
// every other world keeps its old position one level up. Preserves all
// relative order outside the promoted set.
inline RevisionOutcome revise_natural(const EpistemicState& s, WorldSet mu) {
  detail::require_same_vocab(s, mu);
  if (mu.empty()) return {s, WorldSet::empty(s.atom_count())};
  const WorldSet chosen = s.min_worlds(mu);
  std::vector<unsigned> raw(s.world_count());
  for (unsigned w = 0; w < s.world_count(); ++w)
    raw[w] = chosen.contains(w) ? 0u : s.rank(w) + 1u;
  return {canonicalize(raw), chosen};
}

// Lexicographic revision: all input-worlds strictly below all others, old
// order preserved inside each block.
inline RevisionOutcome revise_lexicographic(const EpistemicState& s, WorldSet mu) {
  detail::require_same_vocab(s, mu);
  if (mu.empty()) return {s, WorldSet::empty(s.atom_count())};
  const unsigned block = s.world_count();  // above any original rank
  std::vector<unsigned> raw(s.world_count());
  for (unsigned w = 0; w < s.world_count(); ++w)
    raw[w] = s.rank(w) + (mu.contains(w) ? 0u : block);
  return {canonicalize(raw), s.min_worlds(mu)};
}

// Flat revision: believes the right thing each step (the minimal
// input-worlds) but collapses all other distinctions, so it has no memory.
// Satisfies the single-step postulates and serves as the negative control
// for the iterated ones.
inline RevisionOutcome revise_flat(const EpistemicState& s, WorldSet mu) {
  detail::require_same_vocab(s, mu);
  if (mu.empty()) return {s, WorldSet::empty(s.atom_count())};
  const WorldSet chosen = s.min_worlds(mu);
  std::vector<unsigned> raw(s.world_count());
  for (unsigned w = 0; w < s.world_count(); ++w) raw[w] = chosen.contains(w) ? 0u : 1u;
  return {canonicalize(raw), chosen};
}

// Stubborn revision: ignores the input entirely, keeping state and belief.
// Deliberately violates the success postulate, including the unsatisfiable
// input convention (it reports a nonempty belief for a contradiction).
inline RevisionOutcome revise_stubborn(const EpistemicState& s, WorldSet mu) {
  detail::require_same_vocab(s, mu);
  return {s, s.belief_set()};
}

// Left fold of the operator over the inputs, threading the state; the
// belief of the final step is the belief of the whole sequence.
inline RevisionOutcome apply_sequence(const RevisionFn& op, const EpistemicState& start,
                                      std::span<const WorldSet> inputs) {
  if (inputs.empty()) throw std::invalid_argument("apply_sequence: empty input sequence");
  RevisionOutcome out = op(start, inputs.front());
  for (std::size_t i = 1; i < inputs.size(); ++i) out = op(out.state, inputs[i]);
  return out;
}

inline RevisionOutcome apply_sequence(const RevisionFn& op, const EpistemicState& start,
                                      std::initializer_list<WorldSet> inputs) {
  return apply_sequence(op, start, std::span<const WorldSet>(inputs.begin(), inputs.size()));
}

// Open name -> operator table. Checkers are operator-agnostic; anything
// registered here can be checked, mined, and traced.
class OperatorRegistry {
 public:
  void add(std::string name, RevisionFn fn) {
    if (find(name)) throw std::invalid_argument("operator already registered: " + name);
    entries_.emplace_back(std::move(name), std::move(fn));
  }

  const RevisionFn* find(std::string_view name) const {
    for (const auto& [key, fn] : entries_)
      if (key == name) return &fn;
    return nullptr;
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& [key, fn] : entries_) out.push_back(key);
    return out;
  }

  static const OperatorRegistry& builtin() {
    static const OperatorRegistry reg = [] {
      OperatorRegistry r;
      r.add("natural", [](const EpistemicState& s, WorldSet mu) { return revise_natural(s, mu); });
      r.add("lexicographic",
            [](const EpistemicState& s, WorldSet mu) { return revise_lexicographic(s, mu); });
      r.add("flat", [](const EpistemicState& s, WorldSet mu) { return revise_flat(s, mu); });
      r.add("stubborn",
            [](const EpistemicState& s, WorldSet mu) { return revise_stubborn(s, mu); });
      return r;
    }();
    return reg;
  }

 private:
  std::vector<std::pair<std::string, RevisionFn>> entries_;
};

}  // namespace ibr
