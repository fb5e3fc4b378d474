#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "operators.hpp"

namespace ibr {

// The machine-checked properties. R1..R6 are the single-step revision
// postulates in their standard 1997 statement; C1..C4 the iterated-revision
// postulates; Lemma1 and StarStar the two derived properties:
//
//   LEMMA1:   if B(s*mu) |= phi           then B(s*mu) == B(s*(mu & phi))
//   STARSTAR: if B(s*alpha) |= mu         then B((s*mu)*alpha) == B(s*alpha)
//
// Note on numbering: parts of the literature cite the conjunction
// expansion/contraction pair under shifted indices. Here R5 is always
// expansion (B(s*mu) & phi |= B(s*(mu & phi))) and R6 contraction; nothing
// else refers to postulates by number.
enum class PostulateId { R1, R2, R3, R4, R5, R6, C1, C2, C3, C4, Lemma1, StarStar };

// Quantifier signature of the instance predicate.
enum class Signature {
  StateInput,       // over (s, mu)
  StateInputPhi,    // over (s, mu, phi)
  StateInputAlpha,  // over (s, mu, alpha)
  Vacuous,          // true by construction under the semantic representation
};

inline const std::vector<PostulateId>& all_postulates() {
  static const std::vector<PostulateId> ids = {
      PostulateId::R1, PostulateId::R2, PostulateId::R3,     PostulateId::R4,
      PostulateId::R5, PostulateId::R6, PostulateId::C1,     PostulateId::C2,
      PostulateId::C3, PostulateId::C4, PostulateId::Lemma1, PostulateId::StarStar,
  };
  return ids;
}

inline std::string_view to_string(PostulateId id) {
  switch (id) {
    case PostulateId::R1: return "R1";
    case PostulateId::R2: return "R2";
    case PostulateId::R3: return "R3";
    case PostulateId::R4: return "R4";
    case PostulateId::R5: return "R5";
    case PostulateId::R6: return "R6";
    case PostulateId::C1: return "C1";
    case PostulateId::C2: return "C2";
    case PostulateId::C3: return "C3";
    case PostulateId::C4: return "C4";
    case PostulateId::Lemma1: return "LEMMA1";
    case PostulateId::StarStar: return "STARSTAR";
  }
  return "?";
}

inline std::optional<PostulateId> postulate_from_string(std::string_view name) {
  std::string up(name);
  for (char& c : up)
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  for (PostulateId id : all_postulates())
    if (to_string(id) == up) return id;
  return std::nullopt;
}

inline Signature signature_of(PostulateId id) {
  switch (id) {
    case PostulateId::R1:
    case PostulateId::R2:
    case PostulateId::R3: return Signature::StateInput;
    case PostulateId::R4: return Signature::Vacuous;
    case PostulateId::R5:
    case PostulateId::R6:
    case PostulateId::Lemma1: return Signature::StateInputPhi;
    default: return Signature::StateInputAlpha;
  }
}

inline std::string_view narrative_of(PostulateId id) {
  switch (id) {
    case PostulateId::R1: return "belief of the revision does not entail the input";
    case PostulateId::R2:
      return "input consistent with the prior belief, but the revised belief is not their "
             "conjunction";
    case PostulateId::R3: return "satisfiable input produced an unsatisfiable belief";
    case PostulateId::R4: return "";
    case PostulateId::R5:
      return "revised belief conjoined with phi does not entail the belief of the conjunctive "
             "revision";
    case PostulateId::R6:
      return "phi consistent with the revised belief, but the conjunctive revision is not "
             "entailed by their conjunction";
    case PostulateId::C1:
      return "alpha entails the earlier input, but iterated and direct revisions disagree";
    case PostulateId::C2:
      return "alpha contradicts the earlier input, but iterated and direct revisions disagree";
    case PostulateId::C3:
      return "direct revision entails the earlier input, but the iterated revision does not";
    case PostulateId::C4:
      return "direct revision is consistent with the earlier input, but the iterated revision "
             "is not";
    case PostulateId::Lemma1:
      return "revised belief entails phi, but conjoining phi to the input changes the belief";
    case PostulateId::StarStar:
      return "direct revision entails the earlier input, but iterating through it changes the "
             "belief";
  }
  return "";
}

// Two sides of the relation claimed by one postulate instance, plus whether
// the instance holds (vacuously or otherwise).
struct InstanceResult {
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  bool holds = true;
};

// Evaluates one instance. `second` carries phi or alpha for the three-place
// predicates and is ignored for the two-place ones. Beliefs are written
// B(.), revision s*x; all of it realized by masks.
inline InstanceResult eval_instance(const RevisionFn& op, PostulateId id,
                                    const EpistemicState& s, WorldSet mu, WorldSet second) {
  switch (id) {
    case PostulateId::R1: {
      // B(s*mu) |= mu
      const WorldSet b = op(s, mu).belief;
      return {b.mask(), mu.mask(), entails(b, mu)};
    }
    case PostulateId::R2: {
      // B(s) & mu satisfiable  =>  B(s*mu) == B(s) & mu
      const WorldSet prior = s.belief_set() & mu;
      const WorldSet b = op(s, mu).belief;
      return {b.mask(), prior.mask(), prior.empty() || equivalent(b, prior)};
    }
    case PostulateId::R3: {
      // mu satisfiable  =>  B(s*mu) satisfiable
      const WorldSet b = op(s, mu).belief;
      return {b.mask(), mu.mask(), mu.empty() || !b.empty()};
    }
    case PostulateId::R4:
      // Syntax irrelevance. Formula variables range over world sets, so
      // equivalent inputs are identical inputs; nothing to evaluate.
      return {0, 0, true};
    case PostulateId::R5: {
      // B(s*mu) & phi |= B(s*(mu & phi))
      const WorldSet lhs = op(s, mu).belief & second;
      const WorldSet rhs = op(s, mu & second).belief;
      return {lhs.mask(), rhs.mask(), entails(lhs, rhs)};
    }
    case PostulateId::R6: {
      // B(s*mu) & phi satisfiable  =>  B(s*(mu & phi)) |= B(s*mu) & phi
      const WorldSet cut = op(s, mu).belief & second;
      const WorldSet lhs = op(s, mu & second).belief;
      return {lhs.mask(), cut.mask(), cut.empty() || entails(lhs, cut)};
    }
    case PostulateId::C1: {
      // alpha |= mu  =>  B((s*mu)*alpha) == B(s*alpha)
      const WorldSet direct = op(s, second).belief;
      const WorldSet iterated = op(op(s, mu).state, second).belief;
      return {iterated.mask(), direct.mask(),
              !entails(second, mu) || equivalent(iterated, direct)};
    }
    case PostulateId::C2: {
      // alpha & mu unsatisfiable  =>  B((s*mu)*alpha) == B(s*alpha)
      const WorldSet direct = op(s, second).belief;
      const WorldSet iterated = op(op(s, mu).state, second).belief;
      return {iterated.mask(), direct.mask(),
              !(second & mu).empty() || equivalent(iterated, direct)};
    }
    case PostulateId::C3: {
      // B(s*alpha) |= mu  =>  B((s*mu)*alpha) |= mu
      const WorldSet direct = op(s, second).belief;
      const WorldSet iterated = op(op(s, mu).state, second).belief;
      return {iterated.mask(), mu.mask(), !entails(direct, mu) || entails(iterated, mu)};
    }
    case PostulateId::C4: {
      // B(s*alpha) & mu satisfiable  =>  B((s*mu)*alpha) & mu satisfiable
      const WorldSet direct = op(s, second).belief;
      const WorldSet iterated = op(op(s, mu).state, second).belief;
      return {iterated.mask(), mu.mask(),
              (direct & mu).empty() || !(iterated & mu).empty()};
    }
    case PostulateId::Lemma1: {
      // B(s*mu) |= phi  =>  B(s*mu) == B(s*(mu & phi))
      const WorldSet lhs = op(s, mu).belief;
      const WorldSet rhs = op(s, mu & second).belief;
      return {lhs.mask(), rhs.mask(), !entails(lhs, second) || equivalent(lhs, rhs)};
    }
    case PostulateId::StarStar: {
      // B(s*alpha) |= mu  =>  B((s*mu)*alpha) == B(s*alpha)
      const WorldSet direct = op(s, second).belief;
      const WorldSet iterated = op(op(s, mu).state, second).belief;
      return {iterated.mask(), direct.mask(),
              !entails(direct, mu) || equivalent(iterated, direct)};
    }
  }
  throw std::logic_error("eval_instance: unknown postulate");
}

// A replayable witness of one failed instance.
struct Counterexample {
  std::vector<std::uint8_t> state;
  std::uint64_t mu = 0;
  std::optional<std::uint64_t> alpha;
  std::optional<std::uint64_t> phi;
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  std::string narrative;
};

inline constexpr std::size_t kMaxReportedViolations = 100;

// Result ledger of one quantified check.
struct CheckReport {
  std::string operator_name;
  PostulateId postulate = PostulateId::R1;
  unsigned n = 0;
  bool exhaustive = true;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;
  std::uint64_t instances_checked = 0;
  std::vector<Counterexample> violations;  // capped at kMaxReportedViolations
  std::uint64_t violations_total = 0;
};

// Re-evaluates a recorded counterexample through the operator, so reports
// can be validated bit-exactly against the public revision interface.
inline InstanceResult replay(const RevisionFn& op, PostulateId id, const Counterexample& cx) {
  EpistemicState s{std::vector<std::uint8_t>(cx.state.begin(), cx.state.end())};
  const unsigned n = s.atom_count();
  const std::uint64_t second = cx.alpha ? *cx.alpha : (cx.phi ? *cx.phi : 0);
  return eval_instance(op, id, s, WorldSet{cx.mu, n}, WorldSet{second, n});
}

}  // namespace ibr
