#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "sepsub/eval.hpp"
#include "sepsub/separation.hpp"
#include "sepsub/structure.hpp"

namespace sepsub {

/// A game position: for each k in 1..K and each element, whether the
/// element has been decided into S_k, decided into its complement, or not
/// yet decided. Decided-in and decided-out are disjoint by construction.
class GamePosition {
 public:
  enum class Slot : std::uint8_t { Undecided = 0, In = 1, Out = 2 };

  GamePosition(int universe, int order);
  static GamePosition from_sets(int universe, const MonadicSets& decided_in,
                                const MonadicSets& decided_out);

  int universe() const { return universe_; }
  int order() const { return order_; }
  Slot slot(int element, int k) const {
    return static_cast<Slot>(slots_[element * order_ + (k - 1)]);
  }
  void decide(int element, int k, bool in);

  MonadicSets decided_in() const;
  MonadicSets decided_out() const;

  /// Canonical encoding: one base-3 digit per (element, k).
  std::uint64_t key() const;

  /// True iff every decision of `other` is present here.
  bool extends(const GamePosition& other) const;

  bool operator==(const GamePosition&) const = default;

 private:
  int universe_;
  int order_;
  std::vector<std::uint8_t> slots_;
};

/// A move by the universal player: the opening witness tuple, or a
/// conjunct index with a tuple satisfying that conjunct's guard.
struct ForallMove {
  int conjunct = -1;  // -1 marks the opening move
  std::vector<int> tuple;

  bool is_opening() const { return conjunct < 0; }
};

struct GameOptions {
  /// max_survival_rounds gives up past this many rounds.
  int survival_cap = 16;
  /// The omega solver refuses position spaces 3^(K*n) beyond this.
  std::uint64_t position_cap = std::uint64_t{1} << 30;
};

enum class SurvivalKind { Finite, Omega, AtLeastCap };

struct SurvivalResult {
  SurvivalKind kind = SurvivalKind::Finite;
  /// Finite: the largest r for which an r-strategy exists; -1 when even
  /// the opening round cannot be survived. AtLeastCap: the cap reached.
  int rounds = 0;
};

/// Exact solver for the games attached to one positive-order rule over
/// one structure, with the universal player's conjunct indices bounded by
/// max_index. Owns its memo tables; a solver is single-threaded, distinct
/// solvers are independent.
class GameSolver {
 public:
  GameSolver(const FiniteStructure& a, const SeparationRule& rule,
             int max_index, GameOptions opts = {});

  const std::vector<ForallMove>& opening_moves() const { return openings_; }
  const std::vector<ForallMove>& conjunct_moves() const { return later_; }

  /// All positions the existential player may move to. Already-decided
  /// pairs are forced; a move touching only decided elements yields the
  /// unchanged position when the requirement holds and nothing otherwise.
  std::vector<GamePosition> responses(const GamePosition& pos,
                                      const ForallMove& move) const;

  /// Can the existential player survive r rounds from `start` (plus the
  /// opening round when include_round0 is set)? Depth-bounded alternating
  /// search memoised on (position, remaining rounds).
  bool has_r_strategy(const GamePosition& start, int r, bool include_round0);

  /// Can she survive forever in the simple game? Greatest fixpoint over
  /// the position space: a position is safe iff every move admits a
  /// response to a safe position, where a repeated position counts as
  /// safe (she can repeat her responses forever).
  bool has_omega_strategy();

  SurvivalResult max_survival_rounds();

  GamePosition empty_position() const;

 private:
  struct CompiledMove {
    int conjunct;
    std::vector<int> tuple;
    std::vector<int> decide_elements;  // distinct, in order of appearance
    std::vector<int> query_elements;   // decide_elements + ground-term extras
    std::vector<bool> table;           // requirement per in-bit pattern
    Formula requirement = Formula::verum();
    Assignment binding;
    bool has_table = false;
  };

  CompiledMove compile_move(int conjunct, const std::vector<int>& tuple,
                            const std::vector<std::string>& vars,
                            const Formula& requirement) const;
  bool requirement_holds(const CompiledMove& m, std::uint64_t bits) const;
  bool requirement_holds_uncached(const CompiledMove& m,
                                  std::uint64_t bits) const;
  std::uint64_t fixed_bits(const CompiledMove& m,
                           const GamePosition& pos) const;
  std::vector<GamePosition> enumerate_responses(const CompiledMove& m,
                                                const GamePosition& pos) const;
  bool survive(const GamePosition& pos, int depth);
  bool safe(const GamePosition& pos);
  bool openings_ok(const GamePosition& start, int r, bool omega);

  static ForallMove to_move(const CompiledMove& m) {
    return ForallMove{m.conjunct, m.tuple};
  }

  const FiniteStructure& a_;
  SeparationRule rule_;
  int max_index_;
  GameOptions opts_;
  std::vector<ClosureConjunct> conjuncts_;
  std::vector<CompiledMove> compiled_openings_;
  std::vector<CompiledMove> compiled_later_;
  std::vector<ForallMove> openings_;
  std::vector<ForallMove> later_;
  std::unordered_map<std::uint64_t, bool> survive_memo_;
  std::unordered_map<std::uint64_t, bool> safe_memo_;
};

/// Free-function faces over a throwaway solver.
std::vector<ForallMove> legal_forall_moves(const FiniteStructure& a,
                                           const SeparationRule& rule,
                                           bool opening, int max_index);
std::vector<GamePosition> exists_responses(const FiniteStructure& a,
                                           const SeparationRule& rule,
                                           const GamePosition& pos,
                                           const ForallMove& move);
bool has_r_strategy(const FiniteStructure& a, const SeparationRule& rule,
                    const GamePosition& start, int r, int max_index,
                    bool include_round0, GameOptions opts = {});
bool has_omega_strategy(const FiniteStructure& a, const SeparationRule& rule,
                        int max_index, GameOptions opts = {});
SurvivalResult max_survival_rounds(const FiniteStructure& a,
                                   const SeparationRule& rule, int max_index,
                                   GameOptions opts = {});

}  // namespace sepsub
