#include "sepsub/game.hpp"

#include <algorithm>

#include "sepsub/errors.hpp"

namespace sepsub {

GamePosition::GamePosition(int universe, int order)
    : universe_(universe), order_(order) {
  if (universe < 1) throw ValidationError("universe must be non-empty");
  if (order < 1) throw ValidationError("position needs order >= 1");
  slots_.assign(static_cast<std::size_t>(universe) * order, 0);
}

GamePosition GamePosition::from_sets(int universe,
                                     const MonadicSets& decided_in,
                                     const MonadicSets& decided_out) {
  if (decided_in.size() != decided_out.size())
    throw ValidationError("mismatched set vectors");
  GamePosition pos(universe, static_cast<int>(decided_in.size()));
  for (int k = 1; k <= pos.order(); ++k) {
    for (int e : decided_in[k - 1]) pos.decide(e, k, true);
    for (int e : decided_out[k - 1]) pos.decide(e, k, false);
  }
  return pos;
}

void GamePosition::decide(int element, int k, bool in) {
  if (element < 0 || element >= universe_)
    throw ValidationError("element out of range");
  if (k < 1 || k > order_) throw ValidationError("monadic index out of range");
  auto& cell = slots_[element * order_ + (k - 1)];
  auto wanted = static_cast<std::uint8_t>(in ? Slot::In : Slot::Out);
  if (cell != 0 && cell != wanted)
    throw ValidationError("conflicting decision for a decided pair");
  cell = wanted;
}

MonadicSets GamePosition::decided_in() const {
  MonadicSets out(order_);
  for (int e = 0; e < universe_; ++e)
    for (int k = 1; k <= order_; ++k)
      if (slot(e, k) == Slot::In) out[k - 1].insert(e);
  return out;
}

MonadicSets GamePosition::decided_out() const {
  MonadicSets out(order_);
  for (int e = 0; e < universe_; ++e)
    for (int k = 1; k <= order_; ++k)
      if (slot(e, k) == Slot::Out) out[k - 1].insert(e);
  return out;
}

std::uint64_t GamePosition::key() const {
  if (slots_.size() > 40)
    throw CapExceeded("position space too large to encode");
  std::uint64_t key = 0;
  for (auto it = slots_.rbegin(); it != slots_.rend(); ++it)
    key = key * 3 + *it;
  return key;
}

bool GamePosition::extends(const GamePosition& other) const {
  if (universe_ != other.universe_ || order_ != other.order_) return false;
  for (std::size_t i = 0; i < slots_.size(); ++i)
    if (other.slots_[i] != 0 && slots_[i] != other.slots_[i]) return false;
  return true;
}

namespace {

bool next_tuple(std::vector<int>& t, int n) {
  for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
    if (++t[i] < n) return true;
    t[i] = 0;
  }
  return false;
}

void collect_monadic_elements(const FiniteStructure& a, const Assignment& v,
                              const Formula& f, std::vector<int>& out) {
  if (f.kind() == Formula::Kind::Mon) {
    int e = eval_term(a, v, f.terms()[0]);
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  }
  for (const auto& c : f.children()) collect_monadic_elements(a, v, c, out);
}

constexpr int kMaxTableBits = 16;

}  // namespace

GameSolver::GameSolver(const FiniteStructure& a, const SeparationRule& rule,
                       int max_index, GameOptions opts)
    : a_(a), rule_(rule), max_index_(max_index), opts_(opts) {
  if (rule_.order() < 1)
    throw ValidationError("games are only defined for rules of positive order");
  conjuncts_ = rule_.tau().truncate(max_index_);

  const int n = a_.size();
  std::vector<int> tuple(rule_.vars().size(), 0);
  while (true) {
    Assignment v;
    for (std::size_t i = 0; i < rule_.vars().size(); ++i)
      v.bind(rule_.vars()[i], tuple[i]);
    if (eval_formula(a_, v, rule_.mu()))
      compiled_openings_.push_back(
          compile_move(-1, tuple, rule_.vars(), rule_.eta()));
    if (tuple.empty() || !next_tuple(tuple, n)) break;
  }
  for (std::size_t j = 0; j < conjuncts_.size(); ++j) {
    const auto& c = conjuncts_[j];
    std::vector<int> b(c.vars.size(), 0);
    while (true) {
      Assignment v;
      for (std::size_t i = 0; i < c.vars.size(); ++i) v.bind(c.vars[i], b[i]);
      if (eval_formula(a_, v, c.gamma))
        compiled_later_.push_back(
            compile_move(static_cast<int>(j), b, c.vars, c.psi));
      if (b.empty() || !next_tuple(b, n)) break;
    }
  }
  for (const auto& m : compiled_openings_) openings_.push_back(to_move(m));
  for (const auto& m : compiled_later_) later_.push_back(to_move(m));
}

GameSolver::CompiledMove GameSolver::compile_move(
    int conjunct, const std::vector<int>& tuple,
    const std::vector<std::string>& vars, const Formula& requirement) const {
  CompiledMove m;
  m.conjunct = conjunct;
  m.tuple = tuple;
  m.requirement = requirement;
  for (std::size_t i = 0; i < vars.size(); ++i) m.binding.bind(vars[i], tuple[i]);
  for (int e : tuple)
    if (std::find(m.decide_elements.begin(), m.decide_elements.end(), e) ==
        m.decide_elements.end())
      m.decide_elements.push_back(e);
  m.query_elements = m.decide_elements;
  // Ground terms inside monadic atoms may point at elements the move does
  // not decide; their current membership still matters to the requirement.
  collect_monadic_elements(a_, m.binding, requirement, m.query_elements);

  int bits = static_cast<int>(m.query_elements.size()) * rule_.order();
  if (bits <= kMaxTableBits) {
    m.table.resize(std::size_t{1} << bits);
    for (std::uint64_t pattern = 0; pattern < m.table.size(); ++pattern)
      m.table[pattern] = requirement_holds_uncached(m, pattern);
    m.has_table = true;
  }
  return m;
}

bool GameSolver::requirement_holds_uncached(const CompiledMove& m,
                                            std::uint64_t bits) const {
  const int k_count = rule_.order();
  auto contains = [&](int k, int e) {
    auto it = std::find(m.query_elements.begin(), m.query_elements.end(), e);
    if (it == m.query_elements.end()) return false;
    auto p = static_cast<int>(it - m.query_elements.begin());
    return (bits >> (p * k_count + (k - 1)) & 1) != 0;
  };
  return eval_formula(a_, m.binding, m.requirement, contains, k_count);
}

bool GameSolver::requirement_holds(const CompiledMove& m,
                                   std::uint64_t bits) const {
  return m.has_table ? m.table[bits] : requirement_holds_uncached(m, bits);
}

std::uint64_t GameSolver::fixed_bits(const CompiledMove& m,
                                     const GamePosition& pos) const {
  const int k_count = rule_.order();
  std::uint64_t bits = 0;
  for (std::size_t p = 0; p < m.query_elements.size(); ++p)
    for (int k = 1; k <= k_count; ++k)
      if (pos.slot(m.query_elements[p], k) == GamePosition::Slot::In)
        bits |= std::uint64_t{1} << (p * k_count + (k - 1));
  return bits;
}

std::vector<GamePosition> GameSolver::responses(const GamePosition& pos,
                                                const ForallMove& move) const {
  if (pos.universe() != a_.size() || pos.order() != rule_.order())
    throw ValidationError("position does not fit the game");
  CompiledMove m;
  if (move.is_opening()) {
    if (move.tuple.size() != rule_.vars().size())
      throw ValidationError("opening tuple arity mismatch");
    m = compile_move(-1, move.tuple, rule_.vars(), rule_.eta());
  } else {
    auto list = rule_.tau().truncate(move.conjunct);
    if (move.conjunct >= static_cast<int>(list.size()))
      throw ValidationError("no conjunct with index " +
                            std::to_string(move.conjunct));
    const auto& c = list[move.conjunct];
    if (move.tuple.size() != c.vars.size())
      throw ValidationError("conjunct tuple arity mismatch");
    m = compile_move(move.conjunct, move.tuple, c.vars, c.psi);
  }
  return enumerate_responses(m, pos);
}

std::vector<GamePosition> GameSolver::enumerate_responses(
    const CompiledMove& m, const GamePosition& pos) const {
  const int k_count = rule_.order();
  std::vector<std::pair<int, int>> open_slots;  // (query index, k)
  for (std::size_t p = 0; p < m.decide_elements.size(); ++p)
    for (int k = 1; k <= k_count; ++k)
      if (pos.slot(m.decide_elements[p], k) == GamePosition::Slot::Undecided)
        open_slots.emplace_back(static_cast<int>(p), k);

  std::uint64_t fixed = fixed_bits(m, pos);
  std::vector<GamePosition> out;
  for (std::uint64_t choice = 0;
       choice < (std::uint64_t{1} << open_slots.size()); ++choice) {
    std::uint64_t bits = fixed;
    for (std::size_t i = 0; i < open_slots.size(); ++i)
      if (choice >> i & 1) {
        auto [p, k] = open_slots[i];
        bits |= std::uint64_t{1} << (p * k_count + (k - 1));
      }
    if (!requirement_holds(m, bits)) continue;
    GamePosition next = pos;
    for (std::size_t i = 0; i < open_slots.size(); ++i) {
      auto [p, k] = open_slots[i];
      next.decide(m.decide_elements[p], k, (choice >> i & 1) != 0);
    }
    out.push_back(std::move(next));
  }
  return out;
}

// Survival through `depth` more conjunct rounds. A move touching only
// decided elements either refutes the position outright or repeats it;
// repeats never shorten survival, so they are evaluated once and skipped.
bool GameSolver::survive(const GamePosition& pos, int depth) {
  if (depth <= 0) return true;
  if (depth > 62) throw CapExceeded("survival depth beyond memo range");
  std::uint64_t memo_key = (pos.key() << 6) | static_cast<unsigned>(depth);
  if (auto it = survive_memo_.find(memo_key); it != survive_memo_.end())
    return it->second;

  const int k_count = rule_.order();
  bool ok = true;
  for (const auto& m : compiled_later_) {
    std::vector<std::pair<int, int>> open_slots;
    for (std::size_t p = 0; p < m.decide_elements.size(); ++p)
      for (int k = 1; k <= k_count; ++k)
        if (pos.slot(m.decide_elements[p], k) == GamePosition::Slot::Undecided)
          open_slots.emplace_back(static_cast<int>(p), k);
    std::uint64_t fixed = fixed_bits(m, pos);
    if (open_slots.empty()) {
      if (!requirement_holds(m, fixed)) {
        ok = false;
        break;
      }
      continue;
    }
    bool answered = false;
    for (std::uint64_t choice = 0;
         choice < (std::uint64_t{1} << open_slots.size()) && !answered;
         ++choice) {
      std::uint64_t bits = fixed;
      for (std::size_t i = 0; i < open_slots.size(); ++i)
        if (choice >> i & 1) {
          auto [p, k] = open_slots[i];
          bits |= std::uint64_t{1} << (p * k_count + (k - 1));
        }
      if (!requirement_holds(m, bits)) continue;
      GamePosition next = pos;
      for (std::size_t i = 0; i < open_slots.size(); ++i) {
        auto [p, k] = open_slots[i];
        next.decide(m.decide_elements[p], k, (choice >> i & 1) != 0);
      }
      answered = survive(next, depth - 1);
    }
    if (!answered) {
      ok = false;
      break;
    }
  }
  survive_memo_[memo_key] = ok;
  return ok;
}

// Greatest-fixpoint safety. Every response to a non-repeating move
// strictly grows the decided set, so recursion terminates; a repeating
// move is safe exactly when its forced pattern satisfies the requirement.
bool GameSolver::safe(const GamePosition& pos) {
  std::uint64_t memo_key = pos.key();
  if (auto it = safe_memo_.find(memo_key); it != safe_memo_.end())
    return it->second;

  const int k_count = rule_.order();
  bool ok = true;
  for (const auto& m : compiled_later_) {
    std::vector<std::pair<int, int>> open_slots;
    for (std::size_t p = 0; p < m.decide_elements.size(); ++p)
      for (int k = 1; k <= k_count; ++k)
        if (pos.slot(m.decide_elements[p], k) == GamePosition::Slot::Undecided)
          open_slots.emplace_back(static_cast<int>(p), k);
    std::uint64_t fixed = fixed_bits(m, pos);
    if (open_slots.empty()) {
      if (!requirement_holds(m, fixed)) {
        ok = false;
        break;
      }
      continue;
    }
    bool answered = false;
    for (std::uint64_t choice = 0;
         choice < (std::uint64_t{1} << open_slots.size()) && !answered;
         ++choice) {
      std::uint64_t bits = fixed;
      for (std::size_t i = 0; i < open_slots.size(); ++i)
        if (choice >> i & 1) {
          auto [p, k] = open_slots[i];
          bits |= std::uint64_t{1} << (p * k_count + (k - 1));
        }
      if (!requirement_holds(m, bits)) continue;
      GamePosition next = pos;
      for (std::size_t i = 0; i < open_slots.size(); ++i) {
        auto [p, k] = open_slots[i];
        next.decide(m.decide_elements[p], k, (choice >> i & 1) != 0);
      }
      answered = safe(next);
    }
    if (!answered) {
      ok = false;
      break;
    }
  }
  safe_memo_[memo_key] = ok;
  return ok;
}

bool GameSolver::openings_ok(const GamePosition& start, int r, bool omega) {
  for (const auto& m : compiled_openings_) {
    bool answered = false;
    for (auto& next : enumerate_responses(m, start)) {
      if (omega ? safe(next) : survive(next, r)) {
        answered = true;
        break;
      }
    }
    if (!answered) return false;
  }
  return true;
}

bool GameSolver::has_r_strategy(const GamePosition& start, int r,
                                bool include_round0) {
  if (r < 0) throw ValidationError("round count must be >= 0");
  if (include_round0) return openings_ok(start, r, false);
  return survive(start, r);
}

bool GameSolver::has_omega_strategy() {
  std::uint64_t space = 1;
  for (int i = 0; i < a_.size() * rule_.order(); ++i) {
    space *= 3;
    if (space > opts_.position_cap)
      throw CapExceeded("position space 3^" +
                        std::to_string(a_.size() * rule_.order()) +
                        " exceeds the configured cap");
  }
  return openings_ok(empty_position(), 0, true);
}

SurvivalResult GameSolver::max_survival_rounds() {
  if (has_omega_strategy()) return {SurvivalKind::Omega, 0};
  for (int r = 0; r <= opts_.survival_cap; ++r)
    if (!has_r_strategy(empty_position(), r, true))
      return {SurvivalKind::Finite, r - 1};
  return {SurvivalKind::AtLeastCap, opts_.survival_cap};
}

GamePosition GameSolver::empty_position() const {
  return GamePosition(a_.size(), rule_.order());
}

std::vector<ForallMove> legal_forall_moves(const FiniteStructure& a,
                                           const SeparationRule& rule,
                                           bool opening, int max_index) {
  GameSolver solver(a, rule, max_index);
  return opening ? solver.opening_moves() : solver.conjunct_moves();
}

std::vector<GamePosition> exists_responses(const FiniteStructure& a,
                                           const SeparationRule& rule,
                                           const GamePosition& pos,
                                           const ForallMove& move) {
  GameSolver solver(a, rule, move.is_opening() ? 0 : move.conjunct);
  return solver.responses(pos, move);
}

bool has_r_strategy(const FiniteStructure& a, const SeparationRule& rule,
                    const GamePosition& start, int r, int max_index,
                    bool include_round0, GameOptions opts) {
  GameSolver solver(a, rule, max_index, opts);
  return solver.has_r_strategy(start, r, include_round0);
}

bool has_omega_strategy(const FiniteStructure& a, const SeparationRule& rule,
                        int max_index, GameOptions opts) {
  GameSolver solver(a, rule, max_index, opts);
  return solver.has_omega_strategy();
}

SurvivalResult max_survival_rounds(const FiniteStructure& a,
                                   const SeparationRule& rule, int max_index,
                                   GameOptions opts) {
  GameSolver solver(a, rule, max_index, opts);
  return solver.max_survival_rounds();
}

}  // namespace sepsub
