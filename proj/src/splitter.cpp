#include "pm/splitter.hpp"

#include <algorithm>

#include "parallel.hpp"
#include "pm/conn.hpp"
#include "pm/construct.hpp"
#include "pm/ops.hpp"

namespace pm {

const char* to_string(Theorem t) { return t == Theorem::C ? "c" : "s"; }

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::ContractElement: return "contract_element";
    case Outcome::CompactifiedDeleteElement: return "compactified_delete_element";
    case Outcome::SeriesCompressPair: return "series_compress_pair";
    case Outcome::WheelOrWhirl: return "wheel_or_whirl";
  }
  return "?";
}

const char* to_string(Move m) {
  switch (m) {
    case Move::Contract: return "contract";
    case Move::CompactifiedDelete: return "compactified_delete";
    case Move::SeriesCompress: return "series_compress";
    case Move::Delete: return "delete";
  }
  return "?";
}

const char* to_string(FailureReason r) {
  return r == FailureReason::NotThreeConnected ? "not_3_connected" : "no_minor";
}

const char* to_string(WwtOutcome o) {
  switch (o) {
    case WwtOutcome::RemovableElement: return "removable_element";
    case WwtOutcome::WheelOrWhirl: return "wheel_or_whirl";
    case WwtOutcome::PurePrickly: return "pure_prickly";
  }
  return "?";
}

std::optional<WheelMatch> wheel_or_whirl(const Polymatroid& m) {
  const int r = m.rank();
  if (!is_matroid(m) || r < 3 || r > 8 || m.size() != 2 * r) return std::nullopt;
  if (is_isomorphic(m, wheel(r))) return WheelMatch{"wheel", r};
  if (is_isomorphic(m, whirl(r))) return WheelMatch{"whirl", r};
  return std::nullopt;
}

namespace {

Polymatroid apply_move(const Polymatroid& m, const MoveStep& step) {
  const int i = m.index(step.element);
  switch (step.move) {
    case Move::Contract: return contract(m, bit(i));
    case Move::CompactifiedDelete: return compactified_delete(m, bit(i));
    case Move::Delete: return delete_set(m, bit(i));
    case Move::SeriesCompress: {
      for (Subset pair : prickly_pairs(m)) {
        if (has(pair, i)) return compress(m, i);
      }
      throw PreconditionViolated("'" + step.element + "' is in no two-element prickly set");
    }
  }
  throw Error("unknown move");
}

struct Planned {
  MoveStep step;
  Subset pair = 0;  // series compressions only
};

// (i) contractions, (ii) compactified deletions, (iii) compressions of each
// member of each two-element prickly set; all in element order.
std::vector<Planned> plan_moves(const Polymatroid& m) {
  std::vector<Planned> out;
  for (int e = 0; e < m.size(); ++e) out.push_back({{Move::Contract, m.label(e)}, 0});
  for (int e = 0; e < m.size(); ++e) out.push_back({{Move::CompactifiedDelete, m.label(e)}, 0});
  for (Subset pair : prickly_pairs(m)) {
    for_each_index(pair, [&](int z) { out.push_back({{Move::SeriesCompress, m.label(z)}, pair}); });
  }
  return out;
}

struct Evaluation {
  bool connected = false;
  std::optional<MinorWitness> witness;
  bool ok() const { return connected && witness.has_value(); }
};

std::optional<MinorWitness> find_minor(Theorem t, const Polymatroid& host, const Polymatroid& n) {
  return t == Theorem::C ? is_c_minor(host, n, MinorMode::UpToIso) : is_s_minor(host, n, MinorMode::UpToIso);
}

Evaluation evaluate(Theorem t, const Polymatroid& m, const Polymatroid& n, const MoveStep& step) {
  Evaluation ev;
  Polymatroid r = apply_move(m, step);
  ev.connected = is_3_connected(r);
  if (ev.connected) ev.witness = find_minor(t, r, n);
  return ev;
}

void check_hypotheses(Theorem t, const Polymatroid& m, const Polymatroid& n) {
  if (!is_3_connected(m)) throw HypothesisViolated("M is not 3-connected");
  if (!is_3_connected(n)) throw HypothesisViolated("N is not 3-connected");
  if (n.size() < 4) throw HypothesisViolated("N has fewer than four elements");
  if (n.size() >= m.size()) throw HypothesisViolated("N is not a proper minor of M");
  if (!find_minor(t, m, n)) {
    throw HypothesisViolated(std::string("N is not ") + (t == Theorem::C ? "a c-minor" : "an s-minor") + " of M");
  }
}

// Two s-moves from M reaching a 3-connected polymatroid with an s-minor
// isomorphic to N.
std::optional<ReducedMinor> two_move_reduction(const Polymatroid& m, const Polymatroid& n) {
  for (const auto& first : plan_moves(m)) {
    const Polymatroid r1 = apply_move(m, first.step);
    for (const auto& second : plan_moves(r1)) {
      const Polymatroid r2 = apply_move(r1, second.step);
      if (!is_3_connected(r2)) continue;
      if (auto w = is_s_minor(r2, n, MinorMode::UpToIso)) {
        return ReducedMinor{{first.step, second.step}, r2.size(), *w};
      }
    }
  }
  return std::nullopt;
}

SplitterResult verify(Theorem t, const Polymatroid& m, const Polymatroid& n, int jobs) {
  check_hypotheses(t, m, n);
  const auto moves = plan_moves(m);
  std::vector<std::optional<Evaluation>> evals(moves.size());
  if (jobs > 1) {
    detail::parallel_for(static_cast<int>(moves.size()), jobs, [&](int i) {
      evals[static_cast<std::size_t>(i)] = evaluate(t, m, n, moves[static_cast<std::size_t>(i)].step);
    });
  }
  auto get = [&](std::size_t i) -> const Evaluation& {
    if (!evals[i]) evals[i] = evaluate(t, m, n, moves[i].step);
    return *evals[i];
  };
  auto single = [&](std::size_t i, Outcome o) {
    SplitterCertificate c;
    c.theorem = t;
    c.outcome = o;
    c.element = moves[i].step.element;
    c.witness = get(i).witness;
    c.three_connectivity_check = true;
    if (t == Theorem::S) c.reduced = ReducedMinor{{moves[i].step}, m.size() - 1, *c.witness};
    return c;
  };
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (moves[i].step.move == Move::Contract && get(i).ok()) return single(i, Outcome::ContractElement);
  }
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (moves[i].step.move == Move::CompactifiedDelete && get(i).ok()) {
      return single(i, Outcome::CompactifiedDeleteElement);
    }
  }
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (moves[i].step.move != Move::SeriesCompress) continue;
    // Members of a pair are adjacent in the plan, lower index first.
    if (i + 1 >= moves.size() || moves[i + 1].pair != moves[i].pair) continue;
    const bool first = get(i).ok();
    const bool second = get(i + 1).ok();
    const bool accepted = t == Theorem::C ? (first || second) : (first && second);
    if (!accepted) continue;
    SplitterCertificate c;
    c.theorem = t;
    c.outcome = Outcome::SeriesCompressPair;
    c.pair = {moves[i].step.element, moves[i + 1].step.element};
    if (first) c.compressed.push_back(moves[i].step.element);
    if (second) c.compressed.push_back(moves[i + 1].step.element);
    c.variant = first && second ? "each member" : "one member";
    const std::size_t used = first ? i : i + 1;
    c.witness = get(used).witness;
    c.three_connectivity_check = true;
    if (t == Theorem::S) c.reduced = ReducedMinor{{moves[used].step}, m.size() - 1, *c.witness};
    return c;
  }
  std::vector<MoveFailure> failures;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const auto& ev = get(i);
    if (!ev.ok()) {
      failures.push_back({moves[i].step, ev.connected ? FailureReason::NoMinor : FailureReason::NotThreeConnected});
    }
  }
  if (auto w = wheel_or_whirl(m)) {
    SplitterCertificate c;
    c.theorem = t;
    c.outcome = Outcome::WheelOrWhirl;
    c.wheel = w;
    c.three_connectivity_check = true;
    c.single_move_failures = failures;
    if (t == Theorem::S) {
      c.reduced = two_move_reduction(m, n);
      if (c.reduced) c.witness = c.reduced->witness;
    }
    return c;
  }
  CounterexampleReport report;
  report.theorem = t;
  report.failures = std::move(failures);
  report.notes.push_back("no single move works and M is neither a wheel nor a whirl");
  return report;
}

}  // namespace

SplitterResult verify_splitter_c(const Polymatroid& m, const Polymatroid& n, int jobs) {
  return verify(Theorem::C, m, n, jobs);
}

SplitterResult verify_splitter_s(const Polymatroid& m, const Polymatroid& n, int jobs) {
  return verify(Theorem::S, m, n, jobs);
}

namespace {

bool replays_to(const Polymatroid& host, const Polymatroid& n, const MinorWitness& w) {
  try {
    return replay(host, w) == n;
  } catch (const Error&) {
    return false;
  }
}

bool check_reduced(const Polymatroid& m, const Polymatroid& n, const ReducedMinor& red) {
  Polymatroid r = m;
  try {
    for (const auto& step : red.moves) r = apply_move(r, step);
  } catch (const Error&) {
    return false;
  }
  return r.size() == red.elements && is_3_connected(r) && replays_to(r, n, red.witness);
}

}  // namespace

bool check_certificate(const Polymatroid& m, const Polymatroid& n, const SplitterCertificate& cert) {
  if (cert.outcome == Outcome::WheelOrWhirl) {
    auto w = wheel_or_whirl(m);
    if (!w || !cert.wheel || w->kind != cert.wheel->kind || w->rank != cert.wheel->rank) return false;
    if (cert.theorem == Theorem::S) {
      if (!cert.reduced || cert.reduced->elements != m.size() - 2) return false;
      return check_reduced(m, n, *cert.reduced);
    }
    return true;
  }
  if (!cert.witness) return false;
  std::vector<MoveStep> steps;
  if (cert.outcome == Outcome::ContractElement) steps.push_back({Move::Contract, cert.element});
  if (cert.outcome == Outcome::CompactifiedDeleteElement) steps.push_back({Move::CompactifiedDelete, cert.element});
  if (cert.outcome == Outcome::SeriesCompressPair) {
    if (!is_prickly(m, m.subset({cert.pair.first, cert.pair.second}))) return false;
    if (cert.theorem == Theorem::S && cert.compressed.size() != 2) return false;
    for (const auto& z : cert.compressed) steps.push_back({Move::SeriesCompress, z});
  }
  if (steps.empty()) return false;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    Polymatroid r = apply_move(m, steps[i]);
    if (!is_3_connected(r)) return false;
    if (i == 0) {
      if (!replays_to(r, n, *cert.witness)) return false;
    } else if (!find_minor(cert.theorem, r, n)) {
      return false;
    }
  }
  if (cert.theorem == Theorem::S) return cert.reduced && check_reduced(m, n, *cert.reduced);
  return true;
}

std::vector<Subset> minimal_3_separating_sets(const Polymatroid& m) {
  const auto lam = lambda_table(m);
  const Subset e = m.ground();
  std::vector<Subset> candidates;
  for (Subset z = 0; z <= e; ++z) {
    if (card(z) >= 2 && card(e & ~z) >= 2 && lam[z] <= 2) candidates.push_back(z);
  }
  std::vector<Subset> out;
  for (Subset z : candidates) {
    bool minimal = std::none_of(candidates.begin(), candidates.end(),
                                [&](Subset w) { return w != z && is_subset(w, z); });
    if (minimal) out.push_back(z);
  }
  return out;
}

WwtResult verify_wwt(const Polymatroid& m) {
  if (m.size() == 0) throw HypothesisViolated("M is empty");
  if (!is_3_connected(m)) throw HypothesisViolated("M is not 3-connected");
  CounterexampleReport report;
  for (int e = 0; e < m.size(); ++e) {
    for (Move mv : {Move::Delete, Move::Contract}) {
      MoveStep step{mv, m.label(e)};
      if (is_3_connected(apply_move(m, step))) {
        WwtCertificate c;
        c.outcome = WwtOutcome::RemovableElement;
        c.step = step;
        return c;
      }
      report.failures.push_back({step, FailureReason::NotThreeConnected});
    }
  }
  if (auto w = wheel_or_whirl(m)) {
    WwtCertificate c;
    c.outcome = WwtOutcome::WheelOrWhirl;
    c.wheel = w;
    return c;
  }
  if (!is_pure(m)) report.notes.push_back("M is not pure");
  const auto sets = minimal_3_separating_sets(m);
  if (sets.empty()) report.notes.push_back("M has no 3-separating set with two elements on each side");
  WwtCertificate c;
  c.outcome = WwtOutcome::PurePrickly;
  for (Subset z : sets) {
    c.minimal_sets.push_back(m.labels(z));
    if (!is_prickly(m, z)) report.notes.push_back("minimal 3-separating set " + std::to_string(z) + " is not prickly");
    for_each_index(z, [&](int i) {
      Polymatroid r = compress(m, i);
      if (!is_3_connected(r) || !is_pure(r)) {
        report.notes.push_back("compressing " + m.label(i) + " breaks 3-connectivity or purity");
      }
    });
  }
  if (report.notes.empty()) return c;
  report.theorem = Theorem::C;
  return report;
}

bool IdentityReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const IdentityResult& r) { return r.failed == 0; });
}

}  // namespace pm
