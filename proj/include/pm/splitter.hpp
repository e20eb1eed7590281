#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pm/minors.hpp"
#include "pm/polymatroid.hpp"

namespace pm {

enum class Theorem { C, S };
enum class Outcome { ContractElement, CompactifiedDeleteElement, SeriesCompressPair, WheelOrWhirl };
enum class Move { Contract, CompactifiedDelete, SeriesCompress, Delete };
enum class FailureReason { NotThreeConnected, NoMinor };

const char* to_string(Theorem t);
const char* to_string(Outcome o);
const char* to_string(Move m);
const char* to_string(FailureReason r);

struct MoveStep {
  Move move = Move::Contract;
  std::string element;
};

struct MoveFailure {
  MoveStep step;
  FailureReason reason = FailureReason::NoMinor;
};

/// A 3-connected s-minor reached by a short sequence of moves.
struct ReducedMinor {
  std::vector<MoveStep> moves;
  int elements = 0;
  MinorWitness witness;
};

struct WheelMatch {
  std::string kind;  // "wheel" or "whirl"
  int rank = 0;
};

struct SplitterCertificate {
  Theorem theorem = Theorem::C;
  Outcome outcome = Outcome::ContractElement;
  std::string element;                        // outcomes (i) and (ii)
  std::pair<std::string, std::string> pair;   // outcome (iii)
  std::vector<std::string> compressed;        // members of the pair that work
  std::string variant;                        // outcome (iii): "each member" or "one member"
  std::optional<WheelMatch> wheel;            // outcome (iv)
  std::optional<MinorWitness> witness;        // N inside the reduct
  bool three_connectivity_check = false;
  std::vector<MoveFailure> single_move_failures;  // outcome (iv)
  std::optional<ReducedMinor> reduced;            // Theorem S only
};

struct CounterexampleReport {
  Theorem theorem = Theorem::C;
  std::vector<MoveFailure> failures;
  std::vector<std::string> notes;
};

using SplitterResult = std::variant<SplitterCertificate, CounterexampleReport>;

std::optional<WheelMatch> wheel_or_whirl(const Polymatroid& m);

SplitterResult verify_splitter_c(const Polymatroid& m, const Polymatroid& n, int jobs = 1);
SplitterResult verify_splitter_s(const Polymatroid& m, const Polymatroid& n, int jobs = 1);

/// Replays the certificate: the move, 3-connectivity of its result and the
/// minor witness; or the wheel/whirl isomorphism.
bool check_certificate(const Polymatroid& m, const Polymatroid& n, const SplitterCertificate& cert);

enum class WwtOutcome { RemovableElement, WheelOrWhirl, PurePrickly };
const char* to_string(WwtOutcome o);

struct WwtCertificate {
  WwtOutcome outcome = WwtOutcome::RemovableElement;
  std::optional<MoveStep> step;        // outcome (i): plain deletion or contraction
  std::optional<WheelMatch> wheel;     // outcome (ii)
  std::vector<std::vector<std::string>> minimal_sets;  // outcome (iii)
};

using WwtResult = std::variant<WwtCertificate, CounterexampleReport>;

WwtResult verify_wwt(const Polymatroid& m);

/// Minimal sets Z with |Z| >= 2, |E - Z| >= 2 and lambda(Z) <= 2.
std::vector<Subset> minimal_3_separating_sets(const Polymatroid& m);

struct IdentityResult {
  std::string name;
  long checked = 0;
  long failed = 0;
  std::string first_counterexample;
};

struct IdentityReport {
  std::vector<IdentityResult> results;
  bool all_passed() const;
};

/// Evaluates the identity catalog: every subset or partition when n <= 4,
/// a fixed-seed sample otherwise.
IdentityReport identity_suite(const Polymatroid& m, long samples = 400);

}  // namespace pm
