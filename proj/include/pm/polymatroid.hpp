#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pm/error.hpp"
#include "pm/subset.hpp"

namespace pm {

enum class ElementKind { Loop, Point, Line };

const char* to_string(ElementKind kind);

/// Rank-preserving bijection, stored in the source element order.
struct IsoWitness {
  std::vector<std::pair<std::string, std::string>> bijection;

  const std::string& map(std::string_view label) const;
  IsoWitness inverse() const;
  /// The witness for applying *this first and then `next`.
  IsoWitness then(const IsoWitness& next) const;
};

/// An integer 2-polymatroid held as a dense rank table. Immutable once built.
class Polymatroid {
 public:
  /// The empty polymatroid.
  Polymatroid();

  /// Checks the four axioms and the label invariants.
  static Polymatroid validate(std::vector<std::string> elements, std::span<const int> table);

  /// Skips the axiom checks (labels and the 0..255 range are still checked).
  /// Exists for harnesses that feed deliberately broken tables.
  static Polymatroid unchecked(std::vector<std::string> elements, std::span<const int> table);

  int size() const { return static_cast<int>(elements_.size()); }
  Subset ground() const { return full_set(size()); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& label(int i) const { return elements_.at(static_cast<std::size_t>(i)); }

  std::optional<int> find(std::string_view label) const;
  int index(std::string_view label) const;
  Subset subset(std::initializer_list<std::string_view> labels) const;
  Subset subset(std::span<const std::string> labels) const;
  std::vector<std::string> labels(Subset x) const;

  int rank(Subset x) const;
  int rank() const { return table_.back(); }
  int rank(std::initializer_list<std::string_view> labels) const { return rank(subset(labels)); }
  std::span<const std::uint8_t> table() const { return table_; }

  /// Labelled equality: same label set and same rank on every labelled subset.
  bool operator==(const Polymatroid& other) const;
  /// Same element order and same table.
  bool same_layout(const Polymatroid& other) const;

 private:
  Polymatroid(std::vector<std::string> elements, std::vector<std::uint8_t> table);
  friend Polymatroid assemble(std::vector<std::string>, std::vector<std::uint8_t>);

  std::vector<std::string> elements_;
  std::vector<std::uint8_t> table_;
};

/// Internal builder used by the operations; checks labels and size only.
Polymatroid assemble(std::vector<std::string> elements, std::vector<std::uint8_t> table);
/// As above from signed values; throws Error when a value leaves 0..255.
Polymatroid assemble_int(std::vector<std::string> elements, std::span<const int> table);

/// First axiom failure in the order normalization, monotone, submodular,
/// element rank; each scanned in increasing bitmask order.
std::optional<AxiomViolation> first_axiom_violation(std::span<const int> table, int n);

int norm(const Polymatroid& m, Subset x);
Subset closure(const Polymatroid& m, Subset x);
ElementKind element_kind(const Polymatroid& m, int e);
ElementKind element_kind(const Polymatroid& m, std::string_view label);
Subset lines(const Polymatroid& m);
Subset points(const Polymatroid& m);
Subset loops(const Polymatroid& m);
bool is_matroid(const Polymatroid& m);
bool is_pure(const Polymatroid& m);

struct CompactnessReport {
  bool compact = true;
  /// r(E) - r(E - e) per element; zero where the element is fine.
  std::vector<int> deficit;
};

CompactnessReport compactness(const Polymatroid& m);
bool is_compact(const Polymatroid& m);

std::optional<IsoWitness> is_isomorphic(const Polymatroid& a, const Polymatroid& b);

struct CanonicalForm {
  std::vector<std::uint8_t> table;
  /// order[p] is the index in M of the element placed at position p.
  std::vector<int> order;
};

/// Lexicographically least rank table over all element orders (n <= 8).
CanonicalForm canonical_form(const Polymatroid& m);
CanonicalForm canonical_form(std::span<const std::uint8_t> table, int n);

}  // namespace pm
