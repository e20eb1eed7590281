#pragma once

#include <string>
#include <variant>

#include "pm/construct.hpp"
#include "pm/polymatroid.hpp"

namespace pm::io {

using Document = std::variant<Polymatroid, Multigraph>;

/// Parses either text format. Axiom failures surface as AxiomViolation
/// unless `check_axioms` is false.
Document parse(const std::string& text, bool check_axioms = true);
Document parse_file(const std::string& path, bool check_axioms = true);

std::string serialize(const Polymatroid& m);
std::string serialize(const Multigraph& g);

/// Comma-joined labels, or "-" for the empty set.
std::string subset_text(const Polymatroid& m, Subset x);

}  // namespace pm::io
