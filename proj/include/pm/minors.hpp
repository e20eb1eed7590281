#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pm/polymatroid.hpp"

namespace pm {

enum class MinorMode { Labelled, UpToIso };

/// One series compression: `compressed` is removed, `partner` completes the
/// two-element prickly set it belongs to.
struct CompressionStep {
  std::string partner;
  std::string compressed;
};

/// Recipe (M / C \ D), optionally compactified, then series compressions,
/// then an optional single point relabel and an optional isomorphism onto
/// the target.
struct MinorWitness {
  std::vector<std::string> contract_set;
  std::vector<std::string> delete_set;
  std::vector<CompressionStep> compression_chain;
  std::optional<std::pair<std::string, std::string>> relabel;  // (label in the minor, label in N)
  bool final_compactify = true;
  std::optional<IsoWitness> to_target;
};

/// Rebuilds the minor. Checks that every compression step uses a prickly pair.
Polymatroid replay(const Polymatroid& m, const MinorWitness& w);

std::optional<MinorWitness> is_c_minor(const Polymatroid& m, const Polymatroid& n, MinorMode mode);
std::optional<MinorWitness> special_n_minor(const Polymatroid& m, const Polymatroid& n);
std::optional<MinorWitness> is_s_minor(const Polymatroid& m, const Polymatroid& n,
                                       MinorMode mode = MinorMode::UpToIso);
std::vector<std::string> doubly_labelled(const Polymatroid& m, const Polymatroid& n);

}  // namespace pm
