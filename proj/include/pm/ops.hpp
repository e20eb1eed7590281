#pragma once

#include <map>
#include <string>
#include <vector>

#include "pm/polymatroid.hpp"

namespace pm {

/// Restriction to E - X.
Polymatroid delete_set(const Polymatroid& m, Subset x);
/// r'(Y) = r(Y + X) - r(X) on E - X.
Polymatroid contract(const Polymatroid& m, Subset x);
/// M/C\D in one pass.
Polymatroid minor(const Polymatroid& m, Subset contract_set, Subset delete_set);
/// r(X) + sum over x in X of (lambda({x}) - r({x})).
Polymatroid compactify(const Polymatroid& m);
Polymatroid compactified_delete(const Polymatroid& m, Subset x);
Polymatroid dual(const Polymatroid& m);
/// M compressed at x, on E - x.
Polymatroid compress(const Polymatroid& m, int x);
/// As compress, keeping x in the ground set.
Polymatroid compactify_element(const Polymatroid& m, int x);
/// Appends a point placed freely on x.
Polymatroid free_add_point(const Polymatroid& m, int x, const std::string& label);

struct NaturalLine {
  std::string line;
  std::string s;
  std::string t;
};

struct NaturalMatroid {
  Polymatroid matroid;
  std::vector<NaturalLine> scheme;
};

/// Each line is replaced, in place, by two points freely added on it.
NaturalMatroid natural_matroid(const Polymatroid& m);

Polymatroid direct_sum(const Polymatroid& a, const Polymatroid& b);
/// Elements of a in order, then those of b other than p.
Polymatroid parallel_connection(const Polymatroid& a, const Polymatroid& b, const std::string& p);
Polymatroid two_sum(const Polymatroid& a, const Polymatroid& b, const std::string& p);

struct TwoSumParts {
  Polymatroid x_part;
  Polymatroid y_part;
  std::string basepoint;
};

/// Splits M along (X, E - X) with lambda(X) = 1; the basepoint is appended
/// to each part and named _p0, _p1, ... (first label not in E).
TwoSumParts two_sum_decompose(const Polymatroid& m, Subset x);

/// Renames labels; unmapped labels are kept.
Polymatroid relabel(const Polymatroid& m, const std::map<std::string, std::string>& map);
Polymatroid relabel(const Polymatroid& m, const IsoWitness& witness);
/// Same polymatroid with the elements listed in `order`.
Polymatroid reorder(const Polymatroid& m, const std::vector<std::string>& order);

std::string fresh_label(const Polymatroid& m, const std::string& stem);

}  // namespace pm
