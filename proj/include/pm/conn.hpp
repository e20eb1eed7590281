#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pm/polymatroid.hpp"

namespace pm {

/// lambda(X) = r(X) + r(E - X) - r(E).
int lambda(const Polymatroid& m, Subset x);
/// lambda for every subset, indexed by bitmask.
std::vector<std::uint8_t> lambda_table(const Polymatroid& m);
/// r(X) + r(Y) - r(X + Y).
int local_conn(const Polymatroid& m, Subset x, Subset y);
/// Local connectivity in the dual; X and Y must be disjoint.
int local_conn_dual(const Polymatroid& m, Subset x, Subset y);

struct Separation {
  Subset side_x = 0;  // holds elements()[0]
  Subset side_y = 0;
  int lambda = 0;
  bool exact = false;    // lambda == k - 1
  bool trivial = false;  // one side is a single line and lambda == 1
  bool proper = false;   // meets the size/rank condition of a k-separation
  std::optional<int> n_side;  // 0 for side_x, 1 for side_y, when assigned
};

/// Every unordered partition with lambda <= k - 1, for k in {1, 2, 3}.
std::vector<Separation> separations(const Polymatroid& m, int k);

bool is_2_connected(const Polymatroid& m);
bool is_3_connected(const Polymatroid& m);
/// lambda(X) <= 1 and max(|side|, r(side)) > 1 on both sides.
bool is_2_separation(const Polymatroid& m, Subset x);
/// lambda(X) <= 2 with both sides of rank greater than 2.
bool is_3_separation(const Polymatroid& m, Subset x);
bool is_exactly_3_separating(const Polymatroid& m, Subset x);

struct PricklyCertificate {
  Subset z = 0;
  std::vector<ElementKind> kinds;
  int lambda = 0;
  /// (Z', r((E - Z) + Z')) for each proper subset Z' of Z.
  std::vector<std::pair<Subset, int>> spanning;
  /// (Z', r(Z')) for each non-empty subset Z' of Z.
  std::vector<std::pair<Subset, int>> profile;
};

std::optional<PricklyCertificate> prickly_certificate(const Polymatroid& m, Subset z);
bool is_prickly(const Polymatroid& m, Subset z);
std::vector<PricklyCertificate> prickly_separators(const Polymatroid& m, int size_cap);
/// Two-element prickly sets, in increasing bitmask order.
std::vector<Subset> prickly_pairs(const Polymatroid& m);

bool is_triangle(const Polymatroid& m, Subset t);
bool is_triad(const Polymatroid& m, Subset t);
std::vector<Subset> triangles(const Polymatroid& m);
std::vector<Subset> triads(const Polymatroid& m);

enum class FanStart { Triangle, Triad };
const char* to_string(FanStart start);

struct FanRecord {
  std::vector<std::string> labels;
  FanStart start = FanStart::Triangle;
};

/// Maximal fans, one per class of sequences using the same triples.
std::vector<FanRecord> fans(const Polymatroid& m);

struct ThreeElementClass {
  int number = 0;  // 1..9
  int rank = 0;
  int lines = 0;                // lines among the two other elements
  int lines_through_p = 0;      // lines l with r({p, l}) = 2
  int points_parallel_to_p = 0;
  int other_pair_rank = 0;      // r of the two other elements
  std::string descriptor;
};

ThreeElementClass classify_three_element(const Polymatroid& p, int marked);

enum class MuSide { Delete, Contract };

/// Largest non-N-side over the 2-separations of (M\l) compactified, or of M/l.
int mu(const Polymatroid& m, std::span<const std::string> n_elements, int ell, MuSide side,
       bool reduct_has_n_minor);

}  // namespace pm
