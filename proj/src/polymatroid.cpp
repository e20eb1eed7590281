#include "pm/polymatroid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "pm/kernels.hpp"

namespace pm {

const char* to_string(AxiomKind kind) {
  switch (kind) {
    case AxiomKind::Normalization: return "normalization";
    case AxiomKind::Monotone: return "monotone";
    case AxiomKind::Submodular: return "submodular";
    case AxiomKind::ElementRank: return "element_rank";
  }
  return "?";
}

const char* to_string(ElementKind kind) {
  switch (kind) {
    case ElementKind::Loop: return "loop";
    case ElementKind::Point: return "point";
    case ElementKind::Line: return "line";
  }
  return "?";
}

const std::string& IsoWitness::map(std::string_view label) const {
  for (const auto& [from, to] : bijection) {
    if (from == label) return to;
  }
  throw UnknownElement("no image for '" + std::string(label) + "'");
}

IsoWitness IsoWitness::inverse() const {
  IsoWitness out;
  for (const auto& [from, to] : bijection) out.bijection.emplace_back(to, from);
  return out;
}

IsoWitness IsoWitness::then(const IsoWitness& next) const {
  IsoWitness out;
  for (const auto& [from, to] : bijection) out.bijection.emplace_back(from, next.map(to));
  return out;
}

namespace {

void check_labels(const std::vector<std::string>& elements) {
  if (elements.size() > static_cast<std::size_t>(kMaxElements)) {
    throw SizeOutOfRange("ground set has " + std::to_string(elements.size()) +
                         " elements; at most 16 are supported");
  }
  std::set<std::string_view> seen;
  for (const auto& e : elements) {
    if (e.empty()) throw PreconditionViolated("empty element label");
    if (!seen.insert(e).second) throw DuplicateLabel("duplicate label '" + e + "'");
  }
}

void check_length(std::size_t length, std::size_t n) {
  if (length != (std::size_t{1} << n)) {
    throw PreconditionViolated("rank table has " + std::to_string(length) +
                               " entries; expected 2^" + std::to_string(n));
  }
}

std::string describe(const std::vector<std::string>& elements, Subset x) {
  std::string out = "{";
  bool first = true;
  for_each_index(x, [&](int i) {
    if (!first) out += ",";
    first = false;
    out += elements.empty() ? std::to_string(i) : elements[static_cast<std::size_t>(i)];
  });
  return out + "}";
}

}  // namespace

std::optional<AxiomViolation> first_axiom_violation(std::span<const int> t, int n) {
  const Subset size = bit(n);
  if (t[0] != 0) {
    return AxiomViolation(AxiomKind::Normalization, 0, 0, -1,
                          "normalization: r(empty) = " + std::to_string(t[0]));
  }
  for (Subset y = 1; y < size; ++y) {
    for (int e = 0; e < n; ++e) {
      if (has(y, e) && t[y & ~bit(e)] > t[y]) {
        return AxiomViolation(AxiomKind::Monotone, y & ~bit(e), y, -1,
                              "monotone: r(" + describe({}, y & ~bit(e)) + ") > r(" +
                                  describe({}, y) + ")");
      }
    }
  }
  for (Subset s = 0; s < size; ++s) {
    for (int a = 0; a < n; ++a) {
      if (has(s, a)) continue;
      for (int b = a + 1; b < n; ++b) {
        if (has(s, b)) continue;
        Subset x = s | bit(a);
        Subset y = s | bit(b);
        if (t[x] + t[y] < t[x | y] + t[s]) {
          return AxiomViolation(AxiomKind::Submodular, x, y, -1,
                                "submodular: r(" + describe({}, x) + ") + r(" + describe({}, y) +
                                    ") < r(union) + r(intersection)");
        }
      }
    }
  }
  for (int e = 0; e < n; ++e) {
    if (t[bit(e)] > 2) {
      return AxiomViolation(AxiomKind::ElementRank, 0, 0, e,
                            "element_rank: element " + std::to_string(e) + " has rank " +
                                std::to_string(t[bit(e)]));
    }
  }
  return std::nullopt;
}

Polymatroid::Polymatroid() : table_{0} {}

Polymatroid::Polymatroid(std::vector<std::string> elements, std::vector<std::uint8_t> table)
    : elements_(std::move(elements)), table_(std::move(table)) {}

Polymatroid assemble(std::vector<std::string> elements, std::vector<std::uint8_t> table) {
  check_labels(elements);
  check_length(table.size(), elements.size());
  return Polymatroid(std::move(elements), std::move(table));
}

Polymatroid assemble_int(std::vector<std::string> elements, std::span<const int> table) {
  std::vector<std::uint8_t> bytes(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] < 0 || table[i] > 255) {
      throw Error("rank value " + std::to_string(table[i]) + " outside 0..255");
    }
    bytes[i] = static_cast<std::uint8_t>(table[i]);
  }
  return assemble(std::move(elements), std::move(bytes));
}

Polymatroid Polymatroid::validate(std::vector<std::string> elements, std::span<const int> table) {
  check_labels(elements);
  check_length(table.size(), elements.size());
  const int n = static_cast<int>(elements.size());
  bool small = std::all_of(table.begin(), table.end(), [](int v) { return v >= 0 && v <= 64; });
  if (small) {
    std::vector<std::uint8_t> bytes(table.begin(), table.end());
    if (kernels::active().axioms_hold(bytes, n)) {
      return Polymatroid(std::move(elements), std::move(bytes));
    }
  }
  auto violation = first_axiom_violation(table, n);
  if (!violation) throw Error("internal: kernel and reference validators disagree");
  std::string what = violation->what();
  if (violation->kind == AxiomKind::Monotone || violation->kind == AxiomKind::Submodular) {
    what = std::string(to_string(violation->kind)) + ": X = " + describe(elements, violation->x) +
           ", Y = " + describe(elements, violation->y);
  } else if (violation->kind == AxiomKind::ElementRank) {
    what = "element_rank: '" + elements[static_cast<std::size_t>(violation->element)] +
           "' has rank " + std::to_string(table[bit(violation->element)]);
  }
  throw AxiomViolation(violation->kind, violation->x, violation->y, violation->element, what);
}

Polymatroid Polymatroid::unchecked(std::vector<std::string> elements, std::span<const int> table) {
  return assemble_int(std::move(elements), table);
}

std::optional<int> Polymatroid::find(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (elements_[static_cast<std::size_t>(i)] == label) return i;
  }
  return std::nullopt;
}

int Polymatroid::index(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw UnknownElement("unknown element '" + std::string(label) + "'");
}

Subset Polymatroid::subset(std::initializer_list<std::string_view> labels) const {
  Subset out = 0;
  for (auto l : labels) out |= bit(index(l));
  return out;
}

Subset Polymatroid::subset(std::span<const std::string> labels) const {
  Subset out = 0;
  for (const auto& l : labels) out |= bit(index(l));
  return out;
}

std::vector<std::string> Polymatroid::labels(Subset x) const {
  std::vector<std::string> out;
  for_each_index(x, [&](int i) { out.push_back(label(i)); });
  return out;
}

int Polymatroid::rank(Subset x) const {
  if (!is_subset(x, ground())) throw UnknownElement("subset mentions elements outside the ground set");
  return table_[x];
}

bool Polymatroid::same_layout(const Polymatroid& other) const {
  return elements_ == other.elements_ && table_ == other.table_;
}

bool Polymatroid::operator==(const Polymatroid& other) const {
  if (size() != other.size()) return false;
  if (elements_ == other.elements_) return table_ == other.table_;
  std::vector<int> to(static_cast<std::size_t>(size()));
  for (int i = 0; i < size(); ++i) {
    auto j = other.find(label(i));
    if (!j) return false;
    to[static_cast<std::size_t>(i)] = *j;
  }
  std::vector<Subset> image(table_.size(), 0);
  for (Subset x = 1; x < table_.size(); ++x) {
    int low = lowest(x);
    image[x] = image[x & (x - 1)] | bit(to[static_cast<std::size_t>(low)]);
    if (table_[x] != other.table_[image[x]]) return false;
  }
  return true;
}

int norm(const Polymatroid& m, Subset x) {
  int total = 0;
  for_each_index(x, [&](int i) { total += m.rank(bit(i)); });
  return total;
}

Subset closure(const Polymatroid& m, Subset x) {
  const int rx = m.rank(x);
  Subset out = x;
  for (int i = 0; i < m.size(); ++i) {
    if (m.rank(x | bit(i)) == rx) out |= bit(i);
  }
  return out;
}

ElementKind element_kind(const Polymatroid& m, int e) {
  if (e < 0 || e >= m.size()) throw UnknownElement("element index out of range");
  switch (m.rank(bit(e))) {
    case 0: return ElementKind::Loop;
    case 1: return ElementKind::Point;
    default: return ElementKind::Line;
  }
}

ElementKind element_kind(const Polymatroid& m, std::string_view label) {
  return element_kind(m, m.index(label));
}

namespace {
Subset with_rank(const Polymatroid& m, int r) {
  Subset out = 0;
  for (int i = 0; i < m.size(); ++i) {
    if (m.rank(bit(i)) == r) out |= bit(i);
  }
  return out;
}
}  // namespace

Subset lines(const Polymatroid& m) { return with_rank(m, 2); }
Subset points(const Polymatroid& m) { return with_rank(m, 1); }
Subset loops(const Polymatroid& m) { return with_rank(m, 0); }
bool is_matroid(const Polymatroid& m) { return lines(m) == 0; }
bool is_pure(const Polymatroid& m) { return lines(m) == m.ground(); }

CompactnessReport compactness(const Polymatroid& m) {
  CompactnessReport report;
  const Subset e = m.ground();
  for (int i = 0; i < m.size(); ++i) {
    int d = m.rank() - m.rank(e & ~bit(i));
    report.deficit.push_back(d);
    if (d != 0) report.compact = false;
  }
  return report;
}

bool is_compact(const Polymatroid& m) { return compactness(m).compact; }

namespace {

struct Signature {
  int rank;
  int lambda;
  std::vector<int> pair_ranks;
  auto operator<=>(const Signature&) const = default;
};

std::vector<Signature> signatures(const Polymatroid& m) {
  const int n = m.size();
  const Subset e = m.ground();
  std::vector<Signature> out;
  for (int i = 0; i < n; ++i) {
    Signature s{m.rank(bit(i)), m.rank(bit(i)) + m.rank(e & ~bit(i)) - m.rank(), {}};
    for (int j = 0; j < n; ++j) {
      if (j != i) s.pair_ranks.push_back(m.rank(bit(i) | bit(j)));
    }
    std::sort(s.pair_ranks.begin(), s.pair_ranks.end());
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<int> profile(const Polymatroid& m) {
  const int n = m.size();
  std::vector<int> counts(static_cast<std::size_t>((n + 1) * (2 * n + 1)), 0);
  for (std::size_t x = 0; x < m.table().size(); ++x) {
    int r = std::min<int>(m.table()[x], 2 * n);
    counts[static_cast<std::size_t>(card(static_cast<Subset>(x)) * (2 * n + 1) + r)]++;
  }
  return counts;
}

struct IsoSearch {
  const Polymatroid& a;
  const Polymatroid& b;
  std::vector<Signature> sa, sb;
  std::vector<int> phi;
  std::vector<bool> used;
  std::vector<Subset> image;

  bool extend(int i) {
    const int n = a.size();
    if (i == n) return true;
    const auto ta = a.table();
    const auto tb = b.table();
    for (int j = 0; j < n; ++j) {
      if (used[static_cast<std::size_t>(j)] ||
          sa[static_cast<std::size_t>(i)] != sb[static_cast<std::size_t>(j)]) {
        continue;
      }
      bool ok = true;
      for (Subset s = 0; s < bit(i) && ok; ++s) {
        Subset mapped = image[s] | bit(j);
        if (ta[s | bit(i)] != tb[mapped]) ok = false;
      }
      if (!ok) continue;
      for (Subset s = 0; s < bit(i); ++s) image[s | bit(i)] = image[s] | bit(j);
      used[static_cast<std::size_t>(j)] = true;
      phi[static_cast<std::size_t>(i)] = j;
      if (extend(i + 1)) return true;
      used[static_cast<std::size_t>(j)] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<IsoWitness> is_isomorphic(const Polymatroid& a, const Polymatroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return std::nullopt;
  if (profile(a) != profile(b)) return std::nullopt;
  IsoSearch search{a, b, signatures(a), signatures(b), {}, {}, {}};
  {
    auto x = search.sa;
    auto y = search.sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return std::nullopt;
  }
  const auto n = static_cast<std::size_t>(a.size());
  search.phi.assign(n, -1);
  search.used.assign(n, false);
  search.image.assign(std::size_t{1} << n, 0);
  if (!search.extend(0)) return std::nullopt;
  IsoWitness w;
  for (std::size_t i = 0; i < n; ++i) {
    w.bijection.emplace_back(a.label(static_cast<int>(i)),
                             b.label(search.phi[i]));
  }
  return w;
}

namespace {

// Steinhaus-Johnson-Trotter: positions k such that swapping (k, k+1) walks
// through all n! orders.
std::vector<int> adjacent_swap_sequence(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::vector<int> dir(static_cast<std::size_t>(n), -1);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> swaps;
  while (true) {
    int mobile = -1;
    int pos = -1;
    for (int i = 0; i < n; ++i) {
      int j = i + dir[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
      if (j < 0 || j >= n) continue;
      if (perm[static_cast<std::size_t>(j)] < perm[static_cast<std::size_t>(i)] &&
          perm[static_cast<std::size_t>(i)] > mobile) {
        mobile = perm[static_cast<std::size_t>(i)];
        pos = i;
      }
    }
    if (mobile < 0) break;
    int j = pos + dir[static_cast<std::size_t>(mobile)];
    std::swap(perm[static_cast<std::size_t>(pos)], perm[static_cast<std::size_t>(j)]);
    swaps.push_back(std::min(pos, j));
    for (int v = mobile + 1; v < n; ++v) dir[static_cast<std::size_t>(v)] *= -1;
  }
  return swaps;
}

const std::vector<int>& cached_swaps(int n) {
  static const std::vector<std::vector<int>> all = [] {
    std::vector<std::vector<int>> v;
    for (int k = 0; k <= 8; ++k) v.push_back(adjacent_swap_sequence(k));
    return v;
  }();
  return all[static_cast<std::size_t>(n)];
}

}  // namespace

CanonicalForm canonical_form(const Polymatroid& m) { return canonical_form(m.table(), m.size()); }

CanonicalForm canonical_form(std::span<const std::uint8_t> table, int n) {
  if (n > 8) throw SizeOutOfRange("canonical form is limited to 8 elements");
  const auto& k = kernels::active();
  CanonicalForm best{std::vector<std::uint8_t>(table.begin(), table.end()), {}};
  best.order.resize(static_cast<std::size_t>(n));
  std::iota(best.order.begin(), best.order.end(), 0);
  std::vector<std::uint8_t> work = best.table;
  std::vector<int> order = best.order;
  for (int pos : cached_swaps(n)) {
    k.swap_adjacent(work, n, pos);
    std::swap(order[static_cast<std::size_t>(pos)], order[static_cast<std::size_t>(pos) + 1]);
    if (k.compare(work, best.table) < 0) {
      best.table = work;
      best.order = order;
    }
  }
  return best;
}

}  // namespace pm
