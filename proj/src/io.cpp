#include "pm/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace pm::io {

namespace {

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

int integer(const std::string& s, int line) {
  int v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) throw ParseError(line, "expected an integer, got '" + s + "'");
  return v;
}

bool valid_label(const std::string& l) {
  return !l.empty() && l != "-" && l.find(',') == std::string::npos;
}

struct Lines {
  std::vector<std::pair<int, std::string>> items;  // (line number, text)
  std::size_t next = 0;

  explicit Lines(const std::string& text) {
    std::istringstream in(text);
    int no = 0;
    for (std::string line; std::getline(in, line);) {
      ++no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      items.emplace_back(no, line);
    }
  }
  bool done() const { return next >= items.size(); }
  int last_line() const { return items.empty() ? 1 : items.back().first + 1; }
};

Polymatroid parse_polymatroid(Lines& ls, bool check) {
  if (ls.done()) throw ParseError(ls.last_line(), "missing 'elements' line");
  auto [eline, etext] = ls.items[ls.next++];
  auto ew = words(etext);
  if (ew.empty() || ew[0] != "elements") throw ParseError(eline, "expected 'elements'");
  std::vector<std::string> labels(ew.begin() + 1, ew.end());
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!valid_label(l)) throw ParseError(eline, "invalid label '" + l + "'");
    if (!seen.insert(l).second) throw ParseError(eline, "duplicate label '" + l + "'");
  }
  if (labels.size() > static_cast<std::size_t>(kMaxElements)) throw ParseError(eline, "more than 16 elements");
  const int n = static_cast<int>(labels.size());
  std::vector<int> table(std::size_t{1} << n);
  for (Subset x = 0; x < table.size(); ++x) {
    std::string expected = "-";
    if (x != 0) {
      expected.clear();
      for_each_index(x, [&](int i) {
        if (!expected.empty()) expected += ",";
        expected += labels[static_cast<std::size_t>(i)];
      });
    }
    if (ls.done()) throw ParseError(ls.last_line(), "missing rank line for subset " + expected);
    auto [no, text] = ls.items[ls.next++];
    auto w = words(text);
    if (w.size() != 3 || w[0] != "rank") throw ParseError(no, "expected 'rank <subset> <int>'");
    if (w[1] != expected) throw ParseError(no, "expected subset " + expected + ", got " + w[1]);
    table[x] = integer(w[2], no);
    if (table[x] < 0 || table[x] > 255) throw ParseError(no, "rank out of range");
  }
  if (!ls.done()) throw ParseError(ls.items[ls.next].first, "unexpected trailing line");
  return check ? Polymatroid::validate(labels, table) : Polymatroid::unchecked(labels, table);
}

Multigraph parse_graph(Lines& ls) {
  if (ls.done()) throw ParseError(ls.last_line(), "missing 'vertices' line");
  auto [vline, vtext] = ls.items[ls.next++];
  auto vw = words(vtext);
  if (vw.size() != 2 || vw[0] != "vertices") throw ParseError(vline, "expected 'vertices <k>'");
  Multigraph g;
  g.vertices = integer(vw[1], vline);
  if (g.vertices < 0) throw ParseError(vline, "negative vertex count");
  std::set<std::string> seen;
  while (!ls.done()) {
    auto [no, text] = ls.items[ls.next++];
    auto w = words(text);
    auto vertex = [&](const std::string& s) {
      int v = integer(s, no);
      if (v < 0 || v >= g.vertices) throw ParseError(no, "vertex " + s + " out of range");
      return v;
    };
    if (w.size() >= 2 && (!valid_label(w[1]) || !seen.insert(w[1]).second)) {
      throw ParseError(no, "invalid or duplicate label '" + w[1] + "'");
    }
    if (w.size() == 4 && w[0] == "edge") {
      g.add_edge(w[1], vertex(w[2]), vertex(w[3]));
    } else if (w.size() == 3 && w[0] == "loop") {
      g.add_loop(w[1], vertex(w[2]));
    } else if (w.size() == 2 && w[0] == "freeloop") {
      g.add_free_loop(w[1]);
    } else {
      throw ParseError(no, "expected 'edge', 'loop' or 'freeloop'");
    }
  }
  if (g.edges.size() > static_cast<std::size_t>(kMaxElements)) throw ParseError(ls.last_line(), "more than 16 edges");
  return g;
}

}  // namespace

Document parse(const std::string& text, bool check_axioms) {
  Lines ls(text);
  if (ls.done()) throw ParseError(1, "empty input");
  auto [no, header] = ls.items[ls.next++];
  auto hw = words(header);
  if (hw == std::vector<std::string>{"polymatroid", "v1"}) return parse_polymatroid(ls, check_axioms);
  if (hw == std::vector<std::string>{"graph", "v1"}) return parse_graph(ls);
  throw ParseError(no, "expected header 'polymatroid v1' or 'graph v1'");
}

Document parse_file(const std::string& path, bool check_axioms) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), check_axioms);
}

std::string subset_text(const Polymatroid& m, Subset x) {
  if (x == 0) return "-";
  std::string out;
  for_each_index(x, [&](int i) {
    if (!out.empty()) out += ",";
    out += m.label(i);
  });
  return out;
}

std::string serialize(const Polymatroid& m) {
  std::string out = "polymatroid v1\nelements";
  for (const auto& l : m.elements()) out += " " + l;
  out += "\n";
  for (Subset x = 0; x <= m.ground(); ++x) {
    out += "rank " + subset_text(m, x) + " " + std::to_string(m.rank(x)) + "\n";
  }
  return out;
}

std::string serialize(const Multigraph& g) {
  std::string out = "graph v1\nvertices " + std::to_string(g.vertices) + "\n";
  for (const auto& e : g.edges) {
    if (e.free_loop) {
      out += "freeloop " + e.label + "\n";
    } else if (e.u == e.v) {
      out += "loop " + e.label + " " + std::to_string(e.u) + "\n";
    } else {
      out += "edge " + e.label + " " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    }
  }
  return out;
}

}  // namespace pm::io
