#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "pm/conn.hpp"
#include "pm/construct.hpp"
#include "pm/io.hpp"
#include "pm/minors.hpp"
#include "pm/ops.hpp"
#include "pm/splitter.hpp"

using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kFalse = 1, kUsage = 2 };

struct Global {
  bool json = false;
  bool cycle = false;
};

Global g;

pm::Polymatroid load(const std::string& path, bool check = true) {
  auto doc = pm::io::parse_file(path, check);
  if (auto* m = std::get_if<pm::Polymatroid>(&doc)) return *m;
  const auto& graph = std::get<pm::Multigraph>(doc);
  return g.cycle ? pm::cycle_matroid(graph) : pm::boolean_from_graph(graph);
}

json labels(const pm::Polymatroid& m, pm::Subset x) { return m.labels(x); }

json to_json(const pm::Polymatroid& m) {
  return {{"elements", m.elements()}, {"rank_table", std::vector<int>(m.table().begin(), m.table().end())}};
}

json to_json(const pm::IsoWitness& w) {
  json out = json::object();
  for (const auto& [a, b] : w.bijection) out[a] = b;
  return out;
}

json to_json(const pm::MinorWitness& w) {
  json chain = json::array();
  for (const auto& s : w.compression_chain) chain.push_back({{"partner", s.partner}, {"compressed", s.compressed}});
  json out = {{"contract_set", w.contract_set},
              {"delete_set", w.delete_set},
              {"compression_chain", chain},
              {"relabel", nullptr},
              {"final_compactify", w.final_compactify},
              {"to_target", nullptr}};
  if (w.relabel) out["relabel"] = {{"from", w.relabel->first}, {"to", w.relabel->second}};
  if (w.to_target) out["to_target"] = to_json(*w.to_target);
  return out;
}

json to_json(const pm::MoveStep& s) { return {{"move", pm::to_string(s.move)}, {"element", s.element}}; }

json to_json(const std::vector<pm::MoveFailure>& fs) {
  json out = json::array();
  for (const auto& f : fs) {
    json j = to_json(f.step);
    j["reason"] = pm::to_string(f.reason);
    out.push_back(j);
  }
  return out;
}

json to_json(const pm::SplitterCertificate& c) {
  json out = {{"kind", "certificate"}, {"theorem", pm::to_string(c.theorem)}, {"outcome", pm::to_string(c.outcome)}};
  if (c.outcome == pm::Outcome::ContractElement || c.outcome == pm::Outcome::CompactifiedDeleteElement) {
    out["element"] = c.element;
  }
  if (c.outcome == pm::Outcome::SeriesCompressPair) {
    out["pair"] = {c.pair.first, c.pair.second};
    out["compressed"] = c.compressed;
    out["variant"] = c.variant;
  }
  if (c.wheel) out["wheel"] = {{"kind", c.wheel->kind}, {"rank", c.wheel->rank}};
  out["witness"] = c.witness ? to_json(*c.witness) : json(nullptr);
  out["three_connectivity_check"] = c.three_connectivity_check;
  if (c.outcome == pm::Outcome::WheelOrWhirl) out["single_move_failures"] = to_json(c.single_move_failures);
  if (c.reduced) {
    json moves = json::array();
    for (const auto& s : c.reduced->moves) moves.push_back(to_json(s));
    out["reduced"] = {{"moves", moves}, {"elements", c.reduced->elements}, {"witness", to_json(c.reduced->witness)}};
  }
  return out;
}

json to_json(const pm::CounterexampleReport& r) {
  return {{"kind", "counterexample"}, {"theorem", pm::to_string(r.theorem)}, {"failures", to_json(r.failures)},
          {"notes", r.notes}};
}

std::string join(const std::vector<std::string>& v, const char* sep = ",") {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : sep) + s;
  return out;
}

std::string set_text(const std::vector<std::string>& v) { return "{" + join(v) + "}"; }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void print_witness(const pm::MinorWitness& w) {
  std::cout << "  contract: " << set_text(w.contract_set) << "\n";
  std::cout << "  delete: " << set_text(w.delete_set) << "\n";
  for (const auto& s : w.compression_chain) {
    std::cout << "  compress: " << s.compressed << " (partner " << s.partner << ")\n";
  }
  if (w.relabel) std::cout << "  relabel: " << w.relabel->first << "=" << w.relabel->second << "\n";
  if (w.to_target) {
    std::vector<std::string> pairs;
    for (const auto& [a, b] : w.to_target->bijection) pairs.push_back(a + "->" + b);
    std::cout << "  isomorphism: " << join(pairs, " ") << "\n";
  }
}

void print_failures(const std::vector<pm::MoveFailure>& fs) {
  for (const auto& f : fs) {
    std::cout << "  " << pm::to_string(f.step.move) << " " << f.step.element << ": " << pm::to_string(f.reason)
              << "\n";
  }
}

// --- subcommands ---------------------------------------------------------

int cmd_validate(const std::string& path) {
  try {
    auto m = load(path);
    if (g.json) {
      emit({{"valid", true}, {"elements", m.size()}, {"rank", m.rank()}});
    } else {
      std::cout << "valid: " << m.size() << " elements, rank " << m.rank() << "\n";
    }
    return kOk;
  } catch (const pm::AxiomViolation& v) {
    auto doc = pm::io::parse_file(path, false);
    const auto* m = std::get_if<pm::Polymatroid>(&doc);
    auto name = [&](pm::Subset x) { return m ? pm::io::subset_text(*m, x) : std::to_string(x); };
    if (g.json) {
      json j = {{"valid", false}, {"axiom", pm::to_string(v.kind)}, {"message", v.what()}};
      if (v.kind == pm::AxiomKind::Monotone || v.kind == pm::AxiomKind::Submodular) {
        j["x"] = name(v.x);
        j["y"] = name(v.y);
      }
      if (v.kind == pm::AxiomKind::ElementRank && m) j["element"] = m->label(v.element);
      emit(j);
    } else {
      std::cout << "invalid: " << pm::to_string(v.kind);
      if (v.kind == pm::AxiomKind::Monotone || v.kind == pm::AxiomKind::Submodular) {
        std::cout << " X=" << name(v.x) << " Y=" << name(v.y);
      }
      if (v.kind == pm::AxiomKind::ElementRank && m) std::cout << " e=" << m->label(v.element);
      std::cout << "\n";
    }
    return kUsage;
  }
}

int cmd_info(const std::string& path) {
  auto m = load(path);
  json kinds = json::object();
  json lam = json::object();
  for (int e = 0; e < m.size(); ++e) {
    kinds[m.label(e)] = pm::to_string(pm::element_kind(m, e));
    lam[m.label(e)] = pm::lambda(m, pm::bit(e));
  }
  json prickly = json::array();
  for (const auto& c : pm::prickly_separators(m, m.size())) prickly.push_back(labels(m, c.z));
  json tri = json::array(), triads = json::array(), fans = json::array();
  for (auto t : pm::triangles(m)) tri.push_back(labels(m, t));
  for (auto t : pm::triads(m)) triads.push_back(labels(m, t));
  for (const auto& f : pm::fans(m)) fans.push_back({{"elements", f.labels}, {"start", pm::to_string(f.start)}});
  json out = {{"elements", m.elements()},
              {"rank", m.rank()},
              {"kinds", kinds},
              {"lambda", lam},
              {"compact", pm::is_compact(m)},
              {"matroid", pm::is_matroid(m)},
              {"two_connected", pm::is_2_connected(m)},
              {"three_connected", pm::is_3_connected(m)},
              {"prickly", prickly},
              {"triangles", tri},
              {"triads", triads},
              {"fans", fans}};
  if (g.json) {
    emit(out);
    return kOk;
  }
  std::cout << "elements: " << join(m.elements(), " ") << "\nrank: " << m.rank() << "\n";
  for (int e = 0; e < m.size(); ++e) {
    std::cout << "  " << m.label(e) << ": " << pm::to_string(pm::element_kind(m, e))
              << " lambda=" << pm::lambda(m, pm::bit(e)) << "\n";
  }
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "compact: " << yn(pm::is_compact(m)) << "\nmatroid: " << yn(pm::is_matroid(m))
            << "\n2-connected: " << yn(pm::is_2_connected(m)) << "\n3-connected: " << yn(pm::is_3_connected(m))
            << "\n";
  auto list = [](const char* title, const json& sets) {
    std::cout << title << ":";
    if (sets.empty()) std::cout << " none";
    for (const auto& s : sets) std::cout << " " << set_text(s.get<std::vector<std::string>>());
    std::cout << "\n";
  };
  list("prickly", prickly);
  list("triangles", tri);
  list("triads", triads);
  std::cout << "fans:";
  if (fans.empty()) std::cout << " none";
  for (const auto& f : fans) {
    std::cout << " " << join(f["elements"].get<std::vector<std::string>>()) << "(" << f["start"].get<std::string>()
              << ")";
  }
  std::cout << "\n";
  return kOk;
}

struct ApplyArgs {
  std::string path;
  std::vector<std::string> del, con, compress, element, relabel;
  std::string out;
};

pm::Subset parse_set(const pm::Polymatroid& m, const std::string& text) {
  pm::Subset s = 0;
  if (text == "-") return s;
  std::stringstream in(text);
  for (std::string l; std::getline(in, l, ',');) s |= pm::bit(m.index(l));
  return s;
}

int cmd_apply(const ApplyArgs& a, const CLI::App& sub) {
  auto m = load(a.path);
  std::map<std::string, std::size_t> used;
  for (const CLI::Option* opt : sub.parse_order()) {
    const std::string name = opt->get_name();
    auto next = [&](const std::vector<std::string>& values) { return values.at(used[name]++); };
    if (name == "--delete") {
      m = pm::delete_set(m, parse_set(m, next(a.del)));
    } else if (name == "--contract") {
      m = pm::contract(m, parse_set(m, next(a.con)));
    } else if (name == "--compress") {
      m = pm::compress(m, m.index(next(a.compress)));
    } else if (name == "--compactify-element") {
      m = pm::compactify_element(m, m.index(next(a.element)));
    } else if (name == "--compactify") {
      m = pm::compactify(m);
    } else if (name == "--dual") {
      m = pm::dual(m);
    } else if (name == "--relabel") {
      const std::string spec = next(a.relabel);
      auto eq = spec.find('=');
      if (eq == std::string::npos) throw CLI::ValidationError("--relabel", "expected a=b");
      m = pm::relabel(m, {{spec.substr(0, eq), spec.substr(eq + 1)}});
    }
  }
  std::string text = g.json ? to_json(m).dump(2) + "\n" : pm::io::serialize(m);
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream(a.out, std::ios::binary) << text;
  }
  return kOk;
}

int cmd_iso(const std::string& pa, const std::string& pb) {
  auto a = load(pa);
  auto b = load(pb);
  auto w = pm::is_isomorphic(a, b);
  if (g.json) {
    emit({{"isomorphic", w.has_value()}, {"witness", w ? to_json(*w) : json(nullptr)}});
  } else if (w) {
    std::vector<std::string> pairs;
    for (const auto& [x, y] : w->bijection) pairs.push_back(x + "->" + y);
    std::cout << "isomorphic: " << join(pairs, " ") << "\n";
  } else {
    std::cout << "not isomorphic\n";
  }
  return w ? kOk : kFalse;
}

int cmd_minor(const std::string& pm_path, const std::string& pn_path, const std::string& kind,
              const std::string& mode) {
  auto m = load(pm_path);
  auto n = load(pn_path);
  const auto mm = mode == "labelled" ? pm::MinorMode::Labelled : pm::MinorMode::UpToIso;
  std::optional<pm::MinorWitness> w;
  if (kind == "c") w = pm::is_c_minor(m, n, mm);
  if (kind == "s") w = pm::is_s_minor(m, n, mm);
  if (kind == "special") w = pm::special_n_minor(m, n);
  if (g.json) {
    emit({{"kind", kind}, {"found", w.has_value()}, {"witness", w ? to_json(*w) : json(nullptr)}});
  } else if (w) {
    std::cout << kind << "-minor: yes\n";
    print_witness(*w);
  } else {
    std::cout << kind << "-minor: no\n";
  }
  return w ? kOk : kFalse;
}

int cmd_verify_splitter(const std::string& pm_path, const std::string& pn_path, const std::string& theorem,
                        int jobs) {
  auto m = load(pm_path);
  auto n = load(pn_path);
  auto result = theorem == "s" ? pm::verify_splitter_s(m, n, jobs) : pm::verify_splitter_c(m, n, jobs);
  if (auto* r = std::get_if<pm::CounterexampleReport>(&result)) {
    if (g.json) {
      emit(to_json(*r));
    } else {
      std::cout << "counterexample (theorem " << pm::to_string(r->theorem) << ")\n";
      print_failures(r->failures);
      for (const auto& note : r->notes) std::cout << "  note: " << note << "\n";
    }
    return kFalse;
  }
  const auto& c = std::get<pm::SplitterCertificate>(result);
  if (g.json) {
    emit(to_json(c));
    return kOk;
  }
  std::cout << "outcome: " << pm::to_string(c.outcome);
  switch (c.outcome) {
    case pm::Outcome::ContractElement:
    case pm::Outcome::CompactifiedDeleteElement:
      std::cout << " " << c.element;
      break;
    case pm::Outcome::SeriesCompressPair:
      std::cout << " {" << c.pair.first << "," << c.pair.second << "} compressed " << set_text(c.compressed) << " ("
                << c.variant << ")";
      break;
    case pm::Outcome::WheelOrWhirl:
      std::cout << " " << c.wheel->kind << " rank " << c.wheel->rank;
      break;
  }
  std::cout << "\n";
  if (c.witness) {
    std::cout << "witness:\n";
    print_witness(*c.witness);
  }
  if (c.outcome == pm::Outcome::WheelOrWhirl) {
    std::cout << "single-move failures:\n";
    print_failures(c.single_move_failures);
  }
  if (c.reduced) {
    std::cout << "reduced s-minor on " << c.reduced->elements << " elements via";
    for (const auto& s : c.reduced->moves) std::cout << " " << pm::to_string(s.move) << " " << s.element;
    std::cout << "\n";
  }
  return kOk;
}

int cmd_verify_wwt(const std::string& path) {
  auto m = load(path);
  auto result = pm::verify_wwt(m);
  if (auto* r = std::get_if<pm::CounterexampleReport>(&result)) {
    if (g.json) {
      emit(to_json(*r));
    } else {
      std::cout << "counterexample\n";
      for (const auto& note : r->notes) std::cout << "  note: " << note << "\n";
    }
    return kFalse;
  }
  const auto& c = std::get<pm::WwtCertificate>(result);
  if (g.json) {
    json j = {{"kind", "certificate"}, {"outcome", pm::to_string(c.outcome)}};
    if (c.step) j["step"] = to_json(*c.step);
    if (c.wheel) j["wheel"] = {{"kind", c.wheel->kind}, {"rank", c.wheel->rank}};
    if (c.outcome == pm::WwtOutcome::PurePrickly) j["minimal_sets"] = c.minimal_sets;
    emit(j);
    return kOk;
  }
  std::cout << "outcome: " << pm::to_string(c.outcome);
  if (c.step) std::cout << " " << pm::to_string(c.step->move) << " " << c.step->element;
  if (c.wheel) std::cout << " " << c.wheel->kind << " rank " << c.wheel->rank;
  std::cout << "\n";
  for (const auto& z : c.minimal_sets) std::cout << "  prickly: " << set_text(z) << "\n";
  return kOk;
}

int cmd_enumerate(int n, const std::string& filter, const std::string& out_dir, int jobs) {
  auto all = pm::enumerate_small(n, pm::parse_filter(filter), jobs);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (std::size_t i = 0; i < all.size(); ++i) {
      std::ostringstream name;
      name << "n" << n << "_" << filter << "_" << i << ".pm";
      std::ofstream(std::filesystem::path(out_dir) / name.str(), std::ios::binary) << pm::io::serialize(all[i]);
    }
  }
  if (g.json) {
    json arr = json::array();
    for (const auto& m : all) arr.push_back(to_json(m));
    emit({{"n", n}, {"filter", filter}, {"count", all.size()}, {"polymatroids", arr}});
    return kOk;
  }
  std::cout << "count: " << all.size() << "\n";
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::vector<std::string> t;
    for (auto v : all[i].table()) t.push_back(std::to_string(v));
    std::cout << i << ": " << join(t, " ") << "\n";
  }
  return kOk;
}

int cmd_identities(const std::string& path, long samples, bool unchecked) {
  auto m = load(path, !unchecked);
  auto report = pm::identity_suite(m, samples);
  if (g.json) {
    json arr = json::array();
    for (const auto& r : report.results) {
      arr.push_back({{"name", r.name}, {"checked", r.checked}, {"failed", r.failed},
                     {"first_counterexample", r.first_counterexample}});
    }
    emit({{"all_passed", report.all_passed()}, {"results", arr}});
  } else {
    for (const auto& r : report.results) {
      std::cout << (r.failed ? "FAIL " : "ok   ") << r.name << " " << (r.checked - r.failed) << "/" << r.checked;
      if (r.failed) std::cout << "  first: " << r.first_counterexample;
      std::cout << "\n";
    }
  }
  return report.all_passed() ? kOk : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pm: integer 2-polymatroid toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g.json, "Machine-readable output");
  auto* boolean = app.add_flag("--boolean", "Read graph files as M2(G) (default)");
  auto* cycle = app.add_flag("--cycle", g.cycle, "Read graph files as the cycle matroid M(G)");
  boolean->excludes(cycle);

  std::string a, b;
  std::function<int()> run;

  auto* validate = app.add_subcommand("validate", "Check the polymatroid axioms");
  validate->add_option("file", a)->required();
  validate->callback([&] { run = [&] { return cmd_validate(a); }; });

  auto* info = app.add_subcommand("info", "Element kinds, connectivity, prickly sets, fans");
  info->add_option("file", a)->required();
  info->callback([&] { run = [&] { return cmd_info(a); }; });

  ApplyArgs ap;
  auto* apply = app.add_subcommand("apply", "Apply operations left to right");
  apply->add_option("file", ap.path)->required();
  apply->add_option("--delete", ap.del, "Delete a comma-joined set")->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  apply->add_option("--contract", ap.con, "Contract a comma-joined set")->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  apply->add_option("--compress", ap.compress, "Compress an element")->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  apply->add_option("--compactify-element", ap.element, "Compactify one element")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  apply->add_flag("--compactify", "Compactify")->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  apply->add_flag("--dual", "Dualize")->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  apply->add_option("--relabel", ap.relabel, "Rename a=b")->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  apply->add_option("--out", ap.out, "Write the result here");
  apply->callback([&] { run = [&] { return cmd_apply(ap, *apply); }; });

  auto* iso = app.add_subcommand("iso", "Test isomorphism");
  iso->add_option("a", a)->required();
  iso->add_option("b", b)->required();
  iso->callback([&] { run = [&] { return cmd_iso(a, b); }; });

  std::string kind = "c", mode = "iso";
  auto* minor = app.add_subcommand("minor", "Search for N as a minor of M");
  minor->add_option("m", a)->required();
  minor->add_option("n", b)->required();
  minor->add_option("--kind", kind)->check(CLI::IsMember({"c", "s", "special"}));
  minor->add_option("--mode", mode)->check(CLI::IsMember({"labelled", "iso"}));
  minor->callback([&] { run = [&] { return cmd_minor(a, b, kind, mode); }; });

  std::string theorem = "c";
  int jobs = 1;
  auto* splitter = app.add_subcommand("verify-splitter", "Certify the splitter theorem on (M, N)");
  splitter->add_option("m", a)->required();
  splitter->add_option("n", b)->required();
  splitter->add_option("--theorem", theorem)->check(CLI::IsMember({"c", "s"}));
  splitter->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  splitter->callback([&] { run = [&] { return cmd_verify_splitter(a, b, theorem, jobs); }; });

  auto* wwt = app.add_subcommand("verify-wwt", "Certify the wheels-and-whirls theorem on M");
  wwt->add_option("m", a)->required();
  wwt->callback([&] { run = [&] { return cmd_verify_wwt(a); }; });

  int n = 3;
  std::string filter = "all", out_dir;
  auto* enumerate = app.add_subcommand("enumerate", "List 2-polymatroids up to isomorphism");
  enumerate->add_option("-n", n)->check(CLI::Range(0, 5));
  enumerate->add_option("--filter", filter)
      ->check(CLI::IsMember({"all", "two_connected", "three_connected", "compact"}));
  enumerate->add_option("--out", out_dir);
  enumerate->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  enumerate->callback([&] { run = [&] { return cmd_enumerate(n, filter, out_dir, jobs); }; });

  long samples = 400;
  bool unchecked = false;
  auto* ids = app.add_subcommand("identities", "Run the identity catalog");
  ids->add_option("file", a)->required();
  ids->add_option("--samples", samples);
  ids->add_flag("--unchecked", unchecked, "Skip axiom validation");
  ids->callback([&] { run = [&] { return cmd_identities(a, samples, unchecked); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    return run();
  } catch (const pm::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const pm::AxiomViolation& e) {
    std::cerr << "axiom violation (" << pm::to_string(e.kind) << "): " << e.what() << "\n";
  } catch (const pm::HypothesisViolated& e) {
    std::cerr << "hypothesis violated: " << e.what() << "\n";
  } catch (const pm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
  }
  return kUsage;
}
