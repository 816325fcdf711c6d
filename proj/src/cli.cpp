#include "hocolim/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hocolim/examples.hpp"
#include "hocolim/instance.hpp"

namespace hocolim::io {

using nlohmann::json;

namespace {

struct Options {
  std::string input;
  std::string window;
  std::string format = "text";
  std::string out;
  std::string diagram;
  std::string transformation;
  std::string target;
  std::string flavor = "thin";
  int page = 0;
  int degree = -1;
  int index = -1;
  int dim = 2;
  int truncation = -1;
};

struct Report {
  json data;
  std::string text;
  int code = exit_ok;
};

std::string read_input(const std::string& input) {
  if (input.empty()) throw ParseError("no --input given");
  std::string name = input;
  if (name.rfind("example:", 0) == 0) name = name.substr(8);
  if (std::filesystem::exists(input)) {
    std::ifstream f(input);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }
  const auto& ex = bundled_examples();
  auto it = ex.find(name);
  if (it != ex.end()) return it->second;
  throw ParseError("cannot read input \"" + input + "\" (not a file or a bundled example)");
}

std::pair<int, int> parse_window(const std::string& w) {
  const auto dots = w.find("..");
  if (dots == std::string::npos) throw ParseError("window must look like LO..HI");
  try {
    const int lo = std::stoi(w.substr(0, dots));
    const int hi = std::stoi(w.substr(dots + 2));
    if (hi < lo) throw ParseError("window " + w + " is empty");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ParseError("window must look like LO..HI");
  }
}

// First request for this subcommand; fills options that were not given.
void apply_request(const Instance& inst, const std::string& op, Options& o) {
  for (const auto& r : inst.requests) {
    if (!r.is_object() || r.value("op", "") != op) continue;
    if (!o.diagram.empty() && r.contains("diagram") && r.at("diagram") != o.diagram) continue;
    if (!o.target.empty() && r.contains("target") && r.at("target") != o.target) continue;
    if (!o.transformation.empty() && r.contains("transformation") && r.at("transformation") != o.transformation) continue;
    try {
      if (o.diagram.empty() && r.contains("diagram")) o.diagram = r.at("diagram").get<std::string>();
      if (o.target.empty() && r.contains("target")) o.target = r.at("target").get<std::string>();
      if (o.transformation.empty() && r.contains("transformation")) o.transformation = r.at("transformation").get<std::string>();
      if (o.window.empty() && r.contains("window")) {
        const auto& w = r.at("window");
        o.window = std::to_string(w.at(0).get<int>()) + ".." + std::to_string(w.at(1).get<int>());
      }
      if (o.page == 0 && r.contains("page")) o.page = r.at("page").get<int>();
      if (o.degree < 0 && r.contains("degree")) o.degree = r.at("degree").get<int>();
      if (o.index < 0 && r.contains("index")) o.index = r.at("index").get<int>();
    } catch (const json::exception& e) {
      throw ParseError(std::string("malformed request: ") + e.what());
    }
    return;
  }
}

std::string only_key(const auto& m, const std::string& what) {
  if (m.size() == 1) return m.begin()->first;
  throw ParseError("please name the " + what + " (the instance has " + std::to_string(m.size()) + ")");
}

int lowest_degree(const Instance& inst) {
  int best = 0;
  bool any = false;
  for (const auto& [name, c] : inst.complexes) {
    for (int j = c->lo(); j <= c->hi(); ++j) {
      if (c->rank(j) > 0) {
        best = any ? std::min(best, j) : j;
        any = true;
        break;
      }
    }
  }
  return best;
}

int truncation_for(const Instance& inst, const Options& o, int hi) {
  if (o.truncation >= 0) return o.truncation;
  return std::max(1, hi + 1 - lowest_degree(inst)) + 1;
}

json group_json(const HomologyGroup& g, const HomologySummary& s, int j) {
  json t = json::array();
  for (const auto& x : g.torsion) t.push_back(scalar_text(x));
  return {{"text", s.describe(j)}, {"free_rank", g.free_rank}, {"torsion", t}};
}

json summary_json(const HomologySummary& s) {
  json out = json::object();
  for (int j = s.lo; j <= s.hi(); ++j) out[std::to_string(j)] = group_json(s.at(j), s, j);
  return out;
}

std::string window_text(int lo, int hi) { return std::to_string(lo) + ".." + std::to_string(hi); }

Flavor flavor_of(const Options& o) {
  if (o.flavor == "thin") return Flavor::thin;
  if (o.flavor == "fat") return Flavor::fat;
  throw ParseError("--flavor must be thin or fat");
}

HocolimComplex build(const KomDiagram& d, int lo, int hi, Flavor f) {
  return f == Flavor::thin ? build_hocolim(d, lo, hi) : build_fat_hocolim(d, lo, hi);
}

Report cmd_groups(const Instance& inst, Options o, bool cohom) {
  const std::string op = cohom ? "cohomology" : "homology";
  apply_request(inst, op, o);
  if (o.diagram.empty()) o.diagram = only_key(inst.diagrams, "diagram (--diagram)");
  const auto [lo, hi] = parse_window(o.window.empty() ? "0..4" : o.window);
  Workspace ws(inst, truncation_for(inst, o, hi));
  const KomDiagram d = ws.diagram(o.diagram);
  const HocolimComplex h = build(d, lo, hi, flavor_of(o));
  const HomologySummary s = cohom ? hypercohomology(h, lo, hi) : hocolim_homology(h, lo, hi);
  Report r;
  r.data = {{"command", op}, {"diagram", o.diagram}, {"ring", inst.ring.name()}, {"window", {lo, hi}},
            {"flavor", o.flavor}, {"groups", summary_json(s)}};
  std::ostringstream t;
  t << op << " of " << o.diagram << " over " << inst.ring.name() << ", degrees " << window_text(lo, hi) << "\n";
  for (int j = lo; j <= hi; ++j) t << (cohom ? "H^" : "H_") << j << " = " << s.describe(j) << "\n";
  r.text = t.str();
  return r;
}

std::vector<std::vector<std::string>> dense_text(const Matrix& m) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : m.to_dense()) {
    std::vector<std::string> r;
    for (const auto& v : row) r.push_back(scalar_text(v));
    out.push_back(std::move(r));
  }
  return out;
}

Report cmd_module_action(const Instance& inst, Options o) {
  apply_request(inst, "module-action", o);
  if (o.diagram.empty()) o.diagram = only_key(inst.diagrams, "diagram (--diagram)");
  if (o.degree < 0) o.degree = 1;
  if (o.index < 0) o.index = 0;
  const auto [lo, hi] = parse_window(o.window.empty() ? "0..4" : o.window);
  if (!inst.ring.is_field()) throw InfeasibleError("module-action works over a field; the instance ring is " + inst.ring.name());
  if (o.degree > hi) throw ParseError("class degree lies above the window");
  Workspace ws(inst, truncation_for(inst, o, hi));
  const KomDiagram d = ws.diagram(o.diagram);
  const HocolimComplex h = build_hocolim(d, lo, hi);
  const HocolimComplex unit = build_hocolim(constant_diagram(d.base_ptr(), inst.ring), 0, std::max(hi, o.degree));
  const std::size_t avail = cohomology_basis(unit.complex(), o.degree).dimension();
  if (static_cast<std::size_t>(o.index) >= avail) {
    throw InfeasibleError("H^" + std::to_string(o.degree) + " of the base has dimension " + std::to_string(avail) +
                          "; no class with index " + std::to_string(o.index));
  }
  const Cochain beta = cohomology_representative(unit, o.degree, o.index);
  Report r;
  json maps = json::object();
  std::ostringstream t;
  t << "action of the base class (degree " << o.degree << ", index " << o.index << ") on H^*(" << o.diagram << ")\n";
  for (int m = lo; m + o.degree <= hi; ++m) {
    const Matrix a = action_matrix(unit, beta, h, m);
    maps[std::to_string(m)] = {{"rows", a.rows()}, {"cols", a.cols()}, {"rank", rank(a)}, {"matrix", dense_text(a)}};
    t << "H^" << m << " -> H^" << m + o.degree << ": " << a.rows() << "x" << a.cols() << ", rank " << rank(a);
    if (a.rows() && a.cols()) t << ", matrix " << json(dense_text(a)).dump();
    t << "\n";
  }
  r.data = {{"command", "module-action"}, {"diagram", o.diagram}, {"ring", inst.ring.name()}, {"window", {lo, hi}},
            {"class", {{"degree", o.degree}, {"index", o.index}}}, {"maps", maps}};
  r.text = t.str();
  return r;
}

Report cmd_spectral(const Instance& inst, Options o) {
  apply_request(inst, "spectral-sequence", o);
  if (o.diagram.empty()) o.diagram = only_key(inst.diagrams, "diagram (--diagram)");
  if (o.page <= 0) o.page = 2;
  const auto [lo, hi] = parse_window(o.window.empty() ? "0..4" : o.window);
  if (!inst.ring.is_field()) throw InfeasibleError("spectral-sequence works over a field; the instance ring is " + inst.ring.name());
  Workspace ws(inst, truncation_for(inst, o, hi));
  const KomDiagram d = ws.diagram(o.diagram);
  const HocolimComplex h = build_hocolim(d, std::min(lo, d.min_degree()), hi);
  const auto pages = spectral_sequence(h, o.page);
  const auto inf = spectral_sequence(h, infinity_page(h)).back();
  const HomologySummary hs = hocolim_homology(h, lo, hi);
  const SpectralSequencePage& pg = pages.back();
  json entries = json::array();
  std::ostringstream t;
  t << "E^" << o.page << " of the simplex-dimension filtration of hocolim " << o.diagram << " (nonzero entries)\n";
  for (const auto& [pq, dim] : pg.dims) {
    const int tot = pq.first + pq.second;
    if (dim == 0 || tot < lo || tot > hi) continue;
    entries.push_back({{"p", pq.first}, {"q", pq.second}, {"dim", dim}});
    t << "  E^" << o.page << "_{" << pq.first << "," << pq.second << "} = " << dim << "\n";
  }
  json totals = json::object();
  bool all = true;
  for (int j = lo; j <= hi; ++j) {
    const std::size_t e = inf.total(j);
    const std::size_t hdim = hs.at(j).free_rank;
    all = all && e == hdim;
    totals[std::to_string(j)] = {{"e_infinity", e}, {"homology", hdim}, {"match", e == hdim}};
    t << "total degree " << j << ": E^inf " << e << ", H_" << j << " " << hdim << (e == hdim ? " MATCH" : " MISMATCH") << "\n";
  }
  Report r;
  r.data = {{"command", "spectral-sequence"}, {"diagram", o.diagram}, {"page", o.page}, {"window", {lo, hi}},
            {"entries", entries}, {"totals", totals}, {"infinity_page", inf.r}};
  r.text = t.str();
  if (!all) r.code = exit_infeasible;
  return r;
}

Report cmd_induced(const Instance& inst, Options o) {
  apply_request(inst, "induced-map", o);
  if (o.transformation.empty()) o.transformation = only_key(inst.transformations, "transformation (--transformation)");
  const auto [lo, hi] = parse_window(o.window.empty() ? "0..4" : o.window);
  Workspace ws(inst, truncation_for(inst, o, hi) + 1);
  const NatTransformation t = ws.transformation(o.transformation);
  const Flavor fl = flavor_of(o);
  const HocolimComplex h0 = build(t.source(), lo, hi, fl);
  const HocolimComplex h1 = build(t.target(), lo, hi, fl);
  const GradedMap f =
      fl == Flavor::thin ? induced_map(t, h0, h1) : induced_map_summed(SummedNatTransformation::from(t), h0, h1);
  const bool chain = !verify_chain_map(f);
  const HomologySummary s0 = homology(h0.complex(), lo, hi);
  const HomologySummary s1 = homology(h1.complex(), lo, hi);
  json degrees = json::object();
  std::ostringstream txt;
  txt << "induced map of " << o.transformation << " on " << o.flavor << " hocolims, degrees " << window_text(lo, hi)
      << "\nchain map: " << (chain ? "yes" : "NO") << "\n";
  bool quasi = true;
  for (int j = lo; j <= hi; ++j) {
    json e = {{"source", s0.describe(j)}, {"target", s1.describe(j)}};
    txt << "H_" << j << ": " << s0.describe(j) << " -> " << s1.describe(j);
    if (inst.ring.is_field()) {
      const std::size_t rk = induced_homology_rank(f, j);
      e["rank"] = rk;
      quasi = quasi && rk == s0.at(j).free_rank && rk == s1.at(j).free_rank;
      txt << ", rank " << rk;
    }
    degrees[std::to_string(j)] = e;
    txt << "\n";
  }
  Report r;
  r.data = {{"command", "induced-map"}, {"transformation", o.transformation}, {"flavor", o.flavor}, {"window", {lo, hi}},
            {"chain_map", chain}, {"degrees", degrees}};
  if (inst.ring.is_field()) {
    r.data["quasi_isomorphism"] = quasi;
    txt << "quasi-isomorphism in the window: " << (quasi ? "yes" : "no") << "\n";
  }
  r.text = txt.str();
  if (!chain) r.code = exit_infeasible;
  return r;
}

Report compare(const std::string& command, const std::string& name, const std::string& oracle, int lo, int hi,
               const HomologySummary& ours, const HomologySummary& theirs) {
  json degrees = json::object();
  std::ostringstream t;
  t << command << " for " << name << ", degrees " << window_text(lo, hi) << "\n";
  bool all = true;
  for (int j = lo; j <= hi; ++j) {
    const bool ok = ours.at(j) == theirs.at(j);
    all = all && ok;
    degrees[std::to_string(j)] = {{"hocolim", ours.describe(j)}, {oracle, theirs.describe(j)}, {"match", ok}};
    t << "H^" << j << ": hocolim " << ours.describe(j) << ", " << oracle << " " << theirs.describe(j) << "  "
      << (ok ? "MATCH" : "MISMATCH") << "\n";
  }
  Report r;
  r.data = {{"command", command}, {"name", name}, {"window", {lo, hi}}, {"degrees", degrees}, {"match", all}};
  r.text = t.str();
  if (!all) r.code = exit_infeasible;
  return r;
}

GModuleComplex module_of(Workspace& ws, const std::string& name) {
  const auto& spec = ws.instance().diagrams.at(name);
  if (spec.base.kind != BaseSpec::Kind::nerve) throw ParseError("diagram " + name + " does not live over a group nerve");
  if (spec.kind == DiagramSpec::Kind::strict) return ws.strict_module(name);
  if (spec.kind == DiagramSpec::Kind::constant) {
    GroupPtr g = ws.instance().groups.at(spec.base.group);
    ComplexPtr c = ws.instance().complexes.at(spec.vertex);
    GModuleComplex m{c, g, {}};
    for (std::size_t i = 0; i < g->order(); ++i) m.action.push_back(GradedMap::identity(c));
    return m;
  }
  throw ParseError("diagram " + name + " is not a strict action");
}

Report cmd_compare(const Instance& inst, Options o) {
  apply_request(inst, "compare-oracle", o);
  if (o.diagram.empty()) o.diagram = only_key(inst.diagrams, "diagram (--diagram)");
  if (!inst.diagrams.count(o.diagram)) throw ParseError("unknown diagram \"" + o.diagram + "\"");
  const auto [lo, hi] = parse_window(o.window.empty() ? "0..4" : o.window);
  Workspace ws(inst, truncation_for(inst, o, hi));
  const KomDiagram d = ws.diagram(o.diagram);
  const GModuleComplex m = module_of(ws, o.diagram);
  return compare("compare-oracle", o.diagram, "ext", lo, hi, hypercohomology(build_hocolim(d, lo, hi), lo, hi),
                 ext_over_group_ring(m, lo, hi));
}

Report cmd_borel(const Instance& inst, Options o) {
  apply_request(inst, "borel", o);
  if (o.target.empty()) o.target = o.diagram;
  if (o.target.empty()) {
    if (inst.gsets.size() == 1) {
      o.target = inst.gsets.begin()->first;
    } else {
      o.target = only_key(inst.diagrams, "target (--target)");
    }
  }
  const auto [lo, hi] = parse_window(o.window.empty() ? "0..4" : o.window);
  const int trunc = truncation_for(inst, o, hi);
  Workspace ws(inst, trunc);
  GModuleComplex m;
  std::optional<KomDiagram> d;
  if (inst.gsets.count(o.target)) {
    m = ws.gset(o.target).chains(inst.ring);
    d = from_strict_action(m, trunc);
  } else if (inst.diagrams.count(o.target)) {
    d = ws.diagram(o.target);
    m = module_of(ws, o.target);
  } else {
    throw ParseError("unknown target \"" + o.target + "\"");
  }
  return compare("borel", o.target, "borel", lo, hi, hypercohomology(build_hocolim(*d, lo, hi), lo, hi),
                 borel_cohomology(m, lo, hi));
}

Report cmd_list_examples() {
  Report r;
  json list = json::array();
  std::ostringstream t;
  for (const auto& [id, text] : bundled_examples()) {
    std::string desc;
    try {
      desc = json::parse(text).value("description", "");
    } catch (const json::exception&) {
    }
    list.push_back({{"id", id}, {"description", desc}});
    t << id << "  " << desc << "\n";
  }
  r.data = {{"command", "list-examples"}, {"examples", list}};
  r.text = t.str();
  return r;
}

Report cmd_list_simplices(const Instance& inst, Options o) {
  if (o.diagram.empty()) o.diagram = only_key(inst.diagrams, "diagram (--diagram)");
  auto it = inst.diagrams.find(o.diagram);
  if (it == inst.diagrams.end()) throw ParseError("unknown diagram \"" + o.diagram + "\"");
  if (o.dim < 0) throw ParseError("--dim must be nonnegative");
  Workspace ws(inst, std::max(o.dim, 1));
  BasePtr b = ws.base(it->second.base);
  json dims = json::object();
  std::ostringstream t;
  for (int n = 0; n <= o.dim; ++n) {
    json labels = json::array();
    t << "dim " << n << ":";
    for (std::size_t id : b->nondegenerate(n)) {
      labels.push_back(b->label(n, id));
      t << " " << b->label(n, id);
    }
    t << "\n";
    dims[std::to_string(n)] = labels;
  }
  Report r;
  r.data = {{"command", "list-simplices"}, {"diagram", o.diagram}, {"nondegenerate", dims}};
  r.text = t.str();
  return r;
}

Report cmd_validate(const Instance& inst, Options o) {
  int hi = 4;
  if (!o.window.empty()) hi = parse_window(o.window).second;
  Workspace ws(inst, truncation_for(inst, o, hi));
  json items = json::array();
  std::ostringstream t;
  int code = exit_ok;
  auto record = [&](const std::string& what, auto&& check) {
    std::string status = "ok", message;
    try {
      check();
    } catch (const ValidationError& e) {
      status = "invalid";
      message = e.what();
      code = exit_validation;
    } catch (const PreconditionError& e) {
      status = "invalid";
      message = e.what();
      code = exit_validation;
    } catch (const InfeasibleError& e) {
      status = "infeasible";
      message = e.what();
      if (code == exit_ok) code = exit_infeasible;
    }
    items.push_back({{"object", what}, {"status", status}, {"message", message}});
    t << status << "  " << what << (message.empty() ? "" : "  (" + message + ")") << "\n";
  };
  for (const auto& [name, c] : inst.complexes) {
    record("complex " + name, [&] {
      if (auto bad = verify_complex(*c)) {
        throw ValidationError("d^2 != 0 at degree " + std::to_string(bad->degree) + ", entry (" +
                              std::to_string(bad->row) + ", " + std::to_string(bad->col) + ")");
      }
    });
  }
  for (const auto& [name, g] : inst.groups) record("group " + name, [] {});
  for (const auto& [name, d] : inst.diagrams) {
    if (d.kind == DiagramSpec::Kind::strict) record("action " + name, [&] { ws.strict_module(name); });
    record("diagram " + name, [&] { ws.diagram(name); });
  }
  for (const auto& [name, s] : inst.gsets) record("gset " + name, [&] { ws.gset(name); });
  for (const auto& [name, tr] : inst.transformations) {
    record("transformation " + name, [&] {
      const NatTransformation nt = ws.transformation(name);
      const auto rep = validate_nat_trans(nt, ws.truncation() - 1);
      if (!rep.ok()) throw ValidationError("structure equation fails");
    });
  }
  Report r;
  r.data = {{"command", "validate"}, {"truncation", ws.truncation()}, {"objects", items}, {"ok", code == exit_ok}};
  r.text = t.str();
  r.code = code;
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homotopy colimits of chain-complex diagrams over simplicial sets"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub, bool input) {
    if (input) sub->add_option("--input", o.input, "instance JSON file or bundled example id")->required();
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", o.out, "write the report to this file");
  };
  auto windowed = [&](CLI::App* sub) {
    sub->add_option("--window", o.window, "degree window LO..HI");
    sub->add_option("--truncation", o.truncation, "base truncation (default: from the window)");
  };
  const std::vector<std::pair<std::string, std::string>> names{
      {"validate", "check every object of an instance"},
      {"cohomology", "hypercohomology of a diagram"},
      {"homology", "homology of the homotopy colimit"},
      {"module-action", "action of a base cohomology class on hypercohomology"},
      {"spectral-sequence", "pages of the simplex-dimension filtration"},
      {"induced-map", "map induced by a natural transformation"},
      {"compare-oracle", "hypercohomology against Ext over the group ring"},
      {"borel", "hypercohomology against Borel cohomology"},
      {"list-examples", "bundled instances"},
      {"list-simplices", "nondegenerate simplices of a diagram's base"}};
  std::map<std::string, CLI::App*> subs;
  for (const auto& [n, help] : names) subs[n] = app.add_subcommand(n, help);
  for (const auto& [n, sub] : subs) {
    common(sub, n != "list-examples");
    if (n != "list-examples" && n != "list-simplices") windowed(sub);
  }
  for (auto n : {"cohomology", "homology", "module-action", "spectral-sequence", "compare-oracle", "list-simplices"}) {
    subs[n]->add_option("--diagram", o.diagram, "diagram name");
  }
  for (auto n : {"cohomology", "homology", "induced-map"}) {
    subs[n]->add_option("--flavor", o.flavor, "thin or fat")->check(CLI::IsMember({"thin", "fat"}));
  }
  subs["module-action"]->add_option("--degree", o.degree, "degree of the base class");
  subs["module-action"]->add_option("--index", o.index, "index of the base class in the cohomology basis");
  subs["spectral-sequence"]->add_option("--page", o.page, "page number r >= 1");
  subs["induced-map"]->add_option("--transformation", o.transformation, "transformation name");
  subs["borel"]->add_option("--target", o.target, "gset or strict diagram name");
  subs["list-simplices"]->add_option("--dim", o.dim, "largest dimension to list");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_parse;
  }

  Report r;
  try {
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "list-examples") {
      r = cmd_list_examples();
    } else {
      const Instance inst = parse_instance_text(read_input(o.input));
      if (cmd == "validate") r = cmd_validate(inst, o);
      if (cmd == "cohomology") r = cmd_groups(inst, o, true);
      if (cmd == "homology") r = cmd_groups(inst, o, false);
      if (cmd == "module-action") r = cmd_module_action(inst, o);
      if (cmd == "spectral-sequence") r = cmd_spectral(inst, o);
      if (cmd == "induced-map") r = cmd_induced(inst, o);
      if (cmd == "compare-oracle") r = cmd_compare(inst, o);
      if (cmd == "borel") r = cmd_borel(inst, o);
      if (cmd == "list-simplices") r = cmd_list_simplices(inst, o);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_parse;
  } catch (const ValidationError& e) {
    err << "validation failed: " << e.what() << "\n";
    return exit_validation;
  } catch (const PreconditionError& e) {
    err << "validation failed: " << e.what() << "\n";
    return exit_validation;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return exit_infeasible;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_parse;
  }

  const std::string rendered = o.format == "json" ? r.data.dump(2) + "\n" : r.text;
  if (o.out.empty()) {
    out << rendered;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      err << "cannot write " << o.out << "\n";
      return exit_parse;
    }
    f << rendered;
    out << "wrote " << o.out << "\n";
  }
  if (r.code == exit_validation) err << "validation failed\n";
  if (r.code == exit_infeasible) err << "infeasible or mismatched result\n";
  return r.code;
}

}  // namespace hocolim::io
