#include "hocolim/instance.hpp"

#include <algorithm>
#include <sstream>

namespace hocolim::io {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

const json& need(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where, "missing field \"" + key + "\"");
  return j.at(key);
}

std::string need_string(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

long need_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<long>();
}

std::size_t need_index(const json& j, const std::string& where) {
  const long v = need_int(j, where);
  if (v < 0) fail(where, "expected a nonnegative index");
  return static_cast<std::size_t>(v);
}

int need_degree_key(const std::string& key, const std::string& where) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(key, &used);
    if (used != key.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    fail(where, "degree key \"" + key + "\" is not an integer");
  }
}

Scalar parse_scalar(const json& j, const RingSpec& ring, const std::string& where) {
  Scalar v;
  if (j.is_number_integer()) {
    v = Scalar(j.get<long>());
  } else if (j.is_string()) {
    try {
      v = Scalar(j.get<std::string>());
      v.canonicalize();
    } catch (const std::exception&) {
      fail(where, "bad rational \"" + j.get<std::string>() + "\"");
    }
    if (v.get_den() == 0) fail(where, "zero denominator");
  } else {
    fail(where, "expected an integer or a rational string");
  }
  try {
    return ring.normalize(v);
  } catch (const std::domain_error& e) {
    fail(where, e.what());
  }
}

json scalar_json(const Scalar& v) {
  if (v.get_den() == 1 && v.get_num().fits_slong_p()) return v.get_num().get_si();
  return scalar_text(v);
}

Triples parse_triples(const json& j, const RingSpec& ring, const std::string& where) {
  if (!j.is_array()) fail(where, "expected a list of [row, col, value] triples");
  std::map<std::pair<std::size_t, std::size_t>, Scalar> acc;  // (col, row)
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) fail(where, "each entry must be [row, col, value]");
    const std::size_t r = need_index(t[0], where);
    const std::size_t c = need_index(t[1], where);
    const Scalar v = parse_scalar(t[2], ring, where);
    auto& slot = acc[{c, r}];
    slot = ring.add(slot, v);
  }
  Triples out;
  for (const auto& [cr, v] : acc) {
    if (v != 0) out.emplace_back(cr.second, cr.first, v);
  }
  return out;
}

SparseBlocks parse_blocks(const json& j, const RingSpec& ring, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object keyed by source degree");
  SparseBlocks out;
  for (const auto& [k, v] : j.items()) {
    Triples t = parse_triples(v, ring, where + "[" + k + "]");
    if (!t.empty()) out[need_degree_key(k, where)] = std::move(t);
  }
  return out;
}

json triples_json(const Triples& t) {
  json out = json::array();
  for (const auto& [r, c, v] : t) out.push_back({r, c, scalar_json(v)});
  return out;
}

json blocks_json(const SparseBlocks& b) {
  json out = json::object();
  for (const auto& [deg, t] : b) out[std::to_string(deg)] = triples_json(t);
  return out;
}

Matrix to_matrix(const RingSpec& ring, std::size_t rows, std::size_t cols, const Triples& t, const std::string& where) {
  Matrix m(ring, rows, cols);
  for (const auto& [r, c, v] : t) {
    if (r >= rows || c >= cols) {
      fail(where, "entry (" + std::to_string(r) + ", " + std::to_string(c) + ") outside a " + std::to_string(rows) + "x" +
                      std::to_string(cols) + " block");
    }
    m.set(r, c, v);
  }
  return m;
}

GradedMap to_map(const SparseBlocks& b, const ComplexPtr& src, const ComplexPtr& tgt, int degree,
                 const std::string& where) {
  GradedMap f(src, tgt, degree);
  for (const auto& [deg, t] : b) {
    if (deg < src->lo() || deg > src->hi()) fail(where, "block in degree " + std::to_string(deg) + " outside the source");
    f.set_component(deg, to_matrix(src->ring(), tgt->rank(deg + degree), src->rank(deg), t, where));
  }
  return f;
}

RingSpec parse_ring(const json& j) {
  const std::string kind = need_string(need(j, "kind", "ring"), "ring.kind");
  if (kind == "Z") return RingSpec::integers();
  if (kind == "Q") return RingSpec::rationals();
  if (kind == "Fp") {
    const long p = need_int(need(j, "p", "ring"), "ring.p");
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) fail("ring.p", std::to_string(p) + " is not prime");
    return RingSpec::prime_field(static_cast<std::uint32_t>(p));
  }
  fail("ring.kind", "unknown ring \"" + kind + "\"");
}

json ring_json(const RingSpec& r) {
  switch (r.kind()) {
    case RingKind::integers:
      return {{"kind", "Z"}};
    case RingKind::rationals:
      return {{"kind", "Q"}};
    case RingKind::prime_field:
      return {{"kind", "Fp"}, {"p", r.characteristic()}};
  }
  return {};
}

ComplexPtr parse_complex(const std::string& name, const json& j, const RingSpec& ring) {
  const std::string where = "complexes." + name;
  const json& degs = need(j, "degrees", where);
  if (!degs.is_array() || degs.size() != 2) fail(where, "\"degrees\" must be [lo, hi]");
  const int lo = static_cast<int>(need_int(degs[0], where));
  const int hi = static_cast<int>(need_int(degs[1], where));
  if (hi < lo) fail(where, "empty degree range");
  std::vector<std::vector<std::string>> gens(hi - lo + 1);
  if (j.contains("generators")) {
    const json& g = j.at("generators");
    if (!g.is_object()) fail(where, "\"generators\" must be an object");
    for (const auto& [k, v] : g.items()) {
      const int d = need_degree_key(k, where);
      if (d < lo || d > hi) fail(where, "generators in degree " + k + " outside the range");
      if (!v.is_array()) fail(where, "generator list must be an array");
      for (const auto& s : v) gens[d - lo].push_back(need_string(s, where));
    }
  }
  ChainComplex c(ring, lo, gens);
  if (j.contains("differential")) {
    SparseBlocks b = parse_blocks(j.at("differential"), ring, where + ".differential");
    for (const auto& [d, t] : b) {
      if (d <= lo || d > hi) fail(where, "differential in degree " + std::to_string(d) + " outside (lo, hi]");
      c.set_differential(d, to_matrix(ring, c.rank(d - 1), c.rank(d), t, where + ".differential"));
    }
  }
  return std::make_shared<const ChainComplex>(std::move(c));
}

json complex_json(const ChainComplex& c) {
  json gens = json::object();
  json diff = json::object();
  for (int j = c.lo(); j <= c.hi(); ++j) {
    gens[std::to_string(j)] = c.generators(j);
    if (j > c.lo()) {
      Triples t;
      const Matrix& m = c.differential(j);
      for (std::size_t col = 0; col < m.cols(); ++col) {
        for (const auto& e : m.column(col)) t.emplace_back(e.row, col, e.value);
      }
      if (!t.empty()) diff[std::to_string(j)] = triples_json(t);
    }
  }
  return {{"degrees", {c.lo(), c.hi()}}, {"generators", gens}, {"differential", diff}};
}

GroupPtr parse_group(const std::string& name, const json& j) {
  const std::string where = "groups." + name;
  const json& el = need(j, "elements", where);
  if (!el.is_array() || el.empty()) fail(where, "\"elements\" must be a nonempty array");
  std::vector<std::string> names;
  for (const auto& e : el) names.push_back(need_string(e, where));
  const std::size_t n = names.size();
  const json& tab = need(j, "table", where);
  if (!tab.is_array() || tab.size() != n) fail(where, "table must have one row per element");
  std::vector<std::vector<std::size_t>> table;
  for (const auto& row : tab) {
    if (!row.is_array() || row.size() != n) fail(where, "table must be square");
    std::vector<std::size_t> r;
    for (const auto& v : row) {
      const std::size_t x = need_index(v, where);
      if (x >= n) fail(where, "table entry out of range");
      r.push_back(x);
    }
    table.push_back(std::move(r));
  }
  const std::string id = need_string(need(j, "identity", where), where);
  auto it = std::find(names.begin(), names.end(), id);
  if (it == names.end()) fail(where, "identity \"" + id + "\" is not an element");
  try {
    return std::make_shared<const GroupTable>(names, table, static_cast<std::size_t>(it - names.begin()));
  } catch (const std::invalid_argument& e) {
    throw ValidationError(where + ": " + e.what());
  }
}

json group_json(const GroupTable& g) {
  return {{"elements", g.names()}, {"table", g.table()}, {"identity", g.name(g.identity())}};
}

void check_complex_ref(const Instance& inst, const std::string& name, const std::string& where) {
  if (!inst.complexes.count(name)) fail(where, "unknown complex \"" + name + "\"");
}

void check_group_ref(const Instance& inst, const std::string& name, const std::string& where) {
  if (!inst.groups.count(name)) fail(where, "unknown group \"" + name + "\"");
}

DiagramSpec parse_diagram(const Instance& inst, const std::string& name, const json& j) {
  const std::string where = "diagrams." + name;
  DiagramSpec d;
  const json& base = need(j, "base", where);
  if (base.contains("nerve_of")) {
    d.base.kind = BaseSpec::Kind::nerve;
    d.base.group = need_string(base.at("nerve_of"), where + ".base");
    check_group_ref(inst, d.base.group, where);
  } else if (base.contains("standard_simplex")) {
    d.base.kind = BaseSpec::Kind::simplex;
    d.base.n = static_cast<int>(need_int(base.at("standard_simplex"), where + ".base"));
    if (d.base.n < 0) fail(where, "negative simplex dimension");
  } else {
    fail(where, "base must be {\"nerve_of\": group} or {\"standard_simplex\": n}");
  }
  const std::string kind = need_string(need(j, "kind", where), where + ".kind");
  if (kind == "constant") {
    d.kind = DiagramSpec::Kind::constant;
  } else if (kind == "strict") {
    d.kind = DiagramSpec::Kind::strict;
    if (d.base.kind != BaseSpec::Kind::nerve) fail(where, "strict diagrams live over a group nerve");
  } else if (kind == "coherent") {
    d.kind = DiagramSpec::Kind::coherent;
  } else {
    fail(where, "unknown kind \"" + kind + "\"");
  }
  if (j.contains("vertex")) {
    d.vertex = need_string(j.at("vertex"), where + ".vertex");
    check_complex_ref(inst, d.vertex, where);
  }
  if (j.contains("vertices")) {
    if (d.kind != DiagramSpec::Kind::coherent) fail(where, "\"vertices\" is only for coherent diagrams");
    if (!j.at("vertices").is_object()) fail(where, "\"vertices\" must map vertex labels to complexes");
    for (const auto& [k, v] : j.at("vertices").items()) {
      d.vertices[k] = need_string(v, where + ".vertices");
      check_complex_ref(inst, d.vertices[k], where);
    }
  }
  if (d.vertex.empty() && d.vertices.empty()) fail(where, "no vertex complex given");
  if (j.contains("action")) {
    if (d.kind != DiagramSpec::Kind::strict) fail(where, "\"action\" is only for strict diagrams");
    const GroupTable& g = *inst.groups.at(d.base.group);
    if (!j.at("action").is_object()) fail(where, "\"action\" must be an object");
    for (const auto& [k, v] : j.at("action").items()) {
      if (!g.find(k)) fail(where, "unknown group element \"" + k + "\"");
      d.action[k] = parse_blocks(v, inst.ring, where + ".action." + k);
    }
  }
  if (j.contains("maps")) {
    if (d.kind != DiagramSpec::Kind::coherent) fail(where, "\"maps\" is only for coherent diagrams");
    if (!j.at("maps").is_object()) fail(where, "\"maps\" must be an object");
    for (const auto& [k, v] : j.at("maps").items()) d.maps[k] = parse_blocks(v, inst.ring, where + ".maps." + k);
  }
  if (j.contains("higher_zero")) d.higher_zero = j.at("higher_zero").get<bool>();
  if (j.contains("complete")) d.complete = j.at("complete").get<bool>();
  return d;
}

json diagram_json(const DiagramSpec& d) {
  json out = json::object();
  if (d.base.kind == BaseSpec::Kind::nerve) {
    out["base"] = {{"nerve_of", d.base.group}};
  } else {
    out["base"] = {{"standard_simplex", d.base.n}};
  }
  switch (d.kind) {
    case DiagramSpec::Kind::constant:
      out["kind"] = "constant";
      break;
    case DiagramSpec::Kind::strict:
      out["kind"] = "strict";
      break;
    case DiagramSpec::Kind::coherent:
      out["kind"] = "coherent";
      break;
  }
  if (!d.vertex.empty()) out["vertex"] = d.vertex;
  if (!d.vertices.empty()) out["vertices"] = d.vertices;
  if (!d.action.empty()) {
    json a = json::object();
    for (const auto& [k, b] : d.action) a[k] = blocks_json(b);
    out["action"] = a;
  }
  if (!d.maps.empty()) {
    json m = json::object();
    for (const auto& [k, b] : d.maps) m[k] = blocks_json(b);
    out["maps"] = m;
  }
  if (d.higher_zero) out["higher_zero"] = true;
  if (d.complete) out["complete"] = true;
  return out;
}

GSetSpec parse_gset(const Instance& inst, const std::string& name, const json& j) {
  const std::string where = "gsets." + name;
  GSetSpec s;
  s.group = need_string(need(j, "group", where), where);
  check_group_ref(inst, s.group, where);
  const json& cells = need(j, "cells", where);
  if (!cells.is_array() || cells.empty()) fail(where, "\"cells\" must be a nonempty list of per-dimension lists");
  for (const auto& dim : cells) {
    if (!dim.is_array()) fail(where, "cells per dimension must be arrays");
    std::vector<std::string> names;
    for (const auto& c : dim) names.push_back(need_string(c, where));
    s.cells.push_back(std::move(names));
  }
  s.faces.assign(s.cells.size(), {});
  if (j.contains("faces")) {
    const json& f = j.at("faces");
    if (!f.is_array() || f.size() > s.cells.size()) fail(where, "\"faces\" must be a per-dimension list");
    for (std::size_t n = 0; n < f.size(); ++n) {
      for (const auto& cell : f[n]) {
        std::vector<std::size_t> fs;
        for (const auto& x : cell) fs.push_back(need_index(x, where));
        s.faces[n].push_back(std::move(fs));
      }
    }
  }
  const GroupTable& g = *inst.groups.at(s.group);
  if (j.contains("action")) {
    for (const auto& [k, v] : j.at("action").items()) {
      if (!g.find(k)) fail(where, "unknown group element \"" + k + "\"");
      std::vector<std::vector<std::size_t>> perm;
      for (const auto& dim : v) {
        std::vector<std::size_t> p;
        for (const auto& x : dim) p.push_back(need_index(x, where));
        perm.push_back(std::move(p));
      }
      s.action[k] = std::move(perm);
    }
  }
  return s;
}

json gset_json(const GSetSpec& s) {
  json out = {{"group", s.group}, {"cells", s.cells}, {"faces", s.faces}};
  json a = json::object();
  for (const auto& [k, v] : s.action) a[k] = v;
  out["action"] = a;
  return out;
}

TransformationSpec parse_transformation(const Instance& inst, const std::string& name, const json& j) {
  const std::string where = "transformations." + name;
  TransformationSpec t;
  t.source = need_string(need(j, "source", where), where);
  t.target = need_string(need(j, "target", where), where);
  for (const auto& d : {t.source, t.target}) {
    if (!inst.diagrams.count(d)) fail(where, "unknown diagram \"" + d + "\"");
  }
  const json& vm = need(j, "vertex_maps", where);
  if (!vm.is_object()) fail(where, "\"vertex_maps\" must map vertex labels to maps");
  for (const auto& [k, v] : vm.items()) t.vertex_maps[k] = parse_blocks(v, inst.ring, where + ".vertex_maps." + k);
  return t;
}

json transformation_json(const TransformationSpec& t) {
  json vm = json::object();
  for (const auto& [k, b] : t.vertex_maps) vm[k] = blocks_json(b);
  return {{"source", t.source}, {"target", t.target}, {"vertex_maps", vm}};
}

template <typename F>
void each_entry(const json& j, const std::string& key, F f) {
  if (!j.contains(key)) return;
  const json& section = j.at(key);
  if (!section.is_object()) fail(key, "must be an object");
  for (const auto& [k, v] : section.items()) f(k, v);
}

}  // namespace

std::string scalar_text(const Scalar& v) { return v.get_str(); }

Instance parse_instance(const json& j) {
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  Instance inst;
  if (j.contains("description")) inst.description = need_string(j.at("description"), "description");
  inst.ring = parse_ring(need(j, "ring", "instance"));
  each_entry(j, "complexes", [&](const std::string& k, const json& v) { inst.complexes[k] = parse_complex(k, v, inst.ring); });
  each_entry(j, "groups", [&](const std::string& k, const json& v) { inst.groups[k] = parse_group(k, v); });
  each_entry(j, "diagrams", [&](const std::string& k, const json& v) { inst.diagrams[k] = parse_diagram(inst, k, v); });
  each_entry(j, "gsets", [&](const std::string& k, const json& v) { inst.gsets[k] = parse_gset(inst, k, v); });
  each_entry(j, "transformations",
             [&](const std::string& k, const json& v) { inst.transformations[k] = parse_transformation(inst, k, v); });
  if (j.contains("requests")) {
    if (!j.at("requests").is_array()) throw ParseError("requests must be an array");
    inst.requests = j.at("requests");
  }
  return inst;
}

Instance parse_instance_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    return parse_instance(j);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed instance: ") + e.what());
  }
}

json serialize(const Instance& inst) {
  json out = json::object();
  if (!inst.description.empty()) out["description"] = inst.description;
  out["ring"] = ring_json(inst.ring);
  json cx = json::object();
  for (const auto& [k, c] : inst.complexes) cx[k] = complex_json(*c);
  out["complexes"] = cx;
  json gr = json::object();
  for (const auto& [k, g] : inst.groups) gr[k] = group_json(*g);
  out["groups"] = gr;
  json dg = json::object();
  for (const auto& [k, d] : inst.diagrams) dg[k] = diagram_json(d);
  out["diagrams"] = dg;
  json gs = json::object();
  for (const auto& [k, s] : inst.gsets) gs[k] = gset_json(s);
  out["gsets"] = gs;
  json tr = json::object();
  for (const auto& [k, t] : inst.transformations) tr[k] = transformation_json(t);
  out["transformations"] = tr;
  out["requests"] = inst.requests;
  return out;
}

Workspace::Workspace(const Instance& inst, int truncation) : inst_(inst), truncation_(truncation) {
  if (truncation < 0) throw std::invalid_argument("Workspace: negative truncation");
}

BasePtr Workspace::base(const BaseSpec& b) {
  const auto key = std::make_tuple(static_cast<int>(b.kind), b.group, b.n);
  auto it = bases_.find(key);
  if (it != bases_.end()) return it->second;
  BasePtr out = b.kind == BaseSpec::Kind::nerve ? nerve_of_group(inst_.groups.at(b.group), truncation_)
                                                : standard_simplex(b.n, truncation_);
  bases_.emplace(key, out);
  return out;
}

namespace {

std::pair<int, std::size_t> resolve_simplex(const SimplicialBase& b, const std::string& key, const std::string& where) {
  for (int n = 0; n <= b.truncation(); ++n) {
    if (auto id = b.find(n, key)) return {n, *id};
  }
  fail(where, "no simplex \"" + key + "\" up to dimension " + std::to_string(b.truncation()));
}

}  // namespace

KomDiagram Workspace::raw_diagram(const std::string& name) {
  auto it = inst_.diagrams.find(name);
  if (it == inst_.diagrams.end()) throw ParseError("unknown diagram \"" + name + "\"");
  const DiagramSpec& d = it->second;
  const std::string where = "diagrams." + name;
  BasePtr b = base(d.base);
  switch (d.kind) {
    case DiagramSpec::Kind::constant:
      if (d.vertex.empty()) fail(where, "constant diagrams need \"vertex\"");
      return constant_diagram(b, inst_.complexes.at(d.vertex));
    case DiagramSpec::Kind::strict: {
      const GModuleComplex m = strict_module(name);
      KomDiagram out(b, {m.complex});
      const auto& nerve = dynamic_cast<const GroupNerve&>(*b);
      for (std::size_t g = 0; truncation_ >= 1 && g < m.group->order(); ++g) {
        if (g != m.group->identity()) out.set_map(1, nerve.encode({g}), m.action[g]);
      }
      out.set_higher_default_zero(true);
      return out;
    }
    case DiagramSpec::Kind::coherent:
      break;
  }
  std::vector<ComplexPtr> verts;
  for (std::size_t v = 0; v < b->count(0); ++v) {
    const std::string label = b->label(0, v);
    auto vi = d.vertices.find(label);
    if (vi != d.vertices.end()) {
      verts.push_back(inst_.complexes.at(vi->second));
    } else if (!d.vertex.empty()) {
      verts.push_back(inst_.complexes.at(d.vertex));
    } else {
      fail(where, "no complex for vertex \"" + label + "\"");
    }
  }
  for (const auto& [label, c] : d.vertices) {
    if (!b->find(0, label)) fail(where, "unknown vertex \"" + label + "\"");
  }
  KomDiagram out(b, verts);
  for (const auto& [key, blocks] : d.maps) {
    const auto [n, id] = resolve_simplex(*b, key, where + ".maps");
    if (n == 0 || !b->is_nondegenerate(n, id)) fail(where, "maps live on nondegenerate simplices of dimension >= 1");
    out.set_map(n, id, to_map(blocks, out.source(n, id), out.target(n, id), n - 1, where + ".maps." + key));
  }
  out.set_higher_default_zero(d.higher_zero);
  if (d.complete) {
    auto r = complete_diagram(out);
    if (!r.diagram) {
      const auto& c = *r.certificate;
      const std::string msg = where + ": completion failed at " + c.label + ": " + c.reason;
      if (c.reason.rfind("supplied", 0) == 0) throw ValidationError(msg);
      throw InfeasibleError(msg);
    }
    return *r.diagram;
  }
  return out;
}

KomDiagram Workspace::diagram(const std::string& name) {
  auto cached = diagrams_.find(name);
  if (cached != diagrams_.end()) return cached->second;
  for (const auto& [cname, c] : inst_.complexes) {
    if (auto bad = verify_complex(*c)) {
      throw ValidationError("complexes." + cname + ": d^2 != 0 at degree " + std::to_string(bad->degree));
    }
  }
  KomDiagram d = raw_diagram(name);
  const DiagramReport rep = validate_diagram(d);
  if (!rep.ok()) {
    std::ostringstream msg;
    msg << "diagrams." << name << ":";
    for (const auto& m : rep.missing) msg << " missing map on " << m.label << ";";
    for (const auto& v : rep.violations) msg << " structure equation fails on " << v.label << " (degree " << v.degree << ");";
    throw ValidationError(msg.str());
  }
  diagrams_.emplace(name, d);
  return d;
}

GModuleComplex Workspace::strict_module(const std::string& name) {
  auto it = inst_.diagrams.find(name);
  if (it == inst_.diagrams.end()) throw ParseError("unknown diagram \"" + name + "\"");
  const DiagramSpec& d = it->second;
  const std::string where = "diagrams." + name;
  if (d.kind != DiagramSpec::Kind::strict) throw ParseError(where + ": not a strict diagram");
  GroupPtr g = inst_.groups.at(d.base.group);
  ComplexPtr c = inst_.complexes.at(d.vertex);
  GModuleComplex m{c, g, {}};
  for (std::size_t e = 0; e < g->order(); ++e) {
    auto a = d.action.find(g->name(e));
    if (a == d.action.end()) {
      if (e != g->identity()) fail(where, "no action given for \"" + g->name(e) + "\"");
      m.action.push_back(GradedMap::identity(c));
    } else {
      m.action.push_back(to_map(a->second, c, c, 0, where + ".action." + g->name(e)));
    }
  }
  if (auto err = m.check()) throw ValidationError(where + ": " + *err);
  return m;
}

GSemiSimplicialSet Workspace::gset(const std::string& name) {
  auto it = inst_.gsets.find(name);
  if (it == inst_.gsets.end()) throw ParseError("unknown gset \"" + name + "\"");
  const GSetSpec& s = it->second;
  GSemiSimplicialSet x;
  x.group = inst_.groups.at(s.group);
  x.cells = s.cells;
  x.faces = s.faces;
  for (std::size_t e = 0; e < x.group->order(); ++e) {
    auto a = s.action.find(x.group->name(e));
    if (a != s.action.end()) {
      x.action.push_back(a->second);
    } else if (e == x.group->identity()) {
      std::vector<std::vector<std::size_t>> id;
      for (const auto& cells : s.cells) {
        std::vector<std::size_t> p(cells.size());
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
        id.push_back(std::move(p));
      }
      x.action.push_back(std::move(id));
    } else {
      fail("gsets." + name, "no action given for \"" + x.group->name(e) + "\"");
    }
  }
  if (auto err = x.check()) throw ValidationError("gsets." + name + ": " + *err);
  return x;
}

NatTransformation Workspace::transformation(const std::string& name) {
  auto it = inst_.transformations.find(name);
  if (it == inst_.transformations.end()) throw ParseError("unknown transformation \"" + name + "\"");
  const TransformationSpec& t = it->second;
  const std::string where = "transformations." + name;
  const KomDiagram f0 = diagram(t.source);
  const KomDiagram f1 = diagram(t.target);
  if (f0.base_ptr() != f1.base_ptr()) fail(where, "source and target live on different bases");
  std::vector<GradedMap> vmaps;
  for (std::size_t v = 0; v < f0.base().count(0); ++v) {
    const std::string label = f0.base().label(0, v);
    auto m = t.vertex_maps.find(label);
    if (m == t.vertex_maps.end()) fail(where, "no vertex map for \"" + label + "\"");
    vmaps.push_back(to_map(m->second, f0.vertex_complex(v), f1.vertex_complex(v), 0, where + ".vertex_maps." + label));
  }
  for (const auto& [label, m] : t.vertex_maps) {
    if (!f0.base().find(0, label)) fail(where, "unknown vertex \"" + label + "\"");
  }
  for (std::size_t v = 0; v < vmaps.size(); ++v) {
    if (verify_chain_map(vmaps[v])) {
      throw ValidationError(where + ": vertex map at " + f0.base().label(0, v) + " is not a chain map");
    }
  }
  auto r = complete_transformation(f0, f1, vmaps, truncation_ - 1);
  if (!r.transformation) {
    throw InfeasibleError(where + ": no coherent extension (obstruction at " + r.certificate->label + ": " +
                          r.certificate->reason + ")");
  }
  return *r.transformation;
}

}  // namespace hocolim::io
