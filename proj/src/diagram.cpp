#include "hocolim/diagram.hpp"

#include <algorithm>

namespace hocolim {

namespace {

std::string pair_text(const GroupTable& g, std::size_t a, std::size_t b) {
  return "(" + g.name(a) + ", " + g.name(b) + ")";
}

}  // namespace

std::optional<std::string> GModuleComplex::check() const {
  if (!complex || !group) return "missing complex or group";
  if (action.size() != group->order()) return "action needs one map per group element";
  for (std::size_t g = 0; g < action.size(); ++g) {
    const GradedMap& f = action[g];
    if (f.degree() != 0 || !same_shape(*f.source(), *complex) || !same_shape(*f.target(), *complex)) {
      return "action of " + group->name(g) + " is not a degree-0 self-map";
    }
    if (auto v = verify_chain_map(f)) {
      return "action of " + group->name(g) + " is not a chain map in degree " + std::to_string(v->degree);
    }
  }
  if (!(action[group->identity()] == GradedMap::identity(complex))) return "identity element does not act trivially";
  for (std::size_t g = 0; g < action.size(); ++g) {
    for (std::size_t h = 0; h < action.size(); ++h) {
      if (!(compose(action[g], action[h]) == action[group->mul(h, g)])) {
        return "composition law fails for the pair " + pair_text(*group, g, h);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> LocalSystem::check() const {
  if (!group) return "missing group";
  if (action.size() != group->order()) return "action needs one matrix per group element";
  for (std::size_t g = 0; g < action.size(); ++g) {
    if (action[g].rows() != rank || action[g].cols() != rank || action[g].ring() != ring) {
      return "matrix of " + group->name(g) + " has the wrong shape";
    }
  }
  if (action[group->identity()] != Matrix::identity(ring, rank)) return "identity element does not act trivially";
  for (std::size_t g = 0; g < action.size(); ++g) {
    for (std::size_t h = 0; h < action.size(); ++h) {
      if (action[g] * action[h] != action[group->mul(h, g)]) {
        return "composition law fails for the pair " + pair_text(*group, g, h);
      }
    }
  }
  return std::nullopt;
}

LocalSystem LocalSystem::dual() const {
  LocalSystem out{group, ring, rank, {}};
  for (std::size_t g = 0; g < action.size(); ++g) out.action.push_back(action[group->inverse(g)].transpose());
  return out;
}

// ---------------------------------------------------------------------------

KomDiagram::KomDiagram(BasePtr base, std::vector<ComplexPtr> vertex_complexes)
    : base_(std::move(base)), vertices_(std::move(vertex_complexes)) {
  if (!base_) throw std::invalid_argument("KomDiagram: null base");
  if (vertices_.size() != base_->count(0)) {
    throw std::invalid_argument("KomDiagram: base has " + std::to_string(base_->count(0)) + " vertices but " +
                                std::to_string(vertices_.size()) + " complexes were given");
  }
  if (vertices_.empty()) throw std::invalid_argument("KomDiagram: base has no vertices");
  ring_ = vertices_.front()->ring();
  for (const auto& c : vertices_) {
    if (!c || c->ring() != ring_) throw std::invalid_argument("KomDiagram: vertex complexes must share one ring");
    if (auto v = verify_complex(*c)) {
      throw PreconditionError("KomDiagram: vertex complex fails d^2 = 0 in degree " + std::to_string(v->degree));
    }
    identities_.push_back(GradedMap::identity(c));
  }
}

const ComplexPtr& KomDiagram::source(int dim, std::size_t id) const { return vertices_[base_->vertex(dim, id, 0)]; }

const ComplexPtr& KomDiagram::target(int dim, std::size_t id) const { return vertices_[base_->vertex(dim, id, dim)]; }

int KomDiagram::min_degree() const {
  int lo = 0;
  bool any = false;
  for (const auto& c : vertices_) {
    for (int j = c->lo(); j <= c->hi(); ++j) {
      if (c->rank(j) > 0) {
        lo = any ? std::min(lo, j) : j;
        any = true;
        break;
      }
    }
  }
  return lo;
}

int KomDiagram::max_degree() const {
  int hi = 0;
  bool any = false;
  for (const auto& c : vertices_) {
    for (int j = c->hi(); j >= c->lo(); --j) {
      if (c->rank(j) > 0) {
        hi = any ? std::max(hi, j) : j;
        any = true;
        break;
      }
    }
  }
  return hi;
}

void KomDiagram::set_map(int dim, std::size_t id, GradedMap m) {
  if (dim < 1 || dim > base_->truncation()) throw std::invalid_argument("set_map: dimension out of range");
  const std::string where = "simplex " + base_->label(dim, id);
  if (!base_->is_nondegenerate(dim, id)) throw std::invalid_argument("set_map: " + where + " is degenerate");
  if (m.degree() != dim - 1) {
    throw std::invalid_argument("set_map: " + where + " needs a map of degree " + std::to_string(dim - 1));
  }
  if (!same_shape(*m.source(), *source(dim, id)) || !same_shape(*m.target(), *target(dim, id))) {
    throw std::invalid_argument("set_map: " + where + " map does not match its vertex complexes");
  }
  GradedMap fixed(source(dim, id), target(dim, id), m.degree());
  for (int j = m.source()->lo(); j <= m.source()->hi(); ++j) fixed.set_component(j, m.component(j));
  maps_.insert_or_assign({dim, id}, std::move(fixed));
}

const GradedMap* KomDiagram::stored(int dim, std::size_t id) const {
  auto it = maps_.find({dim, id});
  return it == maps_.end() ? nullptr : &it->second;
}

KomDiagram::Lookup KomDiagram::lookup(int dim, std::size_t id) const {
  if (dim == 0) return {Kind::identity, &identities_[id]};
  if (!base_->is_nondegenerate(dim, id)) {
    if (dim == 1) return {Kind::identity, &identities_[base_->face(1, id, 0)]};
    return {Kind::zero, nullptr};
  }
  if (const GradedMap* m = stored(dim, id)) return {Kind::stored, m};
  if (dim >= 2 && higher_default_zero_) return {Kind::zero, nullptr};
  return {Kind::missing, nullptr};
}

GradedMap KomDiagram::hat(int dim, std::size_t id) const {
  const Lookup l = lookup(dim, id);
  switch (l.kind) {
    case Kind::stored:
    case Kind::identity:
      return *l.map;
    case Kind::zero:
      return GradedMap::zero(source(dim, id), target(dim, id), dim - 1);
    case Kind::missing:
      break;
  }
  throw std::out_of_range("no map stored for simplex " + base_->label(dim, id));
}

GradedMap structure_rhs(const KomDiagram& d, int n, std::size_t id) {
  const SimplicialBase& b = d.base();
  GradedMap rhs = GradedMap::zero(d.source(n, id), d.target(n, id), n - 2);
  for (int l = 1; l < n; ++l) {
    const Scalar sign((n - l + 1) % 2 == 0 ? 1 : -1);
    GradedMap term = d.hat(n - 1, b.face(n, id, l));
    const auto back = d.lookup(n - l, b.back(n, id, l));
    const auto front = d.lookup(l, b.front(n, id, l));
    if (back.kind == KomDiagram::Kind::missing || front.kind == KomDiagram::Kind::missing) {
      throw std::out_of_range("missing map on a sub-simplex of " + b.label(n, id));
    }
    if (back.kind != KomDiagram::Kind::zero && front.kind != KomDiagram::Kind::zero) {
      term = term - compose(*back.map, *front.map);
    }
    rhs = rhs + term.scaled(sign);
  }
  return rhs;
}

GradedMap structure_residual(const KomDiagram& d, int n, std::size_t id) {
  const GradedMap f = d.hat(n, id);
  GradedMap lhs = f.post_differential() + f.pre_differential().scaled(Scalar(n % 2 == 0 ? 1 : -1));
  return lhs - structure_rhs(d, n, id);
}

namespace {

std::optional<std::pair<int, Matrix>> first_nonzero(const GradedMap& m) {
  for (int j = m.source()->lo(); j <= m.source()->hi(); ++j) {
    if (!m.component(j).is_zero()) return std::make_pair(j, m.component(j));
  }
  return std::nullopt;
}

bool depends_on_missing(const KomDiagram& d, int n, std::size_t id) {
  const SimplicialBase& b = d.base();
  if (d.lookup(n, id).kind == KomDiagram::Kind::missing) return true;
  for (int l = 1; l < n; ++l) {
    if (d.lookup(n - 1, b.face(n, id, l)).kind == KomDiagram::Kind::missing) return true;
    if (d.lookup(n - l, b.back(n, id, l)).kind == KomDiagram::Kind::missing) return true;
    if (d.lookup(l, b.front(n, id, l)).kind == KomDiagram::Kind::missing) return true;
  }
  return false;
}

}  // namespace

DiagramReport validate_diagram(const KomDiagram& d, std::optional<int> max_dim) {
  const int top = max_dim.value_or(d.base().truncation());
  if (top > d.base().truncation()) throw std::invalid_argument("validate_diagram: max_dim above truncation");
  DiagramReport report;
  for (int n = 1; n <= top; ++n) {
    for (std::size_t id : d.base().nondegenerate(n)) {
      if (d.lookup(n, id).kind == KomDiagram::Kind::missing) {
        report.missing.push_back({n, id, d.base().label(n, id)});
        continue;
      }
      if (depends_on_missing(d, n, id)) continue;
      if (auto bad = first_nonzero(structure_residual(d, n, id))) {
        report.violations.push_back({n, id, d.base().label(n, id), bad->first, bad->second});
      }
    }
  }
  return report;
}

KomDiagram constant_diagram(BasePtr base, ComplexPtr c) {
  const std::size_t nv = base->count(0);
  KomDiagram d(base, std::vector<ComplexPtr>(nv, c));
  for (std::size_t id : base->nondegenerate(1)) d.set_map(1, id, GradedMap::identity(c));
  d.set_higher_default_zero(true);
  return d;
}

KomDiagram constant_diagram(BasePtr base, RingSpec ring) {
  return constant_diagram(std::move(base), std::make_shared<const ChainComplex>(ChainComplex::unit(ring)));
}

KomDiagram from_strict_action(const GModuleComplex& m, int truncation) {
  if (auto err = m.check()) throw PreconditionError("from_strict_action: " + *err);
  auto nerve = std::make_shared<GroupNerve>(m.group, truncation);
  KomDiagram d(nerve, {m.complex});
  if (truncation >= 1) {
    for (std::size_t g = 0; g < m.group->order(); ++g) {
      if (g == m.group->identity()) continue;
      d.set_map(1, nerve->encode({g}), m.action[g]);
    }
  }
  d.set_higher_default_zero(true);
  return d;
}

CompletionResult complete_diagram(const KomDiagram& partial, std::optional<int> max_dim) {
  const int top = max_dim.value_or(partial.base().truncation());
  KomDiagram d = partial;
  for (int n = 1; n <= top; ++n) {
    for (std::size_t id : d.base().nondegenerate(n)) {
      const std::string label = d.base().label(n, id);
      GradedMap rhs = structure_rhs(d, n, id);
      if (d.stored(n, id)) {
        if (first_nonzero(structure_residual(d, n, id))) {
          return {std::nullopt, CompletionCertificate{n, id, label, "supplied map violates the structure equation"}};
        }
        continue;
      }
      if (n >= 2 && d.higher_default_zero() && !first_nonzero(structure_residual(d, n, id))) continue;
      auto x = solve_commutator(d.source(n, id), d.target(n, id), n - 1, n % 2 == 0 ? 1 : -1, rhs);
      if (!x) {
        return {std::nullopt, CompletionCertificate{n, id, label, "structure equation has no solution"}};
      }
      d.set_map(n, id, *x);
    }
  }
  return {std::move(d), std::nullopt};
}

}  // namespace hocolim
