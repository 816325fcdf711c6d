#include "hocolim/transform.hpp"

#include <algorithm>
#include <stdexcept>

namespace hocolim {

namespace {

Scalar sign_of(int e) { return Scalar(e % 2 == 0 ? 1 : -1); }

// F̂ ∘ m, or nothing when F̂ is zero; throws on missing data.
std::optional<GradedMap> after_hat(const KomDiagram& d, int dim, std::size_t id, const GradedMap& m) {
  const auto l = d.lookup(dim, id);
  switch (l.kind) {
    case KomDiagram::Kind::missing:
      throw std::out_of_range("missing map on " + d.base().label(dim, id));
    case KomDiagram::Kind::zero:
      return std::nullopt;
    case KomDiagram::Kind::identity:
      return m;
    case KomDiagram::Kind::stored:
      break;
  }
  return compose(*l.map, m);
}

std::optional<GradedMap> before_hat(const GradedMap& m, const KomDiagram& d, int dim, std::size_t id) {
  const auto l = d.lookup(dim, id);
  switch (l.kind) {
    case KomDiagram::Kind::missing:
      throw std::out_of_range("missing map on " + d.base().label(dim, id));
    case KomDiagram::Kind::zero:
      return std::nullopt;
    case KomDiagram::Kind::identity:
      return m;
    case KomDiagram::Kind::stored:
      break;
  }
  return compose(m, *l.map);
}

void require_same_base(const KomDiagram& a, const KomDiagram& b) {
  if (a.base_ptr() != b.base_ptr()) throw std::invalid_argument("transformation: diagrams live on different bases");
  if (a.ring() != b.ring()) throw std::invalid_argument("transformation: diagrams over different rings");
}

std::optional<std::pair<int, Matrix>> first_nonzero(const GradedMap& m) {
  for (int j = m.source()->lo(); j <= m.source()->hi(); ++j) {
    if (!m.component(j).is_zero()) return std::make_pair(j, m.component(j));
  }
  return std::nullopt;
}

}  // namespace

NatTransformation::NatTransformation(KomDiagram source, KomDiagram target)
    : source_(std::move(source)), target_(std::move(target)) {
  require_same_base(source_, target_);
}

void NatTransformation::set(int dim, std::size_t id, int i, GradedMap m) {
  if (i < 0 || i > dim) throw std::invalid_argument("NatTransformation::set: index out of range");
  if (!base().is_nondegenerate(dim, id)) throw std::invalid_argument("NatTransformation::set: degenerate simplex");
  if (m.degree() != dim) throw std::invalid_argument("NatTransformation::set: component must have degree dim");
  if (!same_shape(*m.source(), *source_.source(dim, id)) || !same_shape(*m.target(), *target_.target(dim, id))) {
    throw std::invalid_argument("NatTransformation::set: wrong source or target complex");
  }
  maps_.insert_or_assign({dim, id, i}, std::move(m));
}

const GradedMap* NatTransformation::stored(int dim, std::size_t id, int i) const {
  auto it = maps_.find({dim, id, i});
  return it == maps_.end() ? nullptr : &it->second;
}

bool NatTransformation::has(int dim, std::size_t id, int i) const {
  return stored(dim, id, i) || !base().is_nondegenerate(dim, id) || (dim >= 1 && higher_default_zero_);
}

GradedMap NatTransformation::bar(int dim, std::size_t id, int i) const {
  if (const GradedMap* m = stored(dim, id, i)) return *m;
  if (!has(dim, id, i)) {
    throw std::out_of_range("missing transformation component on " + base().label(dim, id) + " index " +
                            std::to_string(i));
  }
  return GradedMap::zero(source_.source(dim, id), target_.target(dim, id), dim);
}

GradedMap NatTransformation::summed(int dim, std::size_t id) const {
  GradedMap out = GradedMap::zero(source_.source(dim, id), target_.target(dim, id), dim);
  for (int i = 0; i <= dim; ++i) out = out + bar(dim, id, i).scaled(sign_of(i));
  return out;
}

NatTransformation NatTransformation::identity(const KomDiagram& d) {
  NatTransformation t(d, d);
  for (std::size_t v = 0; v < d.base().count(0); ++v) t.set(0, v, 0, GradedMap::identity(d.vertex_complex(v)));
  t.set_higher_default_zero(true);
  return t;
}

SummedNatTransformation::SummedNatTransformation(KomDiagram source, KomDiagram target)
    : source_(std::move(source)), target_(std::move(target)) {
  require_same_base(source_, target_);
}

void SummedNatTransformation::set(int dim, std::size_t id, GradedMap m) {
  if (m.degree() != dim) throw std::invalid_argument("SummedNatTransformation::set: component must have degree dim");
  if (!same_shape(*m.source(), *source_.source(dim, id)) || !same_shape(*m.target(), *target_.target(dim, id))) {
    throw std::invalid_argument("SummedNatTransformation::set: wrong source or target complex");
  }
  maps_.insert_or_assign({dim, id}, std::move(m));
}

bool SummedNatTransformation::has(int dim, std::size_t id) const {
  return maps_.count({dim, id}) || (dim >= 1 && (higher_default_zero_ || !base().is_nondegenerate(dim, id)));
}

GradedMap SummedNatTransformation::map(int dim, std::size_t id) const {
  auto it = maps_.find({dim, id});
  if (it != maps_.end()) return it->second;
  if (!has(dim, id)) throw std::out_of_range("missing summed component on " + base().label(dim, id));
  return GradedMap::zero(source_.source(dim, id), target_.target(dim, id), dim);
}

SummedNatTransformation SummedNatTransformation::identity(const KomDiagram& d) {
  SummedNatTransformation t(d, d);
  for (std::size_t v = 0; v < d.base().count(0); ++v) t.set(0, v, GradedMap::identity(d.vertex_complex(v)));
  t.set_higher_default_zero(true);
  return t;
}

SummedNatTransformation SummedNatTransformation::from(const NatTransformation& t) {
  SummedNatTransformation out(t.source(), t.target());
  for (int n = 0; n <= t.base().truncation(); ++n) {
    for (std::size_t id : t.base().nondegenerate(n)) {
      bool complete = true;
      for (int i = 0; i <= n; ++i) complete = complete && t.has(n, id, i);
      if (complete) out.set(n, id, t.summed(n, id));
    }
  }
  return out;
}

GradedMap nat_residual(const NatTransformation& t, int n, std::size_t id) {
  const SimplicialBase& b = t.base();
  const KomDiagram& f0 = t.source();
  const KomDiagram& f1 = t.target();
  GradedMap lhs = GradedMap::zero(f0.source(n, id), f1.target(n, id), n - 1);
  for (int i = 0; i <= n; ++i) {
    const GradedMap g = t.bar(n, id, i);
    lhs = lhs + (g.post_differential() + g.pre_differential().scaled(sign_of(n + 1))).scaled(sign_of(n - i));
  }
  GradedMap rhs = GradedMap::zero(f0.source(n, id), f1.target(n, id), n - 1);
  for (int l = 1; l <= n - 1; ++l) {
    const std::size_t face = b.face(n, id, l);
    for (int i = 0; i <= n - 1; ++i) rhs = rhs + t.bar(n - 1, face, i).scaled(sign_of(i + l - 1));
  }
  for (int l = 1; l <= n; ++l) {
    const std::size_t back = b.back(n, id, l);
    for (int i = 0; i <= n - l; ++i) {
      if (auto term = before_hat(t.bar(n - l, back, i), f0, l, b.front(n, id, l))) rhs = rhs + term->scaled(sign_of(i + 1));
    }
  }
  for (int l = 0; l <= n - 1; ++l) {
    const std::size_t front = b.front(n, id, l);
    for (int i = 0; i <= l; ++i) {
      if (auto term = after_hat(f1, n - l, b.back(n, id, l), t.bar(l, front, i))) rhs = rhs + term->scaled(sign_of(i + l));
    }
  }
  return lhs - rhs;
}

GradedMap summed_residual(const SummedNatTransformation& t, int n, std::size_t id) {
  const SimplicialBase& b = t.base();
  const KomDiagram& f0 = t.source();
  const KomDiagram& f1 = t.target();
  const GradedMap g = t.map(n, id);
  GradedMap lhs = g.post_differential().scaled(sign_of(n)) - g.pre_differential();
  GradedMap rhs = GradedMap::zero(f0.source(n, id), f1.target(n, id), n - 1);
  for (int l = 1; l <= n - 1; ++l) rhs = rhs + t.map(n - 1, b.face(n, id, l)).scaled(sign_of(l - 1));
  for (int l = 1; l <= n; ++l) {
    if (auto term = before_hat(t.map(n - l, b.back(n, id, l)), f0, l, b.front(n, id, l))) rhs = rhs - *term;
  }
  for (int l = 0; l <= n - 1; ++l) {
    if (auto term = after_hat(f1, n - l, b.back(n, id, l), t.map(l, b.front(n, id, l)))) {
      rhs = rhs + term->scaled(sign_of(l));
    }
  }
  return lhs - rhs;
}

TransformationReport validate_nat_trans(const NatTransformation& t, std::optional<int> max_dim) {
  const int top = max_dim.value_or(t.base().truncation());
  if (top > t.base().truncation()) throw std::invalid_argument("validate_nat_trans: max_dim above truncation");
  TransformationReport report;
  for (int n = 0; n <= top; ++n) {
    for (std::size_t id : t.base().nondegenerate(n)) {
      bool complete = true;
      for (int i = 0; i <= n; ++i) complete = complete && t.has(n, id, i);
      if (!complete) {
        report.missing.push_back({n, id, t.base().label(n, id)});
        continue;
      }
      try {
        if (auto bad = first_nonzero(nat_residual(t, n, id))) {
          report.violations.push_back({n, id, t.base().label(n, id), bad->first, bad->second});
        }
      } catch (const std::out_of_range&) {
        // a face or diagram map is missing; reported at its own simplex
      }
    }
  }
  return report;
}

TransformationReport validate_nat_trans(const SummedNatTransformation& t, std::optional<int> max_dim) {
  const int top = max_dim.value_or(t.base().truncation());
  if (top > t.base().truncation()) throw std::invalid_argument("validate_nat_trans: max_dim above truncation");
  TransformationReport report;
  for (int n = 0; n <= top; ++n) {
    for (std::size_t id = 0; id < t.base().count(n); ++id) {
      if (!t.has(n, id)) {
        report.missing.push_back({n, id, t.base().label(n, id)});
        continue;
      }
      try {
        if (auto bad = first_nonzero(summed_residual(t, n, id))) {
          report.violations.push_back({n, id, t.base().label(n, id), bad->first, bad->second});
        }
      } catch (const std::out_of_range&) {
      }
    }
  }
  return report;
}

namespace {

void check_pair(const SimplicialBase& base, const HocolimComplex& h0, const HocolimComplex& h1, Flavor flavor) {
  if (h0.flavor() != flavor || h1.flavor() != flavor) throw std::invalid_argument("induced map: wrong hocolim flavor");
  if (h0.lo() != h1.lo() || h0.hi() != h1.hi()) throw std::invalid_argument("induced map: window mismatch");
  if (h0.diagram().base_ptr().get() != &base || h1.diagram().base_ptr().get() != &base) {
    throw std::invalid_argument("induced map: hocolims are not built over the transformation's base");
  }
}

// Σ_m sign(m) [σ_{m..n}] ⊗ G_m(x), with G_m looked up by (m, σ_{0..m}).
template <typename ComponentFn>
GradedMap assemble(const HocolimComplex& h0, const HocolimComplex& h1, bool thin, ComponentFn component) {
  const SimplicialBase& b = h0.diagram().base();
  const RingSpec& ring = h0.ring();
  GradedMap f(h0.complex_ptr(), h1.complex_ptr(), 0);
  std::map<std::pair<int, std::size_t>, GradedMap> cache;
  for (int t = h0.lo() - 1; t <= h0.hi() + 1; ++t) {
    const auto& gens = h0.generators(t);
    Matrix m(ring, h1.complex().rank(t), gens.size());
    for (std::size_t col = 0; col < gens.size(); ++col) {
      const HocolimGenerator& g = gens[col];
      SparseColumn out;
      for (int k = 0; k <= g.dim; ++k) {
        const std::size_t back = b.back(g.dim, g.simplex, k);
        if (thin && !b.is_nondegenerate(g.dim - k, back)) continue;
        const std::size_t front = b.front(g.dim, g.simplex, k);
        auto it = cache.find({k, front});
        if (it == cache.end()) it = cache.emplace(std::make_pair(k, front), component(k, front)).first;
        SparseColumn piece;
        for (const auto& e : it->second.component(g.chain_degree).column(g.index)) {
          auto row = h1.position(t, g.dim - k, back, e.row);
          if (!row) throw std::logic_error("induced map: target generator outside the hocolim");
          piece.push_back({*row, e.value});
        }
        std::sort(piece.begin(), piece.end(), [](const auto& x, const auto& y) { return x.row < y.row; });
        axpy(ring, Scalar(1), piece, out);
      }
      m.set_column(col, std::move(out));
    }
    f.set_component(t, std::move(m));
  }
  return f;
}

}  // namespace

GradedMap induced_map(const NatTransformation& t, const HocolimComplex& h0, const HocolimComplex& h1) {
  check_pair(t.base(), h0, h1, Flavor::thin);
  const SimplicialBase& b = t.base();
  return assemble(h0, h1, true, [&](int m, std::size_t front) {
    if (!b.is_nondegenerate(m, front)) return GradedMap::zero(t.source().source(m, front), t.target().target(m, front), m);
    // Σ_{i<=m} (-1)^{m-i} Ḡ(σ_{0..m}; i)
    return t.summed(m, front).scaled(sign_of(m));
  });
}

GradedMap induced_map_summed(const SummedNatTransformation& t, const HocolimComplex& h0, const HocolimComplex& h1) {
  check_pair(t.base(), h0, h1, Flavor::fat);
  return assemble(h0, h1, false, [&](int m, std::size_t front) { return t.map(m, front).scaled(sign_of(m)); });
}

Cochain pullback(const GradedMap& f, const Cochain& alpha) {
  if (f.degree() != 0) throw std::invalid_argument("pullback: map must have degree 0");
  const Matrix& m = f.component(alpha.degree);
  if (m.rows() != alpha.values.size()) throw std::invalid_argument("pullback: cochain length mismatch");
  const RingSpec& ring = f.ring();
  Cochain out{alpha.degree, std::vector<Scalar>(m.cols(), Scalar(0))};
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Scalar s = 0;
    for (const auto& e : m.column(c)) s += e.value * alpha.values[e.row];
    out.values[c] = ring.normalize(s);
  }
  return out;
}

namespace {

bool nonzero_on_homology(const GradedMap& d, int j) {
  const ChainComplex& src = *d.source();
  const ChainComplex& tgt = *d.target();
  if (src.rank(j) == 0 || tgt.rank(j) == 0) return false;
  const Matrix cycles = kernel_basis(src.differential(j));
  const Matrix image = d.component(j) * cycles;
  if (image.is_zero()) return false;
  const Matrix& boundaries = tgt.differential(j + 1);
  if (boundaries.cols() == 0) return true;
  return !solve_linear(boundaries, image).has_value();
}

}  // namespace

HomotopySearch find_chain_homotopy(const GradedMap& f, const GradedMap& g, int lo, int hi) {
  if (f.degree() != 0 || g.degree() != 0) throw std::invalid_argument("find_chain_homotopy: maps must have degree 0");
  if (f.source() != g.source() || f.target() != g.target()) {
    if (!same_shape(*f.source(), *g.source()) || !same_shape(*f.target(), *g.target())) {
      throw std::invalid_argument("find_chain_homotopy: maps have different source or target");
    }
  }
  const GradedMap diff = g - f;
  if (auto h = solve_commutator(f.source(), f.target(), 1, 1, diff, std::make_pair(lo, hi))) {
    return {HomotopySearch::Status::found, std::move(h), std::nullopt};
  }
  for (int j = lo; j <= hi; ++j) {
    if (nonzero_on_homology(diff, j)) return {HomotopySearch::Status::infeasible, std::nullopt, j};
  }
  return {HomotopySearch::Status::inconclusive, std::nullopt, std::nullopt};
}

namespace {

const ProductWithSimplex& as_product(const KomDiagram& h) {
  const auto* p = dynamic_cast<const ProductWithSimplex*>(&h.base());
  if (!p) throw std::invalid_argument("diagram is not over a product with a simplex");
  return *p;
}

std::vector<int> sequence(int a, int count_a, int b, int count_b) {
  std::vector<int> s(count_a, a);
  s.insert(s.end(), count_b, b);
  return s;
}

void fill_transformation(const KomDiagram& h, int a, int b, NatTransformation& out) {
  const ProductWithSimplex& p = as_product(h);
  const SimplicialBase& c = p.factor();
  if (!c.has_degeneracies()) throw std::invalid_argument("extract_transformation: base has no degeneracies");
  for (int n = 0; n + 1 <= p.truncation(); ++n) {
    for (std::size_t sigma : c.nondegenerate(n)) {
      for (int i = 0; i <= n; ++i) {
        const std::size_t pid =
            p.pair(n + 1, p.simplex().id_of(sequence(a, i + 1, b, n + 1 - i)), c.degeneracy(n, sigma, i));
        const auto l = h.lookup(n + 1, pid);
        switch (l.kind) {
          case KomDiagram::Kind::missing:
            break;
          case KomDiagram::Kind::zero:
            out.set(n, sigma, i, GradedMap::zero(h.source(n + 1, pid), h.target(n + 1, pid), n));
            break;
          default:
            out.set(n, sigma, i, *l.map);
        }
      }
    }
  }
}

}  // namespace

KomDiagram restrict_to_vertex(const KomDiagram& h, int a) {
  const ProductWithSimplex& p = as_product(h);
  const SimplicialBase& c = p.factor();
  std::vector<ComplexPtr> verts;
  const std::size_t va = p.simplex().id_of({a});
  for (std::size_t v = 0; v < c.count(0); ++v) verts.push_back(h.vertex_complex(p.pair(0, va, v)));
  KomDiagram out(p.factor_ptr(), verts);
  for (int n = 1; n <= p.truncation(); ++n) {
    const std::size_t seq = p.simplex().id_of(std::vector<int>(n + 1, a));
    for (std::size_t sigma : c.nondegenerate(n)) {
      const std::size_t pid = p.pair(n, seq, sigma);
      const auto l = h.lookup(n, pid);
      if (l.kind == KomDiagram::Kind::stored) {
        out.set_map(n, sigma, *l.map);
      } else if (l.kind == KomDiagram::Kind::zero) {
        out.set_map(n, sigma, GradedMap::zero(h.source(n, pid), h.target(n, pid), n - 1));
      }
    }
  }
  return out;
}

NatTransformation extract_transformation(const KomDiagram& h, int a, int b) {
  if (a >= b) throw std::invalid_argument("extract_transformation: need a < b");
  NatTransformation t(restrict_to_vertex(h, a), restrict_to_vertex(h, b));
  fill_transformation(h, a, b, t);
  return t;
}

KomDiagram product_skeleton(const std::vector<KomDiagram>& layers,
                            const std::map<std::pair<int, int>, std::vector<GradedMap>>& vertex_maps,
                            std::optional<int> truncation) {
  if (layers.size() < 2) throw std::invalid_argument("product_skeleton: need at least two layers");
  const BasePtr& c = layers[0].base_ptr();
  for (const auto& l : layers) {
    if (l.base_ptr() != c) throw std::invalid_argument("product_skeleton: layers live on different bases");
  }
  const int k = static_cast<int>(layers.size()) - 1;
  auto p = std::make_shared<ProductWithSimplex>(k, c, truncation);
  std::vector<ComplexPtr> verts;
  for (std::size_t id = 0; id < p->count(0); ++id) {
    const int a = p->simplex().sequence(0, p->first(0, id))[0];
    verts.push_back(layers[a].vertex_complex(p->second(0, id)));
  }
  KomDiagram out(p, verts);
  for (std::size_t id : p->nondegenerate(1)) {
    const auto& seq = p->simplex().sequence(1, p->first(1, id));
    const std::size_t e = p->second(1, id);
    if (seq[0] == seq[1]) continue;
    auto it = vertex_maps.find({seq[0], seq[1]});
    if (it == vertex_maps.end()) {
      throw std::invalid_argument("product_skeleton: no vertex maps for edge " + std::to_string(seq[0]) +
                                  std::to_string(seq[1]));
    }
    const std::size_t v0 = c->face(1, e, 1);
    if (it->second.size() != c->count(0)) throw std::invalid_argument("product_skeleton: one vertex map per vertex");
    if (c->is_nondegenerate(1, e)) {
      out.set_map(1, id, compose(layers[seq[1]].hat(1, e), it->second.at(v0)));
    } else {
      out.set_map(1, id, it->second.at(v0));
    }
  }
  for (int n = 1; n <= p->truncation(); ++n) {
    for (int a = 0; a <= k; ++a) {
      const std::size_t seq = p->simplex().id_of(std::vector<int>(n + 1, a));
      for (std::size_t sigma : c->nondegenerate(n)) {
        const auto l = layers[a].lookup(n, sigma);
        const std::size_t pid = p->pair(n, seq, sigma);
        if (l.kind == KomDiagram::Kind::stored) {
          out.set_map(n, pid, *l.map);
        } else if (l.kind == KomDiagram::Kind::zero) {
          out.set_map(n, pid, GradedMap::zero(out.source(n, pid), out.target(n, pid), n - 1));
        }
      }
    }
  }
  return out;
}

TransformationCompletion complete_transformation(const KomDiagram& f0, const KomDiagram& f1,
                                                 const std::vector<GradedMap>& vertex_maps,
                                                 std::optional<int> max_dim) {
  std::optional<int> trunc;
  if (max_dim) trunc = *max_dim + 1;
  const KomDiagram skeleton = product_skeleton({f0, f1}, {{{0, 1}, vertex_maps}}, trunc);
  auto done = complete_diagram(skeleton);
  if (!done.diagram) return {std::nullopt, done.certificate};
  NatTransformation t(f0, f1);
  fill_transformation(*done.diagram, 0, 1, t);
  return {std::move(t), std::nullopt};
}

}  // namespace hocolim
