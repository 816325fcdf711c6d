#include "hocolim/hocolim.hpp"

#include <algorithm>
#include <set>

namespace hocolim {

namespace {

Scalar sign_of(long e) { return Scalar(e % 2 == 0 ? 1 : -1); }

void accumulate(std::map<std::size_t, Scalar>& acc, std::size_t pos, const Scalar& v) {
  auto [it, inserted] = acc.emplace(pos, v);
  if (!inserted) it->second += v;
}

SparseColumn to_column(const RingSpec& ring, const std::map<std::size_t, Scalar>& acc) {
  SparseColumn col;
  for (const auto& [row, v] : acc) {
    Scalar x = ring.normalize(v);
    if (x != 0) col.push_back({row, x});
  }
  return col;
}

}  // namespace

int required_truncation(const KomDiagram& d, int hi) { return std::max(0, hi + 1 - d.min_degree()); }

HocolimComplex::HocolimComplex(const KomDiagram& d, int lo, int hi, Flavor flavor)
    : diagram_(d), flavor_(flavor), lo_(lo), hi_(hi) {
  if (hi < lo) throw std::invalid_argument("hocolim window is empty");
  const SimplicialBase& base = diagram_.base();
  const int need = required_truncation(diagram_, hi);
  if (base.truncation() < need) {
    throw PreconditionError("base truncation " + std::to_string(base.truncation()) + " is too small; degrees up to " +
                            std::to_string(hi) + " need truncation N >= " + std::to_string(need));
  }
  const int dmin = diagram_.min_degree();
  for (int n = 0; n <= base.truncation(); ++n) stride_ = std::max(stride_, base.count(n));
  ++stride_;

  std::vector<std::vector<std::string>> names;
  for (int t = lo - 1; t <= hi + 1; ++t) {
    std::vector<HocolimGenerator> gens;
    std::unordered_map<std::size_t, std::size_t> offs;
    std::vector<std::string> tnames;
    for (int n = 0; n <= std::min(t - dmin, base.truncation()); ++n) {
      const int q = t - n;
      std::vector<std::size_t> simplices;
      if (flavor_ == Flavor::thin) {
        simplices = base.nondegenerate(n);
      } else {
        simplices.resize(base.count(n));
        for (std::size_t i = 0; i < simplices.size(); ++i) simplices[i] = i;
      }
      for (std::size_t s : simplices) {
        const ChainComplex& fx = *diagram_.source(n, s);
        const std::size_t r = fx.rank(q);
        if (r == 0) continue;
        offs[static_cast<std::size_t>(n) * stride_ + s] = gens.size();
        const std::string prefix = "[" + base.label(n, s) + "]";
        for (std::size_t k = 0; k < r; ++k) {
          gens.push_back({n, s, q, k});
          tnames.push_back(prefix + fx.generators(q)[k]);
        }
      }
    }
    gens_.push_back(std::move(gens));
    offsets_.push_back(std::move(offs));
    names.push_back(std::move(tnames));
  }
  ChainComplex c(diagram_.ring(), lo - 1, std::move(names));
  for (int t = lo; t <= hi + 1; ++t) {
    const auto& gens = generators(t);
    Matrix m(c.ring(), c.rank(t - 1), c.rank(t));
    for (std::size_t col = 0; col < gens.size(); ++col) m.set_column(col, boundary(gens[col]));
    c.set_differential(t, std::move(m));
  }
  complex_ = std::make_shared<const ChainComplex>(std::move(c));
}

const std::vector<HocolimGenerator>& HocolimComplex::generators(int t) const {
  static const std::vector<HocolimGenerator> none;
  if (t < lo_ - 1 || t > hi_ + 1) return none;
  return gens_[t - (lo_ - 1)];
}

std::optional<std::size_t> HocolimComplex::position(int t, int dim, std::size_t simplex, std::size_t index) const {
  if (t < lo_ - 1 || t > hi_ + 1 || dim < 0) return std::nullopt;
  const auto& offs = offsets_[t - (lo_ - 1)];
  auto it = offs.find(static_cast<std::size_t>(dim) * stride_ + simplex);
  if (it == offs.end()) return std::nullopt;
  return it->second + index;
}

bool HocolimComplex::included(int dim, std::size_t simplex) const {
  return flavor_ == Flavor::fat || diagram_.base().is_nondegenerate(dim, simplex);
}

SparseColumn HocolimComplex::boundary(const HocolimGenerator& g) const {
  const SimplicialBase& base = diagram_.base();
  const RingSpec& ring = diagram_.ring();
  const int n = g.dim;
  const int q = g.chain_degree;
  const int t = n + q;
  std::map<std::size_t, Scalar> acc;
  const ChainComplex& fx = *diagram_.source(n, g.simplex);
  const Scalar sn = sign_of(n);
  for (const auto& e : fx.differential(q).column(g.index)) {
    if (auto p = position(t - 1, n, g.simplex, e.row)) accumulate(acc, *p, sn * e.value);
  }
  for (int i = 1; i <= n; ++i) {
    const Scalar s = sign_of(n - i);
    const std::size_t face = base.face(n, g.simplex, i);
    if (included(n - 1, face)) {
      if (auto p = position(t - 1, n - 1, face, g.index)) accumulate(acc, *p, s);
    }
    const std::size_t back = base.back(n, g.simplex, i);
    if (!included(n - i, back)) continue;
    const std::size_t front = base.front(n, g.simplex, i);
    const auto l = diagram_.lookup(i, front);
    if (l.kind == KomDiagram::Kind::zero) continue;
    if (l.kind == KomDiagram::Kind::missing) {
      throw PreconditionError("no map for simplex " + base.label(i, front));
    }
    for (const auto& e : l.map->component(q).column(g.index)) {
      if (auto p = position(t - 1, n - i, back, e.row)) accumulate(acc, *p, -s * e.value);
    }
  }
  return to_column(ring, acc);
}

namespace {

HocolimComplex build_checked(const KomDiagram& d, int lo, int hi, Flavor flavor) {
  const int need = required_truncation(d, hi);
  if (d.base().truncation() < need) {
    throw PreconditionError("base truncation " + std::to_string(d.base().truncation()) +
                            " is too small; degrees up to " + std::to_string(hi) + " need truncation N >= " +
                            std::to_string(need));
  }
  const auto report = validate_diagram(d, need);
  if (!report.ok()) {
    const std::string where = report.violations.empty() ? "missing map on " + report.missing.front().label
                                                        : "structure equation fails on " + report.violations.front().label;
    throw PreconditionError("invalid diagram: " + where);
  }
  return HocolimComplex(d, lo, hi, flavor);
}

void check_window(const HocolimComplex& h, int lo, int hi) {
  if (lo < h.lo() || hi > h.hi()) {
    throw std::invalid_argument("window " + std::to_string(lo) + ".." + std::to_string(hi) + " exceeds the built range " +
                                std::to_string(h.lo()) + ".." + std::to_string(h.hi()));
  }
}

}  // namespace

HocolimComplex build_hocolim(const KomDiagram& d, int lo, int hi) { return build_checked(d, lo, hi, Flavor::thin); }

HocolimComplex build_fat_hocolim(const KomDiagram& d, int lo, int hi) { return build_checked(d, lo, hi, Flavor::fat); }

HomologySummary hypercohomology(const HocolimComplex& h, int lo, int hi) {
  check_window(h, lo, hi);
  return cohomology(h.complex(), lo, hi);
}

HomologySummary hypercohomology(const HocolimComplex& h) { return hypercohomology(h, h.lo(), h.hi()); }

HomologySummary hocolim_homology(const HocolimComplex& h, int lo, int hi) {
  check_window(h, lo, hi);
  return homology(h.complex(), lo, hi);
}

// ---------------------------------------------------------------------------

Cochain zero_cochain(const HocolimComplex& h, int degree) {
  return Cochain{degree, std::vector<Scalar>(h.complex().rank(degree), Scalar(0))};
}

Cochain coboundary(const HocolimComplex& h, const Cochain& alpha) {
  if (alpha.degree + 1 > h.hi() + 1) throw std::invalid_argument("coboundary: degree above the built range");
  const Matrix& d = h.complex().differential(alpha.degree + 1);
  if (alpha.values.size() != d.rows()) throw std::invalid_argument("coboundary: cochain has the wrong length");
  Cochain out = zero_cochain(h, alpha.degree + 1);
  for (std::size_t c = 0; c < d.cols(); ++c) {
    Scalar v = 0;
    for (const auto& e : d.column(c)) v += e.value * alpha.values[e.row];
    out.values[c] = h.ring().normalize(v);
  }
  return out;
}

bool is_cocycle(const HocolimComplex& h, const Cochain& alpha) {
  const Cochain d = coboundary(h, alpha);
  return std::all_of(d.values.begin(), d.values.end(), [](const Scalar& v) { return v == 0; });
}

namespace {

bool same_base(const SimplicialBase& a, const SimplicialBase& b, int upto) {
  if (&a == &b) return true;
  if (a.truncation() < upto || b.truncation() < upto) return false;
  for (int n = 0; n <= upto; ++n) {
    if (a.count(n) != b.count(n)) return false;
    for (std::size_t id = 0; id < a.count(n); ++id) {
      if (a.label(n, id) != b.label(n, id)) return false;
      for (int i = 0; n > 0 && i <= n; ++i) {
        if (a.face(n, id, i) != b.face(n, id, i)) return false;
      }
    }
  }
  return true;
}

}  // namespace

Cochain cochain_product(const HocolimComplex& unit, const Cochain& beta, const HocolimComplex& h, const Cochain& alpha) {
  if (!same_base(unit.diagram().base(), h.diagram().base(), std::min(unit.diagram().base().truncation(), h.diagram().base().truncation()))) throw std::invalid_argument("cochain_product: mismatched bases");
  if (unit.ring() != h.ring()) throw std::invalid_argument("cochain_product: ring mismatch");
  for (std::size_t v = 0; v < unit.diagram().base().count(0); ++v) {
    const ChainComplex& c = *unit.diagram().vertex_complex(v);
    if (c.total_rank() != 1 || c.rank(0) != 1) throw std::invalid_argument("cochain_product: first factor must live on the unit diagram");
  }
  const int n = beta.degree;
  const int m = alpha.degree;
  if (beta.values.size() != unit.complex().rank(n) || alpha.values.size() != h.complex().rank(m)) {
    throw std::invalid_argument("cochain_product: cochain lengths do not match their degrees");
  }
  if (n + m < h.lo() - 1 || n + m > h.hi() + 1) throw std::invalid_argument("cochain_product: product degree not built");
  const SimplicialBase& base = h.diagram().base();
  const RingSpec& ring = h.ring();
  Cochain out = zero_cochain(h, n + m);
  const auto& gens = h.generators(n + m);
  for (std::size_t pos = 0; pos < gens.size(); ++pos) {
    const auto& g = gens[pos];
    const int k = g.dim;
    if (k < n) continue;
    const std::size_t front = base.front(k, g.simplex, k - n);
    const std::size_t back = base.back(k, g.simplex, k - n);
    auto pa = h.position(m, k - n, front, g.index);
    auto pb = unit.position(n, n, back, 0);
    if (!pa || !pb) continue;
    out.values[pos] = ring.mul(alpha.values[*pa], beta.values[*pb]);
  }
  return out;
}

namespace {

SparseColumn as_column(const RingSpec& ring, const Cochain& c) { return to_sparse(ring, c.values); }

}  // namespace

Cochain cohomology_representative(const HocolimComplex& h, int degree, std::size_t k) {
  check_window(h, degree, degree);
  const Subquotient basis = cohomology_basis(h.complex(), degree);
  Cochain out = zero_cochain(h, degree);
  for (const auto& e : basis.representatives().column(k)) out.values[e.row] = e.value;
  return out;
}

std::vector<Scalar> module_action_on_cohomology(const HocolimComplex& unit, const Cochain& beta, const HocolimComplex& h,
                                                const Cochain& alpha) {
  if (!h.ring().is_field()) throw std::invalid_argument("module_action_on_cohomology needs a field");
  if (!is_cocycle(unit, beta)) throw PreconditionError("module action: the base class is not a cocycle");
  if (!is_cocycle(h, alpha)) throw PreconditionError("module action: the diagram class is not a cocycle");
  const int degree = beta.degree + alpha.degree;
  check_window(h, degree, degree);
  const Cochain prod = cochain_product(unit, beta, h, alpha);
  auto coords = cohomology_basis(h.complex(), degree).coordinates(as_column(h.ring(), prod));
  if (!coords) throw std::logic_error("product of cocycles is not a cocycle");
  return *coords;
}

Matrix action_matrix(const HocolimComplex& unit, const Cochain& beta, const HocolimComplex& h, int m) {
  check_window(h, m, m);
  const Subquotient src = cohomology_basis(h.complex(), m);
  const int target_degree = m + beta.degree;
  check_window(h, target_degree, target_degree);
  const Subquotient tgt = cohomology_basis(h.complex(), target_degree);
  Matrix out(h.ring(), tgt.dimension(), src.dimension());
  for (std::size_t k = 0; k < src.dimension(); ++k) {
    auto coords = module_action_on_cohomology(unit, beta, h, cohomology_representative(h, m, k));
    out.set_column(k, to_sparse(h.ring(), coords));
  }
  return out;
}

// ---------------------------------------------------------------------------

RealizationCheck realization_comparison(const HocolimComplex& h) {
  const KomDiagram& d = h.diagram();
  if (h.flavor() != Flavor::thin || h.lo() != 0) throw std::invalid_argument("realization_comparison: needs a thin hocolim built from degree 0");
  for (std::size_t v = 0; v < d.base().count(0); ++v) {
    const ChainComplex& c = *d.vertex_complex(v);
    if (c.total_rank() != 1 || c.rank(0) != 1) throw std::invalid_argument("realization_comparison: needs the constant unit diagram");
  }
  auto chains = std::make_shared<const ChainComplex>(normalized_chains(d.base(), h.ring(), h.hi() + 1));
  GradedMap f(h.complex_ptr(), chains, 0);
  bool bijective = true;
  for (int t = 0; t <= h.hi() + 1; ++t) {
    const auto nondeg = d.base().nondegenerate(t);
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t i = 0; i < nondeg.size(); ++i) pos[nondeg[i]] = i;
    const auto& gens = h.generators(t);
    Matrix m(h.ring(), chains->rank(t), gens.size());
    std::set<std::size_t> hit;
    for (std::size_t c = 0; c < gens.size(); ++c) {
      const std::size_t row = pos.at(gens[c].simplex);
      const long binom = static_cast<long>(t) * (t + 1) / 2;
      m.set(row, c, sign_of(binom));
      hit.insert(row);
    }
    bijective = bijective && hit.size() == gens.size() && gens.size() == chains->rank(t);
    f.set_component(t, std::move(m));
  }
  RealizationCheck out{f, !verify_chain_map(f), bijective};
  out.isomorphism = out.chain_map && bijective;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::set<unsigned long> prime_factors(const mpz_class& v, std::set<unsigned long> acc) {
  mpz_class x = abs(v);
  for (unsigned long p = 2; x > 1; ++p) {
    if (mpz_class(p) * p > x) {
      acc.insert(x.get_ui());
      break;
    }
    while (mpz_divisible_ui_p(x.get_mpz_t(), p)) {
      acc.insert(p);
      x /= p;
    }
  }
  return acc;
}

std::set<unsigned long> torsion_primes(const ChainComplex& c) {
  std::set<unsigned long> out;
  for (int j = c.lo(); j <= c.hi() + 1; ++j) {
    for (const auto& d : smith_normal_form(c.differential(j)).diagonal) out = prime_factors(d.get_num(), out);
  }
  return out;
}

GradedMap reread(const GradedMap& f, const ComplexPtr& s, const ComplexPtr& t) {
  GradedMap out(s, t, f.degree());
  for (int j = f.source()->lo(); j <= f.source()->hi(); ++j) {
    const Matrix& m = f.component(j);
    Matrix r(s->ring(), m.rows(), m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      for (const auto& e : m.column(c)) r.set(e.row, c, e.value);
    }
    out.set_component(j, std::move(r));
  }
  return out;
}

}  // namespace

bool QuotientReport::all_isomorphisms() const {
  return chain_map && std::all_of(degrees.begin(), degrees.end(), [](const Degree& d) { return d.isomorphism; });
}

QuotientReport quotient_comparison(const HocolimComplex& fat, const HocolimComplex& thin) {
  if (fat.flavor() != Flavor::fat || thin.flavor() != Flavor::thin) throw std::invalid_argument("quotient_comparison: expects (fat, thin)");
  if (fat.diagram().base_ptr() != thin.diagram().base_ptr() || fat.lo() != thin.lo() || fat.hi() != thin.hi() ||
      fat.diagram().vertex_complex(0) != thin.diagram().vertex_complex(0)) {
    throw std::invalid_argument("quotient_comparison: hocolims of different diagrams or windows");
  }
  GradedMap pi(fat.complex_ptr(), thin.complex_ptr(), 0);
  for (int t = fat.lo() - 1; t <= fat.hi() + 1; ++t) {
    const auto& gens = fat.generators(t);
    Matrix m(fat.ring(), thin.complex().rank(t), gens.size());
    for (std::size_t c = 0; c < gens.size(); ++c) {
      if (auto p = thin.position(t, gens[c].dim, gens[c].simplex, gens[c].index)) m.set(*p, c, Scalar(1));
    }
    pi.set_component(t, std::move(m));
  }
  QuotientReport report{pi, !verify_chain_map(pi), {}};
  const HomologySummary hf = homology(fat.complex(), fat.lo(), fat.hi());
  const HomologySummary ht = homology(thin.complex(), thin.lo(), thin.hi());

  // Fields to test: the fraction field (or the field itself) and, over Z,
  // every prime dividing an invariant factor of either side or of the cone.
  std::vector<RingSpec> fields;
  if (fat.ring().is_field()) {
    fields.push_back(fat.ring());
  } else {
    fields.push_back(RingSpec::rationals());
    std::set<unsigned long> primes = torsion_primes(fat.complex());
    for (auto p : torsion_primes(thin.complex())) primes.insert(p);
    if (report.chain_map) {
      for (auto p : torsion_primes(mapping_cone(pi))) primes.insert(p);
    }
    for (auto p : primes) fields.push_back(RingSpec::prime_field(static_cast<std::uint32_t>(p)));
  }
  struct FieldData {
    ComplexPtr s, t;
    GradedMap f;
  };
  std::vector<FieldData> data;
  for (const auto& k : fields) {
    if (k == fat.ring()) {
      data.push_back({fat.complex_ptr(), thin.complex_ptr(), pi});
    } else {
      auto s = std::make_shared<const ChainComplex>(fat.complex().change_ring(k));
      auto t = std::make_shared<const ChainComplex>(thin.complex().change_ring(k));
      data.push_back({s, t, reread(pi, s, t)});
    }
  }
  for (int j = fat.lo(); j <= fat.hi(); ++j) {
    QuotientReport::Degree deg{j, hf.at(j), ht.at(j), 0, report.chain_map && hf.at(j) == ht.at(j)};
    for (std::size_t i = 0; i < data.size(); ++i) {
      const auto rank_f = homology(*data[i].s, j, j).at(j).free_rank;
      const auto rank_t = homology(*data[i].t, j, j).at(j).free_rank;
      const auto induced = report.chain_map ? induced_homology_rank(data[i].f, j) : 0;
      if (i == 0) deg.induced_rank = induced;
      deg.isomorphism = deg.isomorphism && rank_f == rank_t && induced == rank_t;
    }
    report.degrees.push_back(deg);
  }
  return report;
}

// ---------------------------------------------------------------------------

FatE1Report fat_e1_degenerate_check(const KomDiagram& d, int max_p) {
  const RingSpec& ring = d.ring();
  if (!ring.is_field()) throw std::invalid_argument("fat E1 check needs a field");
  const SimplicialBase& base = d.base();
  if (max_p > base.truncation()) throw std::invalid_argument("fat E1 check: max_p above truncation");
  FatE1Report report;
  const std::size_t nv = base.count(0);
  for (int q = d.min_degree(); q <= d.max_degree(); ++q) {
    std::vector<Subquotient> fiber;
    for (std::size_t v = 0; v < nv; ++v) fiber.push_back(homology_basis(*d.vertex_complex(v), q));
    // generators per p: (simplex, basis index)
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> gens(max_p + 1);
    std::vector<std::map<std::pair<std::size_t, std::size_t>, std::size_t>> where(max_p + 1);
    std::vector<std::vector<bool>> degenerate(max_p + 1);
    std::vector<std::vector<std::string>> names(max_p + 1);
    for (int p = 0; p <= max_p; ++p) {
      for (std::size_t s = 0; s < base.count(p); ++s) {
        const std::size_t v = base.vertex(p, s, 0);
        for (std::size_t k = 0; k < fiber[v].dimension(); ++k) {
          where[p][{s, k}] = gens[p].size();
          gens[p].push_back({s, k});
          degenerate[p].push_back(!base.is_nondegenerate(p, s));
          names[p].push_back("[" + base.label(p, s) + "]h" + std::to_string(k));
        }
      }
      report.generators[{p, q}] = gens[p].size();
      report.degenerate_generators[{p, q}] =
          static_cast<std::size_t>(std::count(degenerate[p].begin(), degenerate[p].end(), true));
    }
    ChainComplex e1(ring, 0, names);
    for (int p = 1; p <= max_p; ++p) {
      Matrix m(ring, gens[p - 1].size(), gens[p].size());
      for (std::size_t c = 0; c < gens[p].size(); ++c) {
        const auto [s, k] = gens[p][c];
        const std::size_t v0 = base.vertex(p, s, 0);
        const SparseColumn& rep = fiber[v0].representatives().column(k);
        for (int i = 0; i <= p; ++i) {
          const Scalar sign = sign_of(p + i);
          const std::size_t face = base.face(p, s, i);
          SparseColumn moved = rep;
          if (i == 0) {
            const GradedMap edge = d.hat(1, base.front(p, s, 1));
            moved = (edge.component(q) * Matrix::column_vector(ring, to_dense(rep, d.source(p, s)->rank(q)))).column(0);
          }
          const std::size_t vf = base.vertex(p - 1, face, 0);
          auto coords = fiber[vf].coordinates(moved);
          if (!coords) throw std::logic_error("fat E1: transported class is not a cycle");
          for (std::size_t kk = 0; kk < coords->size(); ++kk) {
            if ((*coords)[kk] != 0) m.add_to(where[p - 1].at({face, kk}), c, ring.mul(sign, (*coords)[kk]));
          }
        }
      }
      e1.set_differential(p, std::move(m));
    }
    if (verify_complex(e1)) throw std::logic_error("fat E1: d1 does not square to zero");
    // degenerate part
    std::vector<std::vector<std::size_t>> deg_index(max_p + 1);
    std::vector<std::vector<std::string>> deg_names(max_p + 1);
    for (int p = 0; p <= max_p; ++p) {
      for (std::size_t i = 0; i < gens[p].size(); ++i) {
        if (degenerate[p][i]) {
          deg_index[p].push_back(i);
          deg_names[p].push_back(names[p][i]);
        }
      }
    }
    ChainComplex sub(ring, 0, deg_names);
    for (int p = 1; p <= max_p; ++p) {
      const Matrix& full = e1.differential(p);
      Matrix m(ring, deg_index[p - 1].size(), deg_index[p].size());
      std::map<std::size_t, std::size_t> row_of;
      for (std::size_t r = 0; r < deg_index[p - 1].size(); ++r) row_of[deg_index[p - 1][r]] = r;
      for (std::size_t c = 0; c < deg_index[p].size(); ++c) {
        for (const auto& e : full.column(deg_index[p][c])) {
          auto it = row_of.find(e.row);
          if (it == row_of.end()) {
            report.subcomplex = false;
          } else {
            m.set(it->second, c, e.value);
          }
        }
      }
      sub.set_differential(p, std::move(m));
    }
    if (!report.subcomplex) return report;
    const HomologySummary hs = homology(sub, 0, max_p);
    for (int p = 0; p < max_p; ++p) {
      report.degenerate_homology[{p, q}] = hs.at(p).free_rank;
      if (hs.at(p).free_rank != 0) report.acyclic = false;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

std::size_t SpectralSequencePage::total(int t) const {
  std::size_t sum = 0;
  for (const auto& [pq, dim] : dims) {
    if (pq.first + pq.second == t) sum += dim;
  }
  return sum;
}

namespace {

// Z^r_p in total degree t: x ∈ F_p C_t with ∂x ∈ F_{p-r} C_{t-1}.
Matrix z_space(const HocolimComplex& h, int t, int p, int r) {
  const ChainComplex& c = h.complex();
  const RingSpec& ring = h.ring();
  const auto& gens = h.generators(t);
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].dim <= p) cols.push_back(i);
  }
  if (cols.empty()) return Matrix(ring, gens.size(), 0);
  const auto& lower = h.generators(t - 1);
  std::vector<long> row_map(lower.size(), -1);
  std::size_t nrows = 0;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (lower[i].dim > p - r) row_map[i] = static_cast<long>(nrows++);
  }
  const Matrix& d = c.differential(t);
  Matrix sub(ring, nrows, cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    SparseColumn col;
    if (d.cols() > 0) {
      for (const auto& e : d.column(cols[k])) {
        if (row_map[e.row] >= 0) col.push_back({static_cast<std::size_t>(row_map[e.row]), e.value});
      }
    }
    sub.set_column(k, std::move(col));
  }
  const Matrix ker = kernel_basis(sub);
  Matrix out(ring, gens.size(), ker.cols());
  for (std::size_t k = 0; k < ker.cols(); ++k) {
    SparseColumn col;
    for (const auto& e : ker.column(k)) col.push_back({cols[e.row], e.value});
    std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
    out.set_column(k, std::move(col));
  }
  return out;
}

int max_filtration(const HocolimComplex& h) { return std::max(0, h.hi() + 1 - h.diagram().min_degree()); }

Subquotient page_term(const HocolimComplex& h, int t, int p, int r) {
  const Matrix num = z_space(h, t, p, r);
  Matrix den = z_space(h, t, p - 1, r - 1);
  if (t + 1 <= h.hi() + 1) {
    den = hstack(den, h.complex().differential(t + 1) * z_space(h, t + 1, p + r - 1, r - 1));
  }
  return Subquotient(num, den);
}

}  // namespace

int infinity_page(const HocolimComplex& h) { return max_filtration(h) + 2; }

std::vector<SpectralSequencePage> spectral_sequence(const HocolimComplex& h, int r_max) {
  if (!h.ring().is_field()) throw std::invalid_argument("spectral_sequence needs field coefficients");
  if (h.lo() > h.diagram().min_degree()) {
    throw std::invalid_argument("spectral_sequence: build the hocolim from the lowest chain degree of the diagram");
  }
  if (r_max < 1) throw std::invalid_argument("spectral_sequence: r_max must be at least 1");
  const int pmax = max_filtration(h);
  std::vector<SpectralSequencePage> pages;
  for (int r = 1; r <= r_max; ++r) {
    SpectralSequencePage page{r, {}, {}};
    std::map<std::pair<int, int>, Subquotient> terms;
    for (int t = h.lo() - 1; t <= h.hi(); ++t) {
      for (int p = 0; p <= pmax; ++p) terms.emplace(std::make_pair(p, t), page_term(h, t, p, r));
    }
    for (int t = h.lo(); t <= h.hi(); ++t) {
      for (int p = 0; p <= pmax; ++p) {
        const Subquotient& src = terms.at({p, t});
        if (t - p >= h.diagram().min_degree() && t - p <= h.diagram().max_degree()) page.dims[{p, t - p}] = src.dimension();
        if (p - r < 0) continue;
        const Subquotient& tgt = terms.at({p - r, t - 1});
        Matrix dr(h.ring(), tgt.dimension(), src.dimension());
        for (std::size_t k = 0; k < src.dimension(); ++k) {
          const Matrix img = h.complex().differential(t) * src.representatives().column_range(k, 1);
          auto coords = tgt.coordinates(img.column(0));
          if (!coords) throw std::logic_error("spectral sequence: boundary left the filtration");
          dr.set_column(k, to_sparse(h.ring(), *coords));
        }
        if (dr.rows() > 0 && dr.cols() > 0) page.differentials.emplace(std::make_pair(p, t - p), std::move(dr));
      }
    }
    pages.push_back(std::move(page));
  }
  return pages;
}

// ---------------------------------------------------------------------------

HomologySummary group_cohomology_local(const LocalSystem& m, int lo, int hi) {
  if (auto err = m.check()) throw PreconditionError("group_cohomology_local: " + *err);
  if (lo < 0 || hi < lo) throw std::invalid_argument("group_cohomology_local: bad window");
  const GroupTable& g = *m.group;
  const RingSpec& ring = m.ring;
  std::vector<std::size_t> others;
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (a != g.identity()) others.push_back(a);
  }
  // tuples (g_1, ..., g_p) of non-identity elements, enumerated in base-|others| order
  auto tuples = [&](int p) {
    std::vector<std::vector<std::size_t>> out;
    if (p > 0 && others.empty()) return out;
    std::vector<std::size_t> digits(p, 0);
    while (true) {
      std::vector<std::size_t> t(p);
      for (int i = 0; i < p; ++i) t[i] = others[digits[i]];
      out.push_back(t);
      int pos = p - 1;
      while (pos >= 0 && ++digits[pos] == others.size()) digits[pos--] = 0;
      if (pos < 0) break;
    }
    return out;
  };
  const int top = hi + 1;
  std::vector<std::vector<std::vector<std::size_t>>> cells(top + 1);
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(top + 1);
  for (int p = 0; p <= top; ++p) {
    cells[p] = tuples(p);
    for (std::size_t i = 0; i < cells[p].size(); ++i) index[p][cells[p][i]] = i;
  }
  std::vector<Matrix> left;
  for (std::size_t a = 0; a < g.order(); ++a) left.push_back(m.action[g.inverse(a)]);
  const std::size_t r = m.rank;
  // chain complex D_{-p} = C^p, ∂ = δ
  std::vector<std::vector<std::string>> names(top + 1);
  for (int p = top; p >= 0; --p) {
    auto& nm = names[top - p];
    for (std::size_t i = 0; i < cells[p].size(); ++i) {
      for (std::size_t k = 0; k < r; ++k) nm.push_back("c" + std::to_string(p) + "_" + std::to_string(i) + "_" + std::to_string(k));
    }
  }
  ChainComplex d(ring, -top, names);
  for (int p = 0; p < top; ++p) {
    Matrix delta(ring, cells[p + 1].size() * r, cells[p].size() * r);
    for (std::size_t row_cell = 0; row_cell < cells[p + 1].size(); ++row_cell) {
      const auto& s = cells[p + 1][row_cell];
      // g_1 · f(g_2, ..., g_{p+1})
      {
        std::vector<std::size_t> tail(s.begin() + 1, s.end());
        const std::size_t col_cell = index[p].at(tail);
        const Matrix& act = left[s[0]];
        for (std::size_t k = 0; k < r; ++k) {
          for (const auto& e : act.column(k)) delta.add_to(row_cell * r + e.row, col_cell * r + k, e.value);
        }
      }
      for (int i = 1; i <= p; ++i) {
        const std::size_t prod = g.mul(s[i - 1], s[i]);
        if (prod == g.identity()) continue;
        std::vector<std::size_t> merged(s.begin(), s.end());
        merged[i - 1] = prod;
        merged.erase(merged.begin() + i);
        const std::size_t col_cell = index[p].at(merged);
        for (std::size_t k = 0; k < r; ++k) delta.add_to(row_cell * r + k, col_cell * r + k, sign_of(i));
      }
      {
        std::vector<std::size_t> head(s.begin(), s.end() - 1);
        const std::size_t col_cell = index[p].at(head);
        for (std::size_t k = 0; k < r; ++k) delta.add_to(row_cell * r + k, col_cell * r + k, sign_of(p + 1));
      }
    }
    d.set_differential(-p, std::move(delta));
  }
  const HomologySummary h = homology(d, -hi, -lo);
  HomologySummary out{ring, lo, {}};
  for (int j = lo; j <= hi; ++j) out.groups.push_back(h.at(-j));
  return out;
}

LocalSystem homology_local_system(const GModuleComplex& m, int q) {
  if (!m.complex->ring().is_field()) throw std::invalid_argument("homology_local_system needs a field");
  const Subquotient basis = homology_basis(*m.complex, q);
  LocalSystem out{m.group, m.complex->ring(), basis.dimension(), {}};
  for (const auto& act : m.action) {
    Matrix mat(out.ring, out.rank, out.rank);
    const Matrix moved = act.component(q) * basis.representatives();
    for (std::size_t k = 0; k < out.rank; ++k) {
      auto coords = basis.coordinates(moved.column(k));
      if (!coords) throw std::logic_error("action does not preserve cycles");
      mat.set_column(k, to_sparse(out.ring, *coords));
    }
    out.action.push_back(std::move(mat));
  }
  return out;
}

}  // namespace hocolim
