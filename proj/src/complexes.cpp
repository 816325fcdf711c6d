#include "hocolim/complexes.hpp"

#include <algorithm>
#include <sstream>

namespace hocolim {

ChainComplex::ChainComplex(RingSpec ring, int lo, std::vector<std::vector<std::string>> generators)
    : ring_(ring), lo_(lo), generators_(std::move(generators)), empty_(ring, 0, 0) {
  for (int j = lo_; j <= hi() + 1; ++j) differentials_.emplace_back(ring_, rank(j - 1), rank(j));
}

ChainComplex ChainComplex::zero(RingSpec ring) { return ChainComplex(ring, 0, {}); }

ChainComplex ChainComplex::unit(RingSpec ring, int degree, const std::string& name) {
  return ChainComplex(ring, degree, {{name}});
}

std::size_t ChainComplex::rank(int j) const {
  if (j < lo_ || j > hi()) return 0;
  return generators_[j - lo_].size();
}

std::size_t ChainComplex::total_rank() const {
  std::size_t n = 0;
  for (const auto& g : generators_) n += g.size();
  return n;
}

const std::vector<std::string>& ChainComplex::generators(int j) const {
  static const std::vector<std::string> none;
  if (j < lo_ || j > hi()) return none;
  return generators_[j - lo_];
}

std::optional<std::size_t> ChainComplex::index_of(int j, const std::string& name) const {
  const auto& g = generators(j);
  auto it = std::find(g.begin(), g.end(), name);
  if (it == g.end()) return std::nullopt;
  return static_cast<std::size_t>(it - g.begin());
}

const Matrix& ChainComplex::differential(int j) const {
  if (j < lo_ || j > hi() + 1) return empty_;
  return differentials_[j - lo_];
}

void ChainComplex::set_differential(int j, Matrix d) {
  if (d.ring() != ring_) throw std::invalid_argument("set_differential: ring mismatch");
  if (d.rows() != rank(j - 1) || d.cols() != rank(j)) {
    throw std::invalid_argument("set_differential: degree " + std::to_string(j) + " expects " +
                                std::to_string(rank(j - 1)) + "x" + std::to_string(rank(j)) + ", got " +
                                std::to_string(d.rows()) + "x" + std::to_string(d.cols()));
  }
  if (j < lo_ || j > hi() + 1) {
    if (d.rows() == 0 && d.cols() == 0) return;
    throw std::invalid_argument("set_differential: degree out of range");
  }
  differentials_[j - lo_] = std::move(d);
}

ChainComplex ChainComplex::shifted(int k) const {
  ChainComplex out(ring_, lo_ + k, generators_);
  const Scalar sign = (k % 2 == 0) ? Scalar(1) : Scalar(-1);
  for (int j = lo_; j <= hi() + 1; ++j) out.set_differential(j + k, differential(j).scaled(sign));
  return out;
}

ChainComplex ChainComplex::dual() const {
  std::vector<std::vector<std::string>> gens(generators_.rbegin(), generators_.rend());
  ChainComplex out(ring_, -hi(), std::move(gens));
  for (int m = out.lo(); m <= out.hi() + 1; ++m) out.set_differential(m, differential(-m + 1).transpose());
  return out;
}

ChainComplex ChainComplex::change_ring(RingSpec ring) const {
  ChainComplex out(ring, lo_, generators_);
  for (int j = lo_; j <= hi() + 1; ++j) {
    const Matrix& d = differential(j);
    Matrix m(ring, d.rows(), d.cols());
    for (std::size_t c = 0; c < d.cols(); ++c) {
      for (const auto& e : d.column(c)) m.set(e.row, c, e.value);
    }
    out.set_differential(j, std::move(m));
  }
  return out;
}

bool operator==(const ChainComplex& a, const ChainComplex& b) {
  if (a.ring_ != b.ring_ || a.lo_ != b.lo_ || a.generators_ != b.generators_) return false;
  for (int j = a.lo_; j <= a.hi() + 1; ++j) {
    if (a.differential(j) != b.differential(j)) return false;
  }
  return true;
}

std::optional<ComplexViolation> verify_complex(const ChainComplex& c) {
  for (int j = c.lo() + 1; j <= c.hi(); ++j) {
    const Matrix comp = c.differential(j - 1) * c.differential(j);
    for (std::size_t col = 0; col < comp.cols(); ++col) {
      if (!comp.column(col).empty()) {
        const Entry& e = comp.column(col).front();
        return ComplexViolation{j, e.row, col, e.value};
      }
    }
  }
  return std::nullopt;
}

bool same_shape(const ChainComplex& a, const ChainComplex& b) {
  if (a.ring() != b.ring()) return false;
  const int lo = std::min(a.lo(), b.lo());
  const int hi = std::max(a.hi(), b.hi());
  for (int j = lo; j <= hi; ++j) {
    if (a.rank(j) != b.rank(j)) return false;
  }
  return true;
}

GradedMap::GradedMap(ComplexPtr source, ComplexPtr target, int degree)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree) {
  if (!source_ || !target_) throw std::invalid_argument("GradedMap: null complex");
  if (source_->ring() != target_->ring()) throw std::invalid_argument("GradedMap: ring mismatch");
  for (int j = source_->lo(); j <= source_->hi(); ++j) {
    components_.emplace_back(ring(), target_->rank(j + degree_), source_->rank(j));
  }
  for (int j = target_->lo() - degree_; j <= target_->hi() - degree_; ++j) {
    outside_.emplace_back(ring(), target_->rank(j + degree_), 0);
  }
  outside_.emplace_back(ring(), 0, 0);
}

GradedMap GradedMap::identity(ComplexPtr c) {
  GradedMap f(c, c, 0);
  for (int j = c->lo(); j <= c->hi(); ++j) f.set_component(j, Matrix::identity(c->ring(), c->rank(j)));
  return f;
}

GradedMap GradedMap::zero(ComplexPtr source, ComplexPtr target, int degree) {
  return GradedMap(std::move(source), std::move(target), degree);
}

const Matrix& GradedMap::component(int j) const {
  if (j >= source_->lo() && j <= source_->hi()) return components_[j - source_->lo()];
  const int t = j - (target_->lo() - degree_);
  if (t >= 0 && t + 1 < static_cast<int>(outside_.size())) return outside_[t];
  return outside_.back();
}

void GradedMap::set_component(int j, Matrix m) {
  const Matrix& slot = component(j);
  if (m.rows() != slot.rows() || m.cols() != slot.cols()) {
    throw std::invalid_argument("GradedMap::set_component: degree " + std::to_string(j) + " expects " +
                                std::to_string(slot.rows()) + "x" + std::to_string(slot.cols()) + ", got " +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (m.ring() != ring()) throw std::invalid_argument("GradedMap::set_component: ring mismatch");
  if (j < source_->lo() || j > source_->hi()) return;
  components_[j - source_->lo()] = std::move(m);
}

bool GradedMap::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const Matrix& m) { return m.is_zero(); });
}

GradedMap GradedMap::negated() const { return scaled(Scalar(-1)); }

GradedMap GradedMap::scaled(const Scalar& s) const {
  GradedMap out = *this;
  for (auto& m : out.components_) m = m.scaled(s);
  return out;
}

namespace {

void check_parallel(const GradedMap& a, const GradedMap& b, const char* what) {
  if (a.degree() != b.degree() || !same_shape(*a.source(), *b.source()) ||
      !same_shape(*a.target(), *b.target())) {
    throw std::invalid_argument(std::string(what) + ": maps are not parallel");
  }
}

}  // namespace

GradedMap operator+(const GradedMap& a, const GradedMap& b) {
  check_parallel(a, b, "GradedMap +");
  GradedMap out = a;
  for (int j = a.source()->lo(); j <= a.source()->hi(); ++j) out.set_component(j, a.component(j) + b.component(j));
  return out;
}

GradedMap operator-(const GradedMap& a, const GradedMap& b) {
  check_parallel(a, b, "GradedMap -");
  GradedMap out = a;
  for (int j = a.source()->lo(); j <= a.source()->hi(); ++j) out.set_component(j, a.component(j) - b.component(j));
  return out;
}

bool operator==(const GradedMap& a, const GradedMap& b) {
  if (a.degree() != b.degree() || !same_shape(*a.source(), *b.source()) ||
      !same_shape(*a.target(), *b.target())) {
    return false;
  }
  for (int j = a.source()->lo(); j <= a.source()->hi(); ++j) {
    if (a.component(j) != b.component(j)) return false;
  }
  return true;
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
  if (!same_shape(*f.target(), *g.source())) throw std::invalid_argument("compose: incompatible complexes");
  GradedMap out(f.source(), g.target(), f.degree() + g.degree());
  for (int j = f.source()->lo(); j <= f.source()->hi(); ++j) {
    out.set_component(j, g.component(j + f.degree()) * f.component(j));
  }
  return out;
}

GradedMap GradedMap::post_differential() const {
  GradedMap out(source_, target_, degree_ - 1);
  for (int j = source_->lo(); j <= source_->hi(); ++j) {
    out.set_component(j, target_->differential(j + degree_) * component(j));
  }
  return out;
}

GradedMap GradedMap::pre_differential() const {
  GradedMap out(source_, target_, degree_ - 1);
  for (int j = source_->lo(); j <= source_->hi(); ++j) {
    out.set_component(j, component(j - 1) * source_->differential(j));
  }
  return out;
}

std::optional<ChainMapViolation> verify_chain_map(const GradedMap& f) {
  if (f.degree() != 0) throw std::invalid_argument("verify_chain_map: map has degree " + std::to_string(f.degree()));
  const ChainComplex& s = *f.source();
  const ChainComplex& t = *f.target();
  const int lo = std::min(s.lo(), t.lo());
  const int hi = std::max(s.hi(), t.hi()) + 1;
  for (int j = lo; j <= hi; ++j) {
    const Matrix lhs = t.differential(j) * f.component(j);
    const Matrix rhs = f.component(j - 1) * s.differential(j);
    if (lhs == rhs) continue;
    for (std::size_t c = 0; c < lhs.cols(); ++c) {
      for (std::size_t r = 0; r < lhs.rows(); ++r) {
        if (lhs.at(r, c) != rhs.at(r, c)) return ChainMapViolation{j, r, c, lhs.at(r, c), rhs.at(r, c)};
      }
    }
  }
  return std::nullopt;
}

ChainComplex mapping_cone(const GradedMap& f) {
  if (f.degree() != 0) throw PreconditionError("mapping_cone: map must have degree 0");
  if (auto v = verify_chain_map(f)) {
    throw PreconditionError("mapping_cone: not a chain map in degree " + std::to_string(v->degree));
  }
  const ChainComplex& c = *f.source();
  const ChainComplex& d = *f.target();
  const RingSpec& ring = f.ring();
  if (c.total_rank() == 0 && d.total_rank() == 0) return ChainComplex::zero(ring);
  int lo = d.total_rank() ? d.lo() : c.lo() + 1;
  int hi = d.total_rank() ? d.hi() : c.hi() + 1;
  if (c.total_rank()) {
    lo = std::min(lo, c.lo() + 1);
    hi = std::max(hi, c.hi() + 1);
  }
  std::vector<std::vector<std::string>> gens;
  for (int n = lo; n <= hi; ++n) {
    std::vector<std::string> g;
    for (const auto& name : d.generators(n)) g.push_back("t:" + name);
    for (const auto& name : c.generators(n - 1)) g.push_back("s:" + name);
    gens.push_back(std::move(g));
  }
  ChainComplex cone(ring, lo, std::move(gens));
  for (int n = lo; n <= hi + 1; ++n) {
    Matrix m(ring, cone.rank(n - 1), cone.rank(n));
    const std::size_t dn = d.rank(n);
    const std::size_t dn1 = d.rank(n - 1);
    const Matrix& dd = d.differential(n);
    for (std::size_t col = 0; col < dd.cols(); ++col) {
      for (const auto& e : dd.column(col)) m.set(e.row, col, e.value);
    }
    const Matrix& fc = f.component(n - 1);
    for (std::size_t col = 0; col < fc.cols(); ++col) {
      for (const auto& e : fc.column(col)) m.set(e.row, dn + col, e.value);
    }
    const Matrix& dc = c.differential(n - 1);
    for (std::size_t col = 0; col < dc.cols(); ++col) {
      for (const auto& e : dc.column(col)) m.set(dn1 + e.row, dn + col, ring.neg(e.value));
    }
    cone.set_differential(n, std::move(m));
  }
  return cone;
}

const HomologyGroup& HomologySummary::at(int j) const {
  if (j < lo || j > hi()) throw std::out_of_range("HomologySummary: degree " + std::to_string(j) + " outside window");
  return groups[j - lo];
}

std::string HomologySummary::describe(int j) const {
  const HomologyGroup& g = at(j);
  if (g.is_zero()) return "0";
  std::vector<std::string> parts;
  if (g.free_rank > 0) {
    std::string base = ring.name();
    parts.push_back(g.free_rank == 1 ? base : base + "^" + std::to_string(g.free_rank));
  }
  for (const auto& t : g.torsion) parts.push_back("Z/" + to_string(t));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

HomologySummary homology(const ChainComplex& c) { return homology(c, c.lo(), c.hi()); }

HomologySummary homology(const ChainComplex& c, int lo, int hi) {
  if (auto v = verify_complex(c)) {
    throw PreconditionError("homology: not a complex, composite nonzero at degree " + std::to_string(v->degree));
  }
  HomologySummary out{c.ring(), lo, {}};
  auto rank_of = [&](int j) -> std::size_t { return rank(c.differential(j)); };
  for (int j = lo; j <= hi; ++j) {
    HomologyGroup g;
    const std::size_t n = c.rank(j);
    if (n > 0) {
      const std::size_t r_out = rank_of(j);
      if (c.ring().is_field()) {
        g.free_rank = n - r_out - rank_of(j + 1);
      } else {
        const SmithDecomposition snf = smith_normal_form(c.differential(j + 1));
        g.free_rank = n - r_out - snf.rank();
        for (const auto& d : snf.diagonal) {
          if (d != 1) g.torsion.push_back(d);
        }
      }
    }
    out.groups.push_back(std::move(g));
  }
  return out;
}

HomologySummary cohomology(const ChainComplex& c) { return cohomology(c, c.lo(), c.hi()); }

HomologySummary cohomology(const ChainComplex& c, int lo, int hi) {
  const HomologySummary h = homology(c.dual(), -hi, -lo);
  HomologySummary out{c.ring(), lo, {}};
  for (int j = lo; j <= hi; ++j) out.groups.push_back(h.at(-j));
  return out;
}

Subquotient homology_basis(const ChainComplex& c, int j) {
  return Subquotient(kernel_basis(c.differential(j)), c.differential(j + 1));
}

Subquotient cohomology_basis(const ChainComplex& c, int j) {
  return Subquotient(kernel_basis(c.differential(j + 1).transpose()), c.differential(j).transpose());
}

std::size_t induced_homology_rank(const GradedMap& f, int j) {
  if (!f.ring().is_field()) throw std::invalid_argument("induced_homology_rank needs a field");
  const Matrix cycles = kernel_basis(f.source()->differential(j));
  const Matrix boundaries = f.target()->differential(j + 1);
  const Matrix image = f.component(j) * cycles;
  return span_dimension(hstack(boundaries, image)) - span_dimension(boundaries);
}

}  // namespace hocolim

namespace hocolim {

std::optional<GradedMap> solve_commutator(const ComplexPtr& source, const ComplexPtr& target, int k, int sign,
                                          const GradedMap& rhs, std::optional<std::pair<int, int>> window) {
  const RingSpec& ring = source->ring();
  if (rhs.degree() != k - 1) throw std::invalid_argument("solve_commutator: rhs has the wrong degree");
  const int lo = source->lo();
  const int hi = source->hi();
  // variables: entries of X_j (column-major), j in [lo, hi]
  std::vector<std::size_t> var_off;
  std::size_t nvars = 0;
  for (int j = lo; j <= hi; ++j) {
    var_off.push_back(nvars);
    nvars += target->rank(j + k) * source->rank(j);
  }
  // equations: entries of (∂X + sign X∂)_j : C_j → D_{j+k-1}
  std::vector<std::size_t> eq_off;
  std::size_t neqs = 0;
  auto imposed = [&](int j) { return !window || (j >= window->first && j <= window->second); };
  for (int j = lo; j <= hi; ++j) {
    eq_off.push_back(neqs);
    if (imposed(j)) neqs += target->rank(j + k - 1) * source->rank(j);
  }
  Matrix a(ring, neqs, nvars);
  Matrix b(ring, neqs, 1);
  const Scalar s(sign);
  for (int j = lo; j <= hi; ++j) {
    if (!imposed(j)) continue;
    const std::size_t rows_out = target->rank(j + k - 1);
    const std::size_t rows_x = target->rank(j + k);
    const Matrix& dt = target->differential(j + k);  // D_{j+k} → D_{j+k-1}
    for (std::size_t c = 0; c < source->rank(j); ++c) {
      // ∂ X_j : entry (r', c) = Σ_r dt[r', r] X_j[r, c]
      for (std::size_t r = 0; r < rows_x; ++r) {
        for (const auto& e : dt.column(r)) {
          a.add_to(eq_off[j - lo] + c * rows_out + e.row, var_off[j - lo] + c * rows_x + r, e.value);
        }
      }
      // X_{j-1} ∂ : entry (r', c) = Σ_{c'} X_{j-1}[r', c'] ds[c', c]
      if (j - 1 >= lo) {
        const Matrix& ds = source->differential(j);
        for (const auto& e : ds.column(c)) {
          for (std::size_t r = 0; r < rows_out; ++r) {
            a.add_to(eq_off[j - lo] + c * rows_out + r, var_off[j - 1 - lo] + e.row * rows_out + r,
                     ring.mul(s, e.value));
          }
        }
      }
      for (const auto& e : rhs.component(j).column(c)) b.set(eq_off[j - lo] + c * rows_out + e.row, 0, e.value);
    }
  }
  auto x = solve_linear(a, b);
  if (!x) return std::nullopt;
  GradedMap out(source, target, k);
  for (int j = lo; j <= hi; ++j) {
    const std::size_t rows_x = target->rank(j + k);
    Matrix m(ring, rows_x, source->rank(j));
    for (const auto& e : x->column(0)) {
      if (e.row < var_off[j - lo] || e.row >= var_off[j - lo] + rows_x * source->rank(j)) continue;
      const std::size_t local = e.row - var_off[j - lo];
      m.set(local % rows_x, local / rows_x, e.value);
    }
    out.set_component(j, std::move(m));
  }
  return out;
}

}  // namespace hocolim
