#include "hocolim/oracles.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace hocolim {

namespace {

// Tuples (g_1, ..., g_p) in lexicographic order, optionally skipping identities.
std::vector<std::vector<std::size_t>> tuples(const GroupTable& g, int p, bool normalized) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> allowed;
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (!normalized || a != g.identity()) allowed.push_back(a);
  }
  if (allowed.empty() && p > 0) return out;
  std::vector<std::size_t> digits(p, 0);
  while (true) {
    std::vector<std::size_t> t(p);
    for (int i = 0; i < p; ++i) t[i] = allowed[digits[i]];
    out.push_back(std::move(t));
    int pos = p - 1;
    while (pos >= 0 && ++digits[pos] == allowed.size()) digits[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

// Total complex of bar_p ⊗_G C_q in total degrees [lo - 1, hi + 1].
ChainComplex bar_total(const GModuleComplex& m, int lo, int hi, bool normalized) {
  if (auto err = m.check()) throw PreconditionError("invalid action: " + *err);
  const ChainComplex& c = *m.complex;
  const GroupTable& g = *m.group;
  const RingSpec& ring = c.ring();

  using Key = std::tuple<int, std::vector<std::size_t>, int>;  // (p, tuple, q)
  std::vector<std::map<Key, std::size_t>> offsets;
  std::vector<std::vector<std::string>> names;
  std::map<int, std::vector<std::vector<std::size_t>>> tuple_cache;
  auto tuples_of = [&](int p) -> const std::vector<std::vector<std::size_t>>& {
    auto it = tuple_cache.find(p);
    if (it == tuple_cache.end()) it = tuple_cache.emplace(p, tuples(g, p, normalized)).first;
    return it->second;
  };

  for (int t = lo - 1; t <= hi + 1; ++t) {
    std::map<Key, std::size_t> offs;
    std::vector<std::string> tn;
    for (int q = c.lo(); q <= c.hi(); ++q) {
      const int p = t - q;
      if (p < 0 || c.rank(q) == 0) continue;
      for (const auto& tup : tuples_of(p)) {
        offs[{p, tup, q}] = tn.size();
        std::string label = "[";
        for (std::size_t i = 0; i < tup.size(); ++i) label += (i ? "|" : "") + g.name(tup[i]);
        label += "]";
        for (const auto& x : c.generators(q)) tn.push_back(label + x);
      }
    }
    offsets.push_back(std::move(offs));
    names.push_back(std::move(tn));
  }

  ChainComplex total(ring, lo - 1, names);
  for (int t = lo; t <= hi + 1; ++t) {
    const auto& src = offsets[t - (lo - 1)];
    const auto& dst = offsets[t - 1 - (lo - 1)];
    Matrix d(ring, total.rank(t - 1), total.rank(t));
    auto emit = [&](const Key& key, const SparseColumn& vec, const Scalar& sign, std::size_t col) {
      auto it = dst.find(key);
      if (it == dst.end()) return;  // outside the materialized range
      for (const auto& e : vec) d.add_to(it->second + e.row, col, ring.mul(sign, e.value));
    };
    for (const auto& [key, off] : src) {
      const auto& [p, tup, q] = key;
      for (std::size_t k = 0; k < c.rank(q); ++k) {
        const std::size_t col = off + k;
        const SparseColumn unit{{k, Scalar(1)}};
        if (p > 0) {
          // d_0: act by g_1
          std::vector<std::size_t> rest(tup.begin() + 1, tup.end());
          emit({p - 1, rest, q}, m.action[tup[0]].component(q).column(k), Scalar(1), col);
          for (int i = 1; i < p; ++i) {
            std::vector<std::size_t> merged = tup;
            merged[i - 1] = g.mul(tup[i - 1], tup[i]);
            merged.erase(merged.begin() + i);
            if (normalized && merged[i - 1] == g.identity()) continue;
            emit({p - 1, merged, q}, unit, Scalar(i % 2 == 0 ? 1 : -1), col);
          }
          std::vector<std::size_t> front(tup.begin(), tup.end() - 1);
          emit({p - 1, front, q}, unit, Scalar(p % 2 == 0 ? 1 : -1), col);
        }
        if (q - 1 >= c.lo()) emit({p, tup, q - 1}, c.differential(q).column(k), Scalar(p % 2 == 0 ? 1 : -1), col);
      }
    }
    total.set_differential(t, std::move(d));
  }
  return total;
}

}  // namespace

HomologySummary ext_over_group_ring(const GModuleComplex& m, int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("ext_over_group_ring: empty window");
  return cohomology(bar_total(m, lo, hi, true), lo, hi);
}

HomologySummary borel_cohomology(const GModuleComplex& m, int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("borel_cohomology: empty window");
  return cohomology(bar_total(m, lo, hi, false), lo, hi);
}

std::optional<std::string> GSemiSimplicialSet::check() const {
  if (!group) return "no group";
  const int top = static_cast<int>(cells.size()) - 1;
  if (faces.size() != cells.size()) return "faces must be given for every dimension";
  for (int n = 1; n <= top; ++n) {
    if (faces[n].size() != cells[n].size()) return "face list size mismatch in dimension " + std::to_string(n);
    for (std::size_t s = 0; s < cells[n].size(); ++s) {
      if (faces[n][s].size() != static_cast<std::size_t>(n + 1)) return "cell " + cells[n][s] + " has the wrong number of faces";
      for (std::size_t f : faces[n][s]) {
        if (f >= cells[n - 1].size()) return "cell " + cells[n][s] + " has a face out of range";
      }
      // d_i d_j = d_{j-1} d_i for i < j
      for (int j = 1; n >= 2 && j <= n; ++j) {
        for (int i = 0; i < j; ++i) {
          if (faces[n - 1][faces[n][s][j]][i] != faces[n - 1][faces[n][s][i]][j - 1]) {
            return "cell " + cells[n][s] + " breaks a face identity";
          }
        }
      }
    }
  }
  if (action.size() != group->order()) return "one action entry per group element is required";
  for (std::size_t g = 0; g < group->order(); ++g) {
    if (action[g].size() != cells.size()) return "action of " + group->name(g) + " has the wrong number of dimensions";
    for (int n = 0; n <= top; ++n) {
      if (action[g][n].size() != cells[n].size()) return "action of " + group->name(g) + " has the wrong size";
      std::vector<bool> hit(cells[n].size(), false);
      for (std::size_t s = 0; s < cells[n].size(); ++s) {
        const std::size_t img = action[g][n][s];
        if (img >= cells[n].size() || hit[img]) return "action of " + group->name(g) + " is not a permutation";
        hit[img] = true;
        if (g == group->identity() && img != s) return "identity acts nontrivially";
        for (int i = 0; n >= 1 && i <= n; ++i) {
          if (faces[n][img][i] != action[g][n - 1][faces[n][s][i]]) {
            return "action of " + group->name(g) + " does not commute with d_" + std::to_string(i) + " on " + cells[n][s];
          }
        }
        for (std::size_t h = 0; h < group->order(); ++h) {
          if (action[h][n][action[g][n][s]] != action[group->mul(g, h)][n][s]) {
            return "action is not a right action at (" + group->name(g) + ", " + group->name(h) + ")";
          }
        }
      }
    }
  }
  return std::nullopt;
}

GModuleComplex GSemiSimplicialSet::chains(RingSpec ring) const {
  if (auto err = check()) throw PreconditionError("G-semi-simplicial set: " + *err);
  ChainComplex c(ring, 0, cells);
  const int top = static_cast<int>(cells.size()) - 1;
  for (int n = 1; n <= top; ++n) {
    Matrix d(ring, cells[n - 1].size(), cells[n].size());
    for (std::size_t s = 0; s < cells[n].size(); ++s) {
      for (int i = 0; i <= n; ++i) d.add_to(faces[n][s][i], s, Scalar(i % 2 == 0 ? 1 : -1));
    }
    c.set_differential(n, std::move(d));
  }
  auto cp = std::make_shared<const ChainComplex>(std::move(c));
  GModuleComplex m{cp, group, {}};
  for (std::size_t g = 0; g < group->order(); ++g) {
    GradedMap f(cp, cp, 0);
    for (int n = 0; n <= top; ++n) {
      Matrix p(ring, cells[n].size(), cells[n].size());
      for (std::size_t s = 0; s < cells[n].size(); ++s) p.set(action[g][n][s], s, Scalar(1));
      f.set_component(n, std::move(p));
    }
    m.action.push_back(std::move(f));
  }
  return m;
}

HomologySummary borel_cohomology(const GSemiSimplicialSet& x, RingSpec ring, int lo, int hi) {
  return borel_cohomology(x.chains(ring), lo, hi);
}

}  // namespace hocolim
