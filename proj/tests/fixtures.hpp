#pragma once

#include <memory>

#include "hocolim/diagram.hpp"

namespace fixtures {

using namespace hocolim;

inline GroupPtr cyclic(std::size_t n) { return std::make_shared<const GroupTable>(GroupTable::cyclic(n)); }

inline ComplexPtr share(ChainComplex c) { return std::make_shared<const ChainComplex>(std::move(c)); }

/// a (deg 0), b (deg 1), ∂b = a: every nonzero degree-1 self-map E has ∂E + E∂ ≠ 0.
inline ComplexPtr cone_of_unit(RingSpec ring) {
  ChainComplex k(ring, 0, {{"a"}, {"b"}});
  k.set_differential(1, Matrix::from_rows(ring, {{1}}));
  return share(k);
}

/// a, b (deg 0), c (deg 1), ∂c = b.
inline ComplexPtr abc_complex(RingSpec ring) {
  ChainComplex k(ring, 0, {{"a", "b"}, {"c"}});
  k.set_differential(1, Matrix::from_rows(ring, {{0}, {1}}));
  return share(k);
}

inline GModuleComplex trivial_module(GroupPtr g, ComplexPtr c) {
  GModuleComplex m{c, g, {}};
  for (std::size_t i = 0; i < g->order(); ++i) m.action.push_back(GradedMap::identity(c));
  return m;
}

/// Regular representation of Z/2 over F2 in degree 0: the generator swaps.
inline GModuleComplex swap_module() {
  const RingSpec f2 = RingSpec::prime_field(2);
  auto c = share(ChainComplex(f2, 0, {{"u", "v"}}));
  auto g = cyclic(2);
  GModuleComplex m{c, g, {GradedMap::identity(c), GradedMap(c, c, 0)}};
  m.action[1].set_component(0, Matrix::from_rows(f2, {{0, 1}, {1, 0}}));
  return m;
}

/// Punctured-torus Floer complex: x (deg 1), y (deg 0), ∂x = (F + B) y.
inline ComplexPtr torus_complex(RingSpec ring, long bigon_f, long bigon_b) {
  ChainComplex c(ring, 0, {{"y"}, {"x"}});
  c.set_differential(1, Matrix::from_rows(ring, {{bigon_f + bigon_b}}));
  return share(c);
}

/// Cellular 2-sphere: one 0-cell, one 2-cell.
inline ComplexPtr sphere_complex(RingSpec ring) { return share(ChainComplex(ring, 0, {{"p"}, {}, {"s"}})); }

}  // namespace fixtures

#include "hocolim/oracles.hpp"

namespace fixtures {

/// Circle as two vertices and two edges, Z/2 swapping both pairs.
inline GSemiSimplicialSet free_circle() {
  GSemiSimplicialSet x;
  x.group = cyclic(2);
  x.cells = {{"v0", "v1"}, {"e0", "e1"}};
  x.faces = {{}, {{1, 0}, {0, 1}}};
  x.action = {{{0, 1}, {0, 1}}, {{1, 0}, {1, 0}}};
  return x;
}

}  // namespace fixtures
