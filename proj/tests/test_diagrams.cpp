#include "doctest.h"

#include <random>

#include "fixtures.hpp"

using namespace hocolim;
using namespace fixtures;

namespace {

const RingSpec F2 = RingSpec::prime_field(2);
const RingSpec Z = RingSpec::integers();

GradedMap map_from(ComplexPtr s, ComplexPtr t, int deg, std::vector<std::pair<int, Matrix>> blocks) {
  GradedMap f(s, t, deg);
  for (auto& [j, m] : blocks) f.set_component(j, m);
  return f;
}

KomDiagram triangle_edges(RingSpec ring, ComplexPtr k, const GradedMap& f01, const GradedMap& f12, const GradedMap& f02) {
  auto base = standard_simplex(2, 2);
  KomDiagram d(base, {k, k, k});
  d.set_map(1, *base->find(1, "01"), f01);
  d.set_map(1, *base->find(1, "12"), f12);
  d.set_map(1, *base->find(1, "02"), f02);
  (void)ring;
  return d;
}

}  // namespace

TEST_CASE("constant diagrams validate") {
  CHECK(validate_diagram(constant_diagram(standard_simplex(0, 2), Z)).ok());
  CHECK(validate_diagram(constant_diagram(standard_simplex(2, 4), Z)).ok());
  CHECK(validate_diagram(constant_diagram(nerve_of_group(cyclic(3), 5), F2)).ok());
  CHECK(validate_diagram(constant_diagram(standard_simplex(3, 3), abc_complex(Z))).ok());
}

TEST_CASE("strict actions") {
  auto g = cyclic(2);
  CHECK(validate_diagram(from_strict_action(trivial_module(g, share(ChainComplex::unit(F2))), 5)).ok());
  CHECK(validate_diagram(from_strict_action(swap_module(), 5)).ok());
  auto torus = trivial_module(g, torus_complex(F2, 1, 1));
  CHECK(torus.complex->differential(1).is_zero());
  CHECK(validate_diagram(from_strict_action(torus, 5)).ok());

  // Z/3 rotating three points is a representation; an order-2 map is not
  auto g3 = cyclic(3);
  auto c3 = share(ChainComplex(F2, 0, {{"p0", "p1", "p2"}}));
  GModuleComplex rot{c3, g3, {GradedMap::identity(c3), GradedMap(c3, c3, 0), GradedMap(c3, c3, 0)}};
  rot.action[1].set_component(0, Matrix::from_rows(F2, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}));
  rot.action[2].set_component(0, Matrix::from_rows(F2, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
  CHECK(validate_diagram(from_strict_action(rot, 4)).ok());
  GModuleComplex bad = rot;
  bad.action[2] = rot.action[1];
  try {
    from_strict_action(bad, 3);
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("pair") != std::string::npos);
  }

  // edge map τ that is not an involution fails the 2-simplex (a/a)
  auto gz = cyclic(2);
  auto c = share(ChainComplex(Z, 0, {{"p"}}));
  auto nerve = nerve_of_group(gz, 3);
  KomDiagram d(nerve, {c});
  d.set_map(1, *nerve->find(1, "a"), map_from(c, c, 0, {{0, Matrix::from_rows(Z, {{2}})}}));
  d.set_higher_default_zero(true);
  auto report = validate_diagram(d);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.front().label == "a/a");
}

TEST_CASE("one-dimensional base reduces to chain maps") {
  auto base = standard_simplex(1, 1);
  auto k = abc_complex(Z);
  KomDiagram d(base, {k, k});
  GradedMap good = GradedMap::identity(k);
  d.set_map(1, *base->find(1, "01"), good);
  CHECK(validate_diagram(d).ok());
  GradedMap bad = map_from(k, k, 0, {{0, Matrix::from_rows(Z, {{1, 0}, {0, 2}})}, {1, Matrix::from_rows(Z, {{1}})}});
  REQUIRE(verify_chain_map(bad));
  d.set_map(1, *base->find(1, "01"), bad);
  auto r = validate_diagram(d);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].degree == 1);
}

TEST_CASE("missing maps are reported") {
  auto base = standard_simplex(2, 2);
  auto k = share(ChainComplex::unit(Z));
  KomDiagram d(base, {k, k, k});
  d.set_map(1, *base->find(1, "01"), GradedMap::identity(k));
  auto r = validate_diagram(d);
  CHECK(r.missing.size() == 3);
  CHECK(r.violations.empty());
}

TEST_CASE("completion of triangles") {
  auto k = abc_complex(F2);
  auto id = GradedMap::identity(k);
  {
    auto r = complete_diagram(triangle_edges(F2, k, id, id, id));
    REQUIRE(r.diagram);
    CHECK(validate_diagram(*r.diagram).ok());
    CHECK(r.diagram->stored(2, *r.diagram->base().find(2, "012"))->is_zero());
  }
  {
    auto f02 = map_from(k, k, 0, {{0, Matrix::from_rows(F2, {{1, 0}, {1, 1}})}, {1, Matrix::identity(F2, 1)}});
    REQUIRE_FALSE(verify_chain_map(f02));
    auto r = complete_diagram(triangle_edges(F2, k, id, id, f02));
    REQUIRE(r.diagram);
    CHECK(validate_diagram(*r.diagram).ok());
    const GradedMap* h = r.diagram->stored(2, *r.diagram->base().find(2, "012"));
    REQUIRE(h);
    CHECK_FALSE(h->is_zero());
    // ∂h + h∂ = f02 - f12 f01
    CHECK(h->post_differential() + h->pre_differential() == f02 - id);
  }
  {
    // zero on the surviving class a: different maps on homology
    auto f02 = map_from(k, k, 0, {{0, Matrix::from_rows(F2, {{0, 0}, {0, 1}})}, {1, Matrix::identity(F2, 1)}});
    REQUIRE_FALSE(verify_chain_map(f02));
    auto r = complete_diagram(triangle_edges(F2, k, id, id, f02));
    CHECK_FALSE(r.diagram);
    REQUIRE(r.certificate);
    CHECK(r.certificate->label == "012");
  }
}

TEST_CASE("completion over a tetrahedron and mutation detection") {
  std::mt19937 rng(23);
  auto k = cone_of_unit(F2);
  int detected = 0, trials = 0;
  for (int round = 0; round < 5; ++round) {
    auto base = standard_simplex(3, 3);
    KomDiagram partial(base, {k, k, k, k});
    // random chain maps on edges: multiplication by 0/1 on both generators
    for (std::size_t e : base->nondegenerate(1)) {
      const long s = static_cast<long>(rng() % 2);
      partial.set_map(1, e, map_from(k, k, 0, {{0, Matrix::from_rows(F2, {{s}})}, {1, Matrix::from_rows(F2, {{s}})}}));
    }
    auto r = complete_diagram(partial);
    REQUIRE(r.diagram);
    REQUIRE(validate_diagram(*r.diagram).ok());
    for (std::size_t t : base->nondegenerate(2)) {
      KomDiagram mutated = *r.diagram;
      GradedMap m = *mutated.stored(2, t);
      Matrix block = m.component(0);
      block.set(0, 0, F2.add(block.at(0, 0), Scalar(1)));
      m.set_component(0, block);
      mutated.set_map(2, t, m);
      auto rep = validate_diagram(mutated);
      ++trials;
      bool named = false;
      for (const auto& v : rep.violations) named = named || (v.dim == 2 && v.id == t);
      if (named) ++detected;
    }
  }
  CHECK(trials == 20);
  CHECK(detected == trials);
}

TEST_CASE("local systems") {
  auto g = cyclic(2);
  LocalSystem sign{g, Z, 1, {Matrix::identity(Z, 1), Matrix::from_rows(Z, {{-1}})}};
  CHECK_FALSE(sign.check());
  CHECK_FALSE(sign.dual().check());
  LocalSystem bad{g, Z, 1, {Matrix::identity(Z, 1), Matrix::from_rows(Z, {{2}})}};
  CHECK(bad.check());
}
