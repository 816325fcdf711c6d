#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "hocolim/hocolim.hpp"

using namespace hocolim;
using namespace fixtures;

namespace {

const RingSpec F2 = RingSpec::prime_field(2);
const RingSpec Z = RingSpec::integers();

HomologyGroup fr(std::size_t r) { return HomologyGroup{r, {}}; }
HomologyGroup tors(long t) { return HomologyGroup{0, {Scalar(t)}}; }

Cochain random_cochain(const HocolimComplex& h, int degree, std::mt19937& rng) {
  Cochain c = zero_cochain(h, degree);
  for (auto& v : c.values) v = h.ring().normalize(Scalar(static_cast<long>(rng() % 5) - 2));
  return c;
}

bool same(const Cochain& a, const Cochain& b) { return a.degree == b.degree && a.values == b.values; }

Cochain add(const RingSpec& ring, const Cochain& a, const Cochain& b, const Scalar& s = 1) {
  Cochain out = a;
  for (std::size_t i = 0; i < a.values.size(); ++i) out.values[i] = ring.add(a.values[i], ring.mul(s, b.values[i]));
  return out;
}

// Vertex-wise random chain maps on a cone-of-unit complex, completed over Δ^n.
KomDiagram random_completed(int n, RingSpec ring, std::mt19937& rng) {
  auto k = (rng() % 2) ? cone_of_unit(ring) : abc_complex(ring);
  auto base = standard_simplex(n, n + 3);
  std::vector<ComplexPtr> verts(base->count(0), k);
  KomDiagram d(base, verts);
  for (std::size_t e : base->nondegenerate(1)) {
    // identity plus a random null-homotopic term, so every composite agrees up to homotopy
    GradedMap hmt(k, k, 1);
    for (int j = k->lo(); j < k->hi(); ++j) {
      Matrix m(ring, k->rank(j + 1), k->rank(j));
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m.set(r, c, ring.normalize(Scalar(static_cast<long>(rng() % 3) - 1)));
      hmt.set_component(j, m);
    }
    d.set_map(1, e, GradedMap::identity(k) + hmt.post_differential() + hmt.pre_differential());
  }
  auto r = complete_diagram(d);
  REQUIRE(r.diagram);
  return *r.diagram;
}

GModuleComplex permutation_module(GroupPtr g, RingSpec ring, std::size_t points_per_orbit_hint, std::mt19937& rng) {
  // regular representation plus trivial summands, in degrees 0 and 1 with ∂ = sum map
  (void)points_per_orbit_hint;
  const std::size_t n = g->order();
  const std::size_t extra = rng() % 2;
  std::vector<std::string> d0, d1;
  for (std::size_t i = 0; i < n; ++i) d0.push_back("r" + std::to_string(i));
  for (std::size_t i = 0; i < extra; ++i) d0.push_back("t" + std::to_string(i));
  d1.push_back("c");
  ChainComplex c(ring, 0, {d0, d1});
  Matrix dm(ring, d0.size(), 1);
  if (extra) dm.set(n, 0, Scalar(1));
  c.set_differential(1, dm);
  auto cp = share(c);
  GModuleComplex m{cp, g, {}};
  for (std::size_t a = 0; a < n; ++a) {
    GradedMap f(cp, cp, 0);
    Matrix m0(ring, d0.size(), d0.size());
    // right regular action: basis r_x ↦ r_{x a}
    for (std::size_t x = 0; x < n; ++x) m0.set(g->mul(x, a), x, Scalar(1));
    for (std::size_t i = n; i < d0.size(); ++i) m0.set(i, i, Scalar(1));
    f.set_component(0, m0);
    f.set_component(1, Matrix::identity(ring, 1));
    m.action.push_back(f);
  }
  return m;
}

}  // namespace

TEST_CASE("hocolim of constant diagrams") {
  auto h = build_hocolim(constant_diagram(standard_simplex(1, 4), Z), 0, 3);
  auto hh = hocolim_homology(h, 0, 3);
  CHECK(hh.at(0) == fr(1));
  for (int j = 1; j <= 3; ++j) CHECK(hh.at(j).is_zero());

  auto bz2 = build_hocolim(constant_diagram(nerve_of_group(cyclic(2), 7), F2), 0, 6);
  auto hb = hocolim_homology(bz2, 0, 6);
  auto hc = hypercohomology(bz2, 0, 6);
  for (int j = 0; j <= 6; ++j) {
    CHECK(hb.at(j) == fr(1));
    CHECK(hc.at(j) == fr(1));
  }

  auto bz3 = build_hocolim(constant_diagram(nerve_of_group(cyclic(3), 7), Z), 0, 6);
  auto h3 = hypercohomology(bz3, 0, 6);
  CHECK(h3.at(0) == fr(1));
  for (int k = 1; k <= 3; ++k) {
    CHECK(h3.at(2 * k) == tors(3));
    CHECK(h3.at(2 * k - 1).is_zero());
  }

  auto d2 = build_hocolim(constant_diagram(standard_simplex(2, 5), Z), 0, 4);
  auto h2 = hypercohomology(d2);
  CHECK(h2.at(0) == fr(1));
  for (int j = 1; j <= 4; ++j) CHECK(h2.at(j).is_zero());
}

TEST_CASE("hocolim of the swap action") {
  auto h = build_hocolim(from_strict_action(swap_module(), 5), 0, 4);
  auto hh = hocolim_homology(h, 0, 4);
  CHECK(hh.at(0) == fr(1));
  for (int j = 1; j <= 4; ++j) CHECK(hh.at(j).is_zero());
}

TEST_CASE("truncation requirement is enforced") {
  auto d = constant_diagram(nerve_of_group(cyclic(2), 4), F2);
  CHECK(required_truncation(d, 6) == 7);
  try {
    build_hocolim(d, 0, 6);
    FAIL("expected failure");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("N >= 7") != std::string::npos);
  }
  CHECK_THROWS_AS(hypercohomology(build_hocolim(d, 0, 3), 0, 4), std::invalid_argument);
}

TEST_CASE("invalid diagrams are refused") {
  auto base = standard_simplex(1, 2);
  auto k = share(ChainComplex::unit(Z));
  KomDiagram d(base, {k, k});
  CHECK_THROWS_AS(build_hocolim(d, 0, 1), PreconditionError);
}

TEST_CASE("d^2 = 0 on randomized diagrams, thin and fat") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 8; ++trial) {
    for (RingSpec ring : {F2, Z}) {
      auto d = random_completed(1 + static_cast<int>(rng() % 3), ring, rng);
      CHECK(validate_diagram(d).ok());
      CHECK_FALSE(verify_complex(build_hocolim(d, 0, 2).complex()));
      CHECK_FALSE(verify_complex(build_fat_hocolim(d, 0, 2).complex()));
    }
  }
  for (std::size_t order : {2u, 3u}) {
    auto m = permutation_module(cyclic(order), F2, 0, rng);
    auto d = from_strict_action(m, 5);
    CHECK_FALSE(verify_complex(build_hocolim(d, 0, 3).complex()));
    CHECK_FALSE(verify_complex(build_fat_hocolim(d, 0, 3).complex()));
  }
}

TEST_CASE("realization comparison") {
  std::vector<BasePtr> bases{standard_simplex(0, 4), standard_simplex(1, 4), standard_simplex(2, 4),
                             boundary_of_triangle(4), simplicial_circle(4), nerve_of_group(cyclic(3), 4),
                             product_with_delta(1, standard_simplex(1, 4))};
  for (const auto& b : bases) {
    for (RingSpec ring : {Z, F2}) {
      auto h = build_hocolim(constant_diagram(b, ring), 0, 3);
      auto rc = realization_comparison(h);
      CHECK(rc.chain_map);
      CHECK(rc.isomorphism);
      auto chains = normalized_chains(*b, ring, 4);
      CHECK(homology(h.complex(), 0, 3) == homology(chains, 0, 3));
    }
  }
}

TEST_CASE("cochain product: unit, associativity, Leibniz") {
  std::mt19937 rng(41);
  auto base = nerve_of_group(cyclic(3), 6);
  for (RingSpec ring : {Z, RingSpec::prime_field(3)}) {
    auto unit = build_hocolim(constant_diagram(base, ring), 0, 5);
    auto m = permutation_module(cyclic(3), ring, 0, rng);
    auto h = build_hocolim(from_strict_action(m, 6), 0, 5);
    Cochain one = zero_cochain(unit, 0);
    for (auto& v : one.values) v = 1;
    for (int trial = 0; trial < 5; ++trial) {
      const Cochain alpha = random_cochain(h, 2, rng);
      CHECK(same(cochain_product(unit, one, h, alpha), alpha));
      const Cochain beta = random_cochain(unit, 1, rng);
      const Cochain gamma = random_cochain(unit, 1, rng);
      const Cochain lhs = cochain_product(unit, cochain_product(unit, gamma, unit, beta), h, alpha);
      const Cochain rhs = cochain_product(unit, gamma, h, cochain_product(unit, beta, h, alpha));
      CHECK(same(lhs, rhs));
      for (int n = 0; n <= 2; ++n) {
        const Cochain b = random_cochain(unit, n, rng);
        const Cochain a = random_cochain(h, 1, rng);
        const Cochain left = coboundary(h, cochain_product(unit, b, h, a));
        const Cochain right = add(ring, cochain_product(unit, coboundary(unit, b), h, a),
                                  cochain_product(unit, b, h, coboundary(h, a)), Scalar(n % 2 == 0 ? 1 : -1));
        CHECK(same(left, right));
      }
    }
  }
}

TEST_CASE("H*(BZ/2; F2) is polynomial on t") {
  auto base = nerve_of_group(cyclic(2), 7);
  auto unit = build_hocolim(constant_diagram(base, F2), 0, 6);
  REQUIRE(cohomology_basis(unit.complex(), 1).dimension() == 1);
  const Cochain t = cohomology_representative(unit, 1, 0);
  for (int n = 0; n <= 5; ++n) {
    const Matrix a = action_matrix(unit, t, unit, n);
    CHECK(a.rows() == 1);
    CHECK(a.cols() == 1);
    CHECK(rank(a) == 1);
  }
  // unit class acts as the identity
  const Cochain one = cohomology_representative(unit, 0, 0);
  CHECK(rank(action_matrix(unit, one, unit, 3)) == 1);
  // changing a representative by a coboundary leaves the class alone
  std::mt19937 rng(5);
  const Cochain alpha = cohomology_representative(unit, 2, 0);
  const Cochain shifted = add(F2, alpha, coboundary(unit, random_cochain(unit, 1, rng)));
  CHECK(module_action_on_cohomology(unit, t, unit, alpha) == module_action_on_cohomology(unit, t, unit, shifted));
  auto seg = build_hocolim(constant_diagram(standard_simplex(1, 3), F2), 0, 2);
  Cochain v0 = zero_cochain(seg, 0);
  v0.values[0] = 1;
  CHECK_FALSE(is_cocycle(seg, v0));
  CHECK_THROWS_AS(module_action_on_cohomology(seg, v0, seg, cohomology_representative(seg, 0, 0)), PreconditionError);
}

TEST_CASE("fat hocolim and the quotient map") {
  auto pt = build_fat_hocolim(constant_diagram(standard_simplex(0, 4), F2), 0, 3);
  auto hp = hocolim_homology(pt, 0, 3);
  CHECK(hp.at(0) == fr(1));
  for (int j = 1; j <= 3; ++j) CHECK(hp.at(j).is_zero());
  CHECK(pt.complex().rank(3) == 1);

  std::vector<KomDiagram> ds{constant_diagram(standard_simplex(2, 5), Z),
                             constant_diagram(nerve_of_group(cyclic(2), 5), F2),
                             constant_diagram(nerve_of_group(cyclic(3), 5), Z),
                             from_strict_action(swap_module(), 5)};
  for (const auto& d : ds) {
    auto rep = quotient_comparison(build_fat_hocolim(d, 0, 4), build_hocolim(d, 0, 4));
    CHECK(rep.chain_map);
    CHECK(rep.all_isomorphisms());
  }
}

TEST_CASE("degenerate part of the fat E1 is an acyclic subcomplex") {
  std::vector<KomDiagram> ds{constant_diagram(nerve_of_group(cyclic(2), 5), F2),
                             constant_diagram(standard_simplex(2, 5), F2), from_strict_action(swap_module(), 5),
                             from_strict_action(trivial_module(cyclic(3), torus_complex(F2, 1, 1)), 4)};
  for (const auto& d : ds) {
    auto rep = fat_e1_degenerate_check(d, d.base().truncation());
    CHECK(rep.subcomplex);
    CHECK(rep.acyclic);
  }
}

TEST_CASE("group cohomology with local coefficients") {
  auto g2 = cyclic(2);
  LocalSystem triv{g2, F2, 1, {Matrix::identity(F2, 1), Matrix::identity(F2, 1)}};
  auto h = group_cohomology_local(triv, 0, 6);
  for (int j = 0; j <= 6; ++j) CHECK(h.at(j) == fr(1));

  LocalSystem sign{g2, Z, 1, {Matrix::identity(Z, 1), Matrix::from_rows(Z, {{-1}})}};
  auto hs = group_cohomology_local(sign, 0, 6);
  CHECK(hs.at(0).is_zero());
  for (int j = 1; j <= 6; ++j) CHECK(hs.at(j) == (j % 2 ? tors(2) : HomologyGroup{}));

  LocalSystem reg{g2, F2, 2, {Matrix::identity(F2, 2), Matrix::from_rows(F2, {{0, 1}, {1, 0}})}};
  auto hr = group_cohomology_local(reg, 0, 5);
  CHECK(hr.at(0) == fr(1));
  for (int j = 1; j <= 5; ++j) CHECK(hr.at(j).is_zero());

  LocalSystem triv3{cyclic(3), Z, 1, {Matrix::identity(Z, 1), Matrix::identity(Z, 1), Matrix::identity(Z, 1)}};
  auto h3 = group_cohomology_local(triv3, 0, 6);
  CHECK(h3.at(0) == fr(1));
  for (int k = 1; k <= 3; ++k) {
    CHECK(h3.at(2 * k) == tors(3));
    CHECK(h3.at(2 * k - 1).is_zero());
  }
}

TEST_CASE("spectral sequence") {
  auto check_pages = [](const HocolimComplex& h, int rmax) {
    auto pages = spectral_sequence(h, rmax);
    for (std::size_t i = 0; i < pages.size(); ++i) {
      const auto& pg = pages[i];
      for (const auto& [pq, d] : pg.differentials) {
        auto next = pg.differentials.find({pq.first - pg.r, pq.second + pg.r - 1});
        if (next != pg.differentials.end()) CHECK((next->second * d).is_zero());
      }
      if (i + 1 < pages.size()) {
        for (const auto& [pq, dim] : pages[i + 1].dims) {
          const int t = pq.first + pq.second;
          if (t <= h.lo() || t >= h.hi()) continue;
          std::size_t out_rank = 0, in_rank = 0;
          auto o = pg.differentials.find(pq);
          if (o != pg.differentials.end()) out_rank = rank(o->second);
          auto in = pg.differentials.find({pq.first + pg.r, pq.second - pg.r + 1});
          if (in != pg.differentials.end()) in_rank = rank(in->second);
          CHECK(dim == pg.dims.at(pq) - out_rank - in_rank);
        }
      }
    }
    return pages;
  };

  auto bz2 = build_hocolim(constant_diagram(nerve_of_group(cyclic(2), 5), F2), 0, 4);
  auto pages = check_pages(bz2, 3);
  for (int p = 0; p <= 4; ++p) CHECK(pages[1].dims.at({p, 0}) == 1);
  auto inf = spectral_sequence(bz2, infinity_page(bz2)).back();
  auto hc = hypercohomology(bz2, 0, 4);
  for (int t = 0; t <= 4; ++t) {
    CHECK(pages[1].total(t) == inf.total(t));
    CHECK(inf.total(t) == hc.at(t).free_rank);
  }

  // E1 dimensions: Σ over nondegenerate p-simplices of dim H_q(F(σ_0))
  auto torus = from_strict_action(trivial_module(cyclic(3), torus_complex(F2, 1, 0)), 5);
  auto ht = build_hocolim(torus, 0, 3);
  auto tp = check_pages(ht, 2);
  for (int p = 0; p <= 3; ++p) {
    for (int q = 0; q <= 1; ++q) {
      if (p + q <= 3) CHECK(tp[0].dims.at({p, q}) == 0);
    }
  }
  auto torus2 = from_strict_action(trivial_module(cyclic(3), torus_complex(F2, 1, 1)), 5);
  auto tp2 = check_pages(build_hocolim(torus2, 0, 3), 1);
  for (int p = 0; p <= 3; ++p) {
    const std::size_t nd = torus2.base().nondegenerate(p).size();
    for (int q = 0; q <= 1; ++q) {
      if (p + q <= 3) CHECK(tp2[0].dims.at({p, q}) == nd);
    }
  }
}
