#include "doctest.h"

#include <random>

#include "hocolim/complexes.hpp"

using namespace hocolim;

namespace {

const RingSpec Z = RingSpec::integers();
const RingSpec F2 = RingSpec::prime_field(2);

ChainComplex rp2(RingSpec ring) {
  ChainComplex c(ring, 0, {{"v"}, {"e"}, {"f"}});
  c.set_differential(2, Matrix::from_rows(ring, {{2}}));
  c.set_differential(1, Matrix::from_rows(ring, {{0}}));
  return c;
}

HomologyGroup free_part(std::size_t r) { return HomologyGroup{r, {}}; }
HomologyGroup tors(std::vector<Scalar> t) { return HomologyGroup{0, std::move(t)}; }

// Random complex built as a direct sum of elementary pieces conjugated by
// invertible changes of basis, so ∂² = 0 holds by construction.
ChainComplex random_complex(RingSpec ring, std::mt19937& rng) {
  const int lo = static_cast<int>(rng() % 3) - 1;
  const int len = 1 + static_cast<int>(rng() % 4);
  std::vector<std::vector<std::string>> gens(len);
  std::vector<std::size_t> ranks(len);
  for (int i = 0; i < len; ++i) {
    ranks[i] = rng() % 4;
    for (std::size_t k = 0; k < ranks[i]; ++k) gens[i].push_back("g" + std::to_string(i) + "_" + std::to_string(k));
  }
  ChainComplex c(ring, lo, gens);
  std::vector<std::size_t> used_as_target(len, 0), used_as_source(len, 0);
  for (int i = len - 1; i >= 1; --i) {
    Matrix d(ring, ranks[i - 1], ranks[i]);
    std::size_t k = 0;
    while (used_as_source[i] + used_as_target[i] < ranks[i] && used_as_target[i - 1] + used_as_source[i - 1] < ranks[i - 1] &&
           rng() % 3 != 0) {
      d.set(used_as_target[i - 1] + used_as_source[i - 1], used_as_target[i] + used_as_source[i], Scalar(1 + static_cast<long>(rng() % 3)));
      ++used_as_source[i];
      ++used_as_target[i - 1];
      ++k;
    }
    c.set_differential(lo + i, d);
  }
  // random unitriangular base changes P_j: ∂_j ↦ P_{j-1} ∂_j P_j^{-1}
  std::vector<Matrix> p, pinv;
  for (int i = 0; i < len; ++i) {
    Matrix u = Matrix::identity(ring, ranks[i]);
    for (std::size_t r = 0; r < ranks[i]; ++r) {
      for (std::size_t s = r + 1; s < ranks[i]; ++s) u.set(r, s, Scalar(static_cast<long>(rng() % 3) - 1));
    }
    p.push_back(u);
    pinv.push_back(*solve_linear(u, Matrix::identity(ring, ranks[i])));
  }
  for (int i = 1; i < len; ++i) c.set_differential(lo + i, p[i - 1] * c.differential(lo + i) * pinv[i]);
  return c;
}

}  // namespace

TEST_CASE("verify_complex") {
  ChainComplex zero_d(Z, 0, {{"a"}, {"b"}, {"c"}});
  CHECK_FALSE(verify_complex(zero_d));
  CHECK_FALSE(verify_complex(rp2(Z)));
  ChainComplex bad(Z, 0, {{"a"}, {"b"}, {"c"}});
  bad.set_differential(2, Matrix::from_rows(Z, {{1}}));
  bad.set_differential(1, Matrix::from_rows(Z, {{1}}));
  auto v = verify_complex(bad);
  REQUIRE(v);
  CHECK(v->degree == 2);
  CHECK(v->value == 1);
  CHECK_THROWS_AS(homology(bad), PreconditionError);
}

TEST_CASE("homology examples") {
  ChainComplex sphere(Z, 0, {{"v"}, {}, {"f"}});
  auto h = homology(sphere);
  CHECK(h.at(0) == free_part(1));
  CHECK(h.at(1) == free_part(0));
  CHECK(h.at(2) == free_part(1));

  ChainComplex circle(Z, 0, {{"v"}, {"e"}});
  auto hc = homology(circle);
  CHECK(hc.at(0) == free_part(1));
  CHECK(hc.at(1) == free_part(1));

  auto hr = homology(rp2(Z));
  CHECK(hr.at(0) == free_part(1));
  CHECK(hr.at(1) == tors({2}));
  CHECK(hr.at(2).is_zero());
  CHECK(hr.describe(1) == "Z/2");
  CHECK(hr.describe(0) == "Z");
}

TEST_CASE("cohomology examples") {
  auto h = cohomology(rp2(Z));
  CHECK(h.at(0) == free_part(1));
  CHECK(h.at(1).is_zero());
  CHECK(h.at(2) == tors({2}));

  auto h2 = cohomology(rp2(F2));
  auto hh2 = homology(rp2(F2));
  for (int j = 0; j <= 2; ++j) CHECK(h2.at(j) == hh2.at(j));
  CHECK(h2.describe(1) == "F2");

  auto z = cohomology(ChainComplex::zero(Z), 0, 3);
  for (int j = 0; j <= 3; ++j) CHECK(z.at(j).is_zero());
}

TEST_CASE("verify_chain_map") {
  auto c = std::make_shared<const ChainComplex>(rp2(Z));
  CHECK_FALSE(verify_chain_map(GradedMap::identity(c)));
  CHECK_FALSE(verify_chain_map(GradedMap::zero(c, c, 0)));

  ChainComplex a(Z, 0, {{"x"}, {"y"}});
  a.set_differential(1, Matrix::from_rows(Z, {{2}}));
  ChainComplex b(Z, 0, {{"x"}, {"y"}});
  b.set_differential(1, Matrix::from_rows(Z, {{3}}));
  GradedMap f(std::make_shared<const ChainComplex>(a), std::make_shared<const ChainComplex>(b), 0);
  f.set_component(0, Matrix::from_rows(Z, {{1}}));
  f.set_component(1, Matrix::from_rows(Z, {{1}}));
  auto v = verify_chain_map(f);
  REQUIRE(v);
  CHECK(v->degree == 1);
  CHECK(v->d_after_f == 3);
  CHECK(v->f_after_d == 2);
}

TEST_CASE("mapping cone examples") {
  auto c = std::make_shared<const ChainComplex>(rp2(Z));
  auto cone = mapping_cone(GradedMap::identity(c));
  CHECK_FALSE(verify_complex(cone));
  auto h = homology(cone);
  for (int j = h.lo; j <= h.hi(); ++j) CHECK(h.at(j).is_zero());

  ChainComplex circle(Z, 0, {{"v"}, {"e"}});
  auto cz = std::make_shared<const ChainComplex>(circle);
  auto zc = mapping_cone(GradedMap::zero(c, cz, 0));
  auto hz = homology(zc, 0, 3);
  CHECK(hz.at(0) == free_part(1));
  CHECK(hz.at(1) == HomologyGroup{2, {}});  // H1(circle) + H0(rp2)
  CHECK(hz.at(2) == tors({2}));
  CHECK(hz.at(3).is_zero());

  auto unit = std::make_shared<const ChainComplex>(ChainComplex::unit(Z));
  GradedMap two(unit, unit, 0);
  two.set_component(0, Matrix::from_rows(Z, {{2}}));
  auto h2 = homology(mapping_cone(two));
  CHECK(h2.at(0) == tors({2}));
  CHECK(h2.at(1).is_zero());
}

TEST_CASE("dual, shift and cone preserve d^2 = 0; Euler characteristic; field duality") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    for (RingSpec ring : {Z, F2, RingSpec::prime_field(3)}) {
      ChainComplex c = random_complex(ring, rng);
      REQUIRE_FALSE(verify_complex(c));
      CHECK_FALSE(verify_complex(c.dual()));
      CHECK_FALSE(verify_complex(c.shifted(3)));
      CHECK(c.dual().dual() == c);
      auto cp = std::make_shared<const ChainComplex>(c);
      auto cone = mapping_cone(GradedMap::identity(cp));
      CHECK_FALSE(verify_complex(cone));
      auto hcone = homology(cone);
      for (int j = hcone.lo; j <= hcone.hi(); ++j) CHECK(hcone.at(j).is_zero());
      if (ring.is_field()) {
        auto h = homology(c);
        auto hc = cohomology(c);
        long euler_c = 0, euler_h = 0;
        for (int j = c.lo(); j <= c.hi(); ++j) {
          const long sign = (j % 2 == 0) ? 1 : -1;
          euler_c += sign * static_cast<long>(c.rank(j));
          euler_h += sign * static_cast<long>(h.at(j).free_rank);
          CHECK(h.at(j) == hc.at(j));
        }
        CHECK(euler_c == euler_h);
      }
    }
  }
}

TEST_CASE("homology bases and induced ranks over a field") {
  auto c = std::make_shared<const ChainComplex>(rp2(F2));
  for (int j = 0; j <= 2; ++j) {
    CHECK(homology_basis(*c, j).dimension() == 1);
    CHECK(cohomology_basis(*c, j).dimension() == 1);
    CHECK(induced_homology_rank(GradedMap::identity(c), j) == 1);
    CHECK(induced_homology_rank(GradedMap::zero(c, c, 0), j) == 0);
  }
}

TEST_CASE("graded map algebra") {
  auto c = std::make_shared<const ChainComplex>(rp2(Z));
  auto id = GradedMap::identity(c);
  CHECK(compose(id, id) == id);
  CHECK((id - id).is_zero());
  CHECK((id + id) == id.scaled(Scalar(2)));
  auto d = GradedMap::identity(c).post_differential();
  CHECK(d.degree() == -1);
  CHECK(d.component(2) == Matrix::from_rows(Z, {{2}}));
  CHECK(d == GradedMap::identity(c).pre_differential());
}
