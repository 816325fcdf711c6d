#include "doctest.h"

#include "hocolim/simplicial.hpp"

using namespace hocolim;

namespace {

std::vector<std::size_t> nondeg_counts(const SimplicialBase& s, int top) {
  std::vector<std::size_t> out;
  for (int d = 0; d <= top; ++d) out.push_back(s.nondegenerate(d).size());
  return out;
}

GroupPtr cyclic(std::size_t n) { return std::make_shared<const GroupTable>(GroupTable::cyclic(n)); }

}  // namespace

TEST_CASE("standard simplex") {
  StandardSimplex d0(0, 3);
  CHECK(nondeg_counts(d0, 3) == std::vector<std::size_t>{1, 0, 0, 0});
  StandardSimplex d2(2, 4);
  CHECK(nondeg_counts(d2, 4) == std::vector<std::size_t>{3, 3, 1, 0, 0});
  const auto top = *d2.find(2, "012");
  CHECK(d2.label(1, d2.face(2, top, 1)) == "02");
  CHECK(d2.label(3, d2.degeneracy(2, top, 1)) == "0112");
  CHECK(d2.label(1, d2.front(2, top, 1)) == "01");
  CHECK(d2.label(1, d2.back(2, top, 1)) == "12");
  CHECK(d2.label(0, d2.vertex(2, top, 2)) == "2");
  CHECK(d2.label(1, d2.sub_simplex(2, top, {0, 2})) == "02");
  CHECK_FALSE(d2.check_identities());
}

TEST_CASE("normalized chains of standard simplices are acyclic") {
  for (int n = 0; n <= 4; ++n) {
    StandardSimplex d(n, n + 1);
    for (RingSpec ring : {RingSpec::integers(), RingSpec::prime_field(2)}) {
      auto h = homology(normalized_chains(d, ring), 0, n);
      CHECK(h.at(0) == HomologyGroup{1, {}});
      for (int j = 1; j <= n; ++j) CHECK(h.at(j).is_zero());
    }
  }
}

TEST_CASE("group nerve") {
  GroupNerve z2(cyclic(2), 5);
  CHECK(nondeg_counts(z2, 5) == std::vector<std::size_t>{1, 1, 1, 1, 1, 1});
  GroupNerve z3(cyclic(3), 4);
  CHECK(nondeg_counts(z3, 4) == std::vector<std::size_t>{1, 2, 4, 8, 16});
  CHECK_FALSE(z3.check_identities());

  GroupNerve z4(cyclic(4), 3);
  const auto aa = *z4.find(2, "a/a");
  CHECK(z4.label(1, z4.face(2, aa, 1)) == "a2");
  CHECK(z4.label(1, z4.face(2, aa, 0)) == "a");
  CHECK(z4.label(0, z4.face(1, *z4.find(1, "a"), 0)) == "*");

  // d_1 (g2, g1) is the product g1 g2 in a nonabelian group
  std::vector<std::string> names{"e", "r", "r2", "s", "sr", "sr2"};
  // S3 as permutations; build the table from composition of permutations
  std::vector<std::vector<int>> perms{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  auto index_of = [&](const std::vector<int>& p) {
    for (std::size_t i = 0; i < perms.size(); ++i) {
      if (perms[i] == p) return i;
    }
    return perms.size();
  };
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      std::vector<int> p(3);
      for (int x = 0; x < 3; ++x) p[x] = perms[a][perms[b][x]];
      table[a][b] = index_of(p);
    }
  }
  auto s3 = std::make_shared<const GroupTable>(names, table, 0);
  GroupNerve n3(s3, 4);
  CHECK_FALSE(n3.check_identities());
  const auto sigma = *n3.find(2, "r/s");  // g2 = r, g1 = s
  CHECK(n3.face(2, sigma, 1) == n3.encode({s3->mul(3, 1)}));
  CHECK(nondeg_counts(n3, 3) == std::vector<std::size_t>{1, 5, 25, 125});
}

TEST_CASE("group table validation") {
  CHECK_THROWS_AS(GroupTable({"e", "a"}, {{0, 1}, {1, 1}}, 0), std::invalid_argument);
  CHECK_THROWS_AS(GroupTable({"e", "a"}, {{0, 1}, {0, 0}}, 0), std::invalid_argument);
  CHECK(GroupTable::cyclic(3).inverse(1) == 2);
}

TEST_CASE("normalized chains of BZ/2 over F2") {
  GroupNerve z2(cyclic(2), 6);
  auto h = homology(normalized_chains(z2, RingSpec::prime_field(2)), 0, 5);
  for (int p = 0; p <= 5; ++p) CHECK(h.at(p) == HomologyGroup{1, {}});
}

TEST_CASE("circle and boundary of a triangle") {
  auto c = simplicial_circle(3);
  auto hc = homology(normalized_chains(*c, RingSpec::integers()), 0, 2);
  CHECK(hc.at(0) == HomologyGroup{1, {}});
  CHECK(hc.at(1) == HomologyGroup{1, {}});
  CHECK(hc.at(2).is_zero());
  CHECK(c->count(2) == 3);  // v^000, e^001, e^011
  CHECK(c->label(2, c->degeneracy(1, *c->find(1, "e"), 0)) == "e^001");

  auto t = boundary_of_triangle(3);
  auto ht = homology(normalized_chains(*t, RingSpec::integers()), 0, 2);
  CHECK(ht.at(1) == HomologyGroup{1, {}});
  CHECK(ht.at(2).is_zero());
}

TEST_CASE("finite simplicial set rejects bad faces") {
  FiniteSimplicialSet s(2);
  s.add_vertex("a");
  s.add_vertex("b");
  s.add_simplex(1, "x", {"b", "a"});
  s.add_simplex(1, "y", {"b", "a"});
  // d0 d2 = d1 d0 requires d0 of the d2 edge to match
  s.add_simplex(2, "t", {"x", "y", "y"});
  CHECK_THROWS_AS(s.finalize(), std::invalid_argument);
  CHECK_THROWS_AS(s.add_simplex(1, "z", {"q", "a"}), std::invalid_argument);
}

TEST_CASE("products with simplices") {
  auto pt = standard_simplex(0, 3);
  ProductWithSimplex p0(1, pt);
  CHECK(nondeg_counts(p0, 3) == std::vector<std::size_t>{2, 1, 0, 0});

  auto d1 = standard_simplex(1, 4);
  ProductWithSimplex sq(1, d1);
  CHECK(nondeg_counts(sq, 4) == std::vector<std::size_t>{4, 5, 2, 0, 0});
  CHECK_FALSE(sq.check_identities());

  // over a nondegenerate n-simplex σ: n + 1 simplices of dim n + 1 and n of dim n
  for (int n = 1; n <= 3; ++n) {
    auto dn = standard_simplex(n, n + 1);
    ProductWithSimplex p(1, dn);
    const StandardSimplex& base = static_cast<const StandardSimplex&>(*dn);
    std::vector<int> seq(n + 1);
    for (int i = 0; i <= n; ++i) seq[i] = i;
    const std::size_t top = base.id_of(seq);
    REQUIRE(base.is_nondegenerate(n, top));
    std::size_t over_top = 0, over_mid = 0;
    for (int dim : {n, n + 1}) {
      for (std::size_t id : p.nondegenerate(dim)) {
        const std::size_t b = p.second(dim, id);
        // the second factor is an iterated degeneracy of σ
        std::size_t root = b;
        int d = dim;
        while (d > n) {
          bool found = false;
          for (int j = 0; j < d && !found; ++j) {
            if (base.in_image_of_degeneracy(d, root, j)) {
              root = base.face(d, root, j);
              found = true;
            }
          }
          if (!found) break;
          --d;
        }
        if (d != n || root != top) continue;
        const auto& a = p.simplex().sequence(dim, p.first(dim, id));
        if (dim == n + 1) ++over_top;
        else if (a.front() == 0 && a.back() == 1) ++over_mid;
      }
    }
    CHECK(over_top == static_cast<std::size_t>(n + 1));
    CHECK(over_mid == static_cast<std::size_t>(n));
  }

  // the two ends {0}×S and {1}×S are copies of S
  auto nz2 = nerve_of_group(cyclic(2), 4);
  ProductWithSimplex pz(1, nz2);
  for (int d = 0; d <= 4; ++d) {
    for (int end = 0; end <= 1; ++end) {
      const std::size_t a = pz.simplex().id_of(std::vector<int>(d + 1, end));
      for (std::size_t b = 0; b < nz2->count(d); ++b) {
        const std::size_t id = pz.pair(d, a, b);
        CHECK(pz.is_nondegenerate(d, id) == nz2->is_nondegenerate(d, b));
        for (int i = 0; i <= d && d > 0; ++i) CHECK(pz.second(d - 1, pz.face(d, id, i)) == nz2->face(d, b, i));
      }
    }
  }
  CHECK_THROWS_AS(ProductWithSimplex(1, nz2, 6), std::invalid_argument);
}
