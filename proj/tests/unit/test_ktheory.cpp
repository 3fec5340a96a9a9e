#include <doctest.h>

#include "segre/ktheory/collections.hpp"
#include "../support/rng.hpp"

using namespace segre;
using namespace segre::ktheory;

namespace {

SurfaceKClass O(const PicClass& d = {}) { return SurfaceKClass::line_bundle(d); }

long det(std::vector<std::vector<long>> m) {
  // Fraction-free Bareiss elimination.
  const std::size_t n = m.size();
  long sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

TEST_CASE("surface Euler pairings") {
  const auto h = PicClass::h();
  const auto e = PicClass::e_sum();
  CHECK(chi_surface(O(), O()) == 1);
  CHECK(dot(PicClass::canonical(), PicClass::canonical()) == 5);
  for (int i = 1; i <= 4; ++i) {
    CHECK(chi_surface(O(h - PicClass::e(i)), SurfaceKClass::u2_dual()) == 1);
    CHECK(chi_surface(O(h - PicClass::e(i))) == 2);
    CHECK(chi_surface(O(PicClass::e(i) - h), O()) == 2);
    CHECK(chi_surface(O(PicClass::e(i))) == 1);
  }
  CHECK(chi_surface(O(h * 2 - e), SurfaceKClass::u2_dual()) == 1);
  CHECK(chi_surface(O(h * 2 - e)) == 2);
  CHECK(chi_surface(O(-PicClass::canonical())) == 6);
  CHECK(chi_surface(SurfaceKClass::u2_dual(), SurfaceKClass::u2_dual()) == 1);
  CHECK(chi_surface(SurfaceKClass::u2_dual()) == 5);
  // Riemann-Roch for line bundles: 1 + D(D-K)/2.
  test::Rng rng(4);
  for (int t = 0; t < 30; ++t) {
    PicClass d{rng.uniform(-5, 5), {rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)}};
    CHECK(chi_surface(O(d)) == 1 + dot(d, d - PicClass::canonical()) / 2);
  }
}

TEST_CASE("Serre duality on the surface for random pairs") {
  test::Rng rng(9);
  auto random_class = [&] {
    SurfaceKClass c;
    for (int k = 0; k < 3; ++k) {
      PicClass d{rng.uniform(-3, 3), {rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)}};
      c = c + O(d) * rng.uniform(-2, 2);
    }
    return c + SurfaceKClass::u2_dual() * rng.uniform(-1, 1);
  };
  const auto omega = O(PicClass::canonical());
  for (int t = 0; t < 50; ++t) {
    const auto a = random_class(), b = random_class();
    CHECK(chi_surface(a, b) == chi_surface(b, a * omega));
  }
}

TEST_CASE("threefold pairings") {
  CHECK(chi_bundle(BundleXClass::xi_power(0), BundleXClass::xi_power(0)) == 1);
  const auto xi = BundleXClass::xi_power(1);
  CHECK((xi * BundleXClass::xi_power(-1)) == BundleXClass::xi_power(0));
  CHECK(xi.pushforward() == SurfaceKClass::u2_dual());
  CHECK(BundleXClass::xi_power(-1).pushforward().is_zero());
  // p_* O(-2s) = det U2 in degree 1.
  CHECK(BundleXClass::xi_power(-2).pushforward() == -O(PicClass::canonical()));
  CHECK(chi_bundle(BundleXClass::line_bundle(PicClass::h() - PicClass::e(1), 0),
                   BundleXClass::pullback(SurfaceKClass::u2_dual())) == 1);
  // h^0(O(s)) = h^0(U2^v) = 5 = dim W.
  CHECK(chi_bundle(BundleXClass::xi_power(0), xi) == 5);

  using D = BlowupClass::Divisor;
  CHECK(chi_blowup(BlowupClass::line_bundle({0, 0, 0, 0, 0, 0}), BlowupClass::line_bundle({0, 0, 0, 0, 0, 0})) == 1);
  // Quadrics through five points: 10 - 5.
  CHECK(chi_blowup(BlowupClass::line_bundle({0, 0, 0, 0, 0, 0}), BlowupClass::line_bundle(D{2, 1, 1, 1, 1, 1})) == 5);
  CHECK(chi_blowup(BlowupClass::line_bundle({0, 0, 0, 0, 0, 0}), BlowupClass::exceptional_sheaf(1, -1)) == 3);
  CHECK(chi_blowup(BlowupClass::exceptional_sheaf(2, 0), BlowupClass::exceptional_sheaf(2, 0)) == 1);
  CHECK(chi_blowup(BlowupClass::exceptional_sheaf(2, 0), BlowupClass::exceptional_sheaf(3, 0)) == 0);
  // O_E = O - O(-E) numerically.
  const auto oe = BlowupClass::line_bundle({0, 0, 0, 0, 0, 0}) - BlowupClass::line_bundle({0, 1, 0, 0, 0, 0});
  CHECK(numerically_equal(oe, BlowupClass::exceptional_sheaf(1, 0)));
  CHECK_THROWS_AS(chi(KClass(O()), KClass(xi)), Error);
}

TEST_CASE("builtin collections") {
  for (const auto& name : builtin_collection_names()) {
    INFO(name);
    const auto c = builtin_collection(name);
    const auto g = gram(c);
    CHECK(g.unit_diagonal());
    CHECK(g.unitriangular());
    CHECK(serre_self_test(c).empty());
  }
  CHECK_THROWS_AS(builtin_collection("bogus"), Error);
  const auto tb = gram(builtin_collection("three_block"));
  CHECK(tb.blocks == std::vector<std::size_t>{1, 5, 1});
  CHECK(tb.blocks_orthogonal());
  CHECK(builtin_collection("orlov_X").items.size() == 14);
  CHECK(builtin_collection("quiver_center").items.back().label == "p*U2^v");
  for (const auto& name : {"blowup_14", "bundle_lefschetz", "orlov_X"}) {
    INFO(name);
    const auto c = builtin_collection(name);
    CHECK(gram(c).rectangular());
    // The second block is the first twisted by the polarisation.
    for (std::size_t i = 0; i < c.items.size() / 2; ++i)
      CHECK(numerically_equal(polarisation_twist(c.items[i].cls), c.items[i + c.items.size() / 2].cls));
  }
  const auto qc = gram(builtin_collection("quiver_center"));
  for (std::size_t i = 0; i < 6; ++i) CHECK(qc.entries[i][6] == 1);
  CHECK(qc.blocks_orthogonal());
  CHECK(gram(Collection{"single", Ambient::Surface, {{"O", O()}}, {1}}).entries == std::vector<std::vector<long>>{{1}});
}

TEST_CASE("mutations") {
  const auto tb = builtin_collection("three_block");
  // Orthogonal neighbours swap unchanged.
  const auto m = mutate(tb, 1, Direction::Left);
  CHECK(numerically_equal(m.items[1].cls, tb.items[2].cls));
  CHECK(numerically_equal(m.items[2].cls, tb.items[1].cls));
  CHECK_THROWS_AS(mutate(tb, 6, Direction::Right), Error);
  // Change of basis is unimodular and congruent on Gram matrices.
  for (std::size_t i = 0; i < 6; ++i)
    for (auto dir : {Direction::Left, Direction::Right}) {
      const auto mm = mutate(tb, i, dir);
      const auto M = change_of_basis(tb, mm);
      REQUIRE(M.has_value());
      const long d = det(*M);
      CHECK((d == 1 || d == -1));
      const auto G = gram(tb).entries;
      const auto G2 = gram(mm).entries;
      for (std::size_t a = 0; a < 7; ++a)
        for (std::size_t b = 0; b < 7; ++b) {
          long s = 0;
          for (std::size_t k = 0; k < 7; ++k)
            for (std::size_t l = 0; l < 7; ++l) s += (*M)[a][k] * G[k][l] * (*M)[b][l];
          CHECK(s == G2[a][b]);
        }
      CHECK(gram(mm).unitriangular());
    }
}

TEST_CASE("published mutation sequences") {
  const auto a = three_block_from_karpov_nogin();
  for (const auto& n : a.notes) INFO(n);
  CHECK(a.matches);
  const auto b = quiver_center_from_orlov();
  for (const auto& n : b.notes) INFO(n);
  CHECK(b.matches);
  const auto c = serre_endpoint_from_orlov();
  CHECK(c.matches);
  CHECK(equal_up_to_sign(c.result.items.back().cls, BundleXClass::xi_power(2)));
}

TEST_CASE("consistency checks") {
  const auto r = consistency_checks();
  for (const auto& [name, ok] : r.checks) {
    INFO(name);
    CHECK(ok);
  }
  CHECK(SurfaceKClass::u3().c1 == PicClass::canonical());
}
