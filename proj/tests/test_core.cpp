#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "support/test_oracles.hpp"
#include "tsboot/chunks.hpp"
#include "tsboot/errors.hpp"
#include "tsboot/quantile.hpp"
#include "tsboot/rng.hpp"
#include "tsboot/series.hpp"

using namespace tsboot;

TEST_CASE("series rejects empty and non-finite input") {
  CHECK_THROWS_AS(Series(std::vector<double>{}), InputError);
  CHECK_THROWS_AS(Series({1.0, std::nan(""), 2.0}), InputError);
  CHECK_THROWS_AS(Series({1.0, INFINITY}), InputError);
  const Series s({1.0, 2.0});
  CHECK(s.size() == 2);
  CHECK(s[1] == 2.0);
}

TEST_CASE("linear embedding of 1,2,3,4 at d=2") {
  const Series s({1, 2, 3, 4});
  const ChunkMatrix m = embed(s, 2, EmbedMode::linear);
  REQUIRE(m.rows() == 3);
  REQUIRE(m.cols() == 2);
  CHECK(m.row(0) == std::vector<double>{1, 2});
  CHECK(m.row(1) == std::vector<double>{2, 3});
  CHECK(m.row(2) == std::vector<double>{3, 4});
}

TEST_CASE("circular embedding wraps the last index") {
  const Series s({1, 2, 3, 4});
  const ChunkMatrix m = embed(s, 2, EmbedMode::circular);
  REQUIRE(m.rows() == 4);
  CHECK(m.row(3) == std::vector<double>{4, 1});
}

TEST_CASE("linear embedding row count is t-d+1") {
  std::vector<double> v(100);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<double>(i);
  CHECK(embed(Series(v), 3, EmbedMode::linear).rows() == 98);
}

TEST_CASE("embedding dimension errors") {
  const Series s({1, 2, 3});
  CHECK_THROWS_AS(embed(s, 4, EmbedMode::linear), DimensionError);
  CHECK_THROWS_AS(embed(s, 0, EmbedMode::linear), InputError);
}

TEST_CASE("circular embedding restricted to t-d+1 rows equals linear") {
  RngStream rng(42);
  for (std::size_t t : {5, 9, 30}) {
    std::vector<double> v(t);
    for (auto& x : v) x = rng.normal();
    const Series s(std::move(v));
    for (std::size_t d = 1; d <= t; d += 2) {
      const ChunkMatrix lin = embed(s, d, EmbedMode::linear);
      const ChunkMatrix cir = embed(s, d, EmbedMode::circular);
      REQUIRE(cir.rows() == t);
      for (std::size_t i = 0; i < lin.rows(); ++i) {
        for (std::size_t j = 0; j < d; ++j) CHECK(lin(i, j) == cir(i, j));
      }
    }
  }
}

TEST_CASE("empirical quantile picks the ceil(level*B) order statistic") {
  std::vector<double> v(100);
  for (std::size_t i = 0; i < 100; ++i) v[i] = static_cast<double>(i + 1);
  CHECK(empirical_quantile(v, 0.95) == 95.0);

  CHECK(empirical_quantile(std::vector<double>{7.5}, 0.01) == 7.5);
  CHECK(empirical_quantile(std::vector<double>{7.5}, 0.99) == 7.5);

  CHECK(empirical_quantile(std::vector<double>{3, 1, 2}, 0.5) == 2.0);
}

TEST_CASE("empirical quantile is monotone in level and always a sample value") {
  RngStream rng(7);
  std::vector<double> v(37);
  for (auto& x : v) x = rng.normal();
  double prev = -INFINITY;
  for (double level = 0.02; level < 1.0; level += 0.02) {
    const double q = empirical_quantile(v, level);
    CHECK(q >= prev);
    CHECK(std::count(v.begin(), v.end(), q) > 0);
    prev = q;
  }
}

TEST_CASE("empirical quantile input errors") {
  CHECK_THROWS_AS(empirical_quantile(std::vector<double>{}, 0.5), InputError);
  CHECK_THROWS_AS(empirical_quantile(std::vector<double>{1.0}, 0.0), InputError);
  CHECK_THROWS_AS(empirical_quantile(std::vector<double>{1.0}, 1.0), InputError);
}

TEST_CASE("rng streams replay exactly and children are stable") {
  RngStream a(123, 5);
  RngStream b(123, 5);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  // Children derive from the stream identity, not the draw position.
  RngStream parent(9);
  RngStream c0 = parent.child(3);
  parent.next_u64();
  RngStream c1 = parent.child(3);
  CHECK(c0.next_u64() == c1.next_u64());

  RngStream other(123, 6);
  CHECK(RngStream(123, 5).next_u64() != other.next_u64());
}

TEST_CASE("uniform_below stays in range and covers small supports") {
  RngStream rng(2024);
  std::vector<int> hits(5, 0);
  for (int i = 0; i < 5000; ++i) ++hits[rng.uniform_below(5)];
  for (int h : hits) CHECK(h > 800);
  RngStream one(1);
  for (int i = 0; i < 10; ++i) CHECK(one.uniform_below(1) == 0);
}

TEST_CASE("normal_quantile matches reference values") {
  // Reference values computed with scipy.stats.norm.ppf.
  const std::pair<double, double> cases[] = {
      {1e-10, -6.3613409024040557}, {0.001, -3.0902323061678132},
      {0.025, -1.9599639845400545}, {0.1, -1.2815515655446004},
      {0.5, 0.0},                   {0.7, 0.52440051270804067},
      {0.975, 1.959963984540054},   {0.999, 3.0902323061678132},
  };
  for (const auto& [p, want] : cases) {
    CHECK(normal_quantile(p) == doctest::Approx(want).epsilon(1e-12));
  }
  CHECK_THROWS_AS(normal_quantile(0.0), InputError);
  CHECK_THROWS_AS(normal_quantile(1.0), InputError);
}

TEST_CASE("normal draws have the right first two moments") {
  RngStream rng(77);
  std::vector<double> z(100000);
  for (auto& x : z) x = rng.normal();
  CHECK(std::abs(testing::mean_of(z)) < 3.0 / std::sqrt(100000.0));
  CHECK(testing::variance_of(z) == doctest::Approx(1.0).epsilon(0.02));
}
