#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "subcodes/error.hpp"
#include "subcodes/subspace.hpp"

using namespace subcodes;

namespace {

Subspace span(const Field& f, std::vector<std::vector<Elem>> rows, std::size_t n) {
  return Subspace::from_rows(Matrix::from_rows(f, rows, n));
}

std::vector<Matrix> all_matrices(const Field& f, std::size_t r, std::size_t c) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < r * c; ++i) total *= f.order();
  std::vector<Matrix> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<Elem> e(r * c);
    std::uint64_t rest = idx;
    for (auto& x : e) {
      x = static_cast<Elem>(rest % f.order());
      rest /= f.order();
    }
    out.emplace_back(f, r, c, std::move(e));
  }
  return out;
}

std::set<std::vector<Elem>> vector_set(const Subspace& s) {
  const auto v = span_vectors(s);
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("from_rows canonicalises") {
  const Field f = Field::of_order(2);
  const Subspace zero = Subspace::from_rows(Matrix(f, 3, 4));
  CHECK(zero.dim() == 0);
  CHECK(zero == Subspace(f, 4));
  const Subspace s = span(f, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, 3);
  CHECK(s.dim() == 2);
  CHECK(s == span(f, {{0, 1, 1}, {1, 0, 1}}, 3));
  CHECK(s.contains(std::vector<Elem>{1, 1, 0}));
  CHECK_FALSE(s.contains(std::vector<Elem>{1, 0, 0}));
  CHECK(Subspace::full(f, 3).contains(s));
  CHECK_FALSE(s.contains(Subspace::full(f, 3)));
}

TEST_CASE("sum and intersection dimensions") {
  const Field f = Field::of_order(2);
  const auto e1 = span(f, {{1, 0, 0}}, 3), e2 = span(f, {{0, 1, 0}}, 3);
  CHECK(sum_dim(e1, e2) == 2);
  CHECK(intersection_dim(e1, e2) == 0);
  CHECK(intersection_dim(e1, e1) == 1);
  const auto full = Subspace::full(f, 3);
  CHECK(intersection(full, e2) == e2);
  CHECK(sum(e1, e2) == span(f, {{1, 0, 0}, {0, 1, 0}}, 3));
}

TEST_CASE("intersection agrees with vector enumeration") {
  for (std::uint64_t q : {2u, 3u}) {
    const Field f = Field::of_order(q);
    Rng rng(q * 17);
    const std::size_t n = q == 2 ? 5 : 4;
    for (int i = 0; i < 150; ++i) {
      const auto u = random_subspace(f, n, rng.below(n + 1), rng);
      const auto v = random_subspace(f, n, rng.below(n + 1), rng);
      const auto su = vector_set(u), sv = vector_set(v);
      std::set<std::vector<Elem>> common;
      std::set_intersection(su.begin(), su.end(), sv.begin(), sv.end(),
                            std::inserter(common, common.begin()));
      REQUIRE(vector_set(intersection(u, v)) == common);
      std::uint64_t expected = 1;
      for (std::size_t d = 0; d < intersection_dim(u, v); ++d) expected *= q;
      REQUIRE(common.size() == expected);
      REQUIRE(sum_dim(u, v) + intersection_dim(u, v) == u.dim() + v.dim());
    }
  }
}

TEST_CASE("distance examples") {
  const Field f = Field::of_order(2);
  const auto e1 = span(f, {{1, 0, 0}}, 3), e2 = span(f, {{0, 1, 0}}, 3);
  const auto zero = Subspace(f, 3), full = Subspace::full(f, 3);
  CHECK(subspace_distance(e1, e2) == 2);
  CHECK(injection_distance(e1, e2) == 1);
  CHECK(subspace_distance(zero, full) == 3);
  CHECK(injection_distance(zero, full) == 3);
  CHECK(injection_distance(e1, e1) == 0);

  CHECK(delta_rho(e1, zero, 0) == 1);
  CHECK(delta_rho(e1, zero, 1) == 0);
  CHECK(delta_rho(full, e1, 0) == 2);
  CHECK(delta_rho(full, e1, 2) == 0);
  CHECK(delta_rho(full, e1, 5) == 0);

  CHECK_THROWS_AS(delta_rho(e1, e2, -1), Error);
  CHECK_THROWS_AS(injection_distance(e1, Subspace(f, 4)), Error);
  CHECK_THROWS_AS(subspace_distance(e1, Subspace(Field::of_order(4), 3)), Error);
}

TEST_CASE("metric axioms over every pair of subspaces of F_2^3") {
  const Field f = Field::of_order(2);
  const auto all = all_subspaces(f, 3);
  REQUIRE(all.size() == 16);
  for (const auto& u : all) {
    for (const auto& v : all) {
      const auto di = injection_distance(u, v);
      REQUIRE(di == injection_distance(v, u));
      REQUIRE((di == 0) == (u == v));
      const auto ds = subspace_distance(u, v);
      // 2 d_I = d_S + |dim U - dim V|
      const std::size_t gap = u.dim() > v.dim() ? u.dim() - v.dim() : v.dim() - u.dim();
      REQUIRE(2 * di == ds + gap);
      if (u.dim() == v.dim()) REQUIRE(2 * di == ds);
      for (const auto& w : all) REQUIRE(di <= injection_distance(u, w) + injection_distance(w, v));
    }
  }
}

TEST_CASE("subspace enumeration counts") {
  CHECK(all_subspaces(Field::of_order(2), 4).size() == 67);
  CHECK(all_subspaces(Field::of_order(3), 2).size() == 6);
  CHECK(all_subspaces(Field::of_order(2), 4, 2).size() == 35);
  CHECK(all_subspaces(Field::of_order(2), 0).size() == 1);
}

TEST_CASE("random triples satisfy the triangle inequality") {
  const Field f = Field::of_order(4);
  Rng rng(77);
  for (int i = 0; i < 300; ++i) {
    const auto u = random_subspace(f, 6, rng.below(7), rng);
    const auto v = random_subspace(f, 6, rng.below(7), rng);
    const auto w = random_subspace(f, 6, rng.below(7), rng);
    REQUIRE(injection_distance(u, v) <= injection_distance(u, w) + injection_distance(w, v));
    REQUIRE(subspace_distance(u, v) <= subspace_distance(u, w) + subspace_distance(w, v));
  }
}

TEST_CASE("delta_rho is non-increasing in rho") {
  const Field f = Field::of_order(3);
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto x = random_subspace(f, 5, rng.below(6), rng);
    const auto y = random_subspace(f, 5, rng.below(6), rng);
    REQUIRE(delta_rho(x, y, 0) == injection_distance(x, y));
    for (long long rho = 0; rho < 6; ++rho) REQUIRE(delta_rho(x, y, rho + 1) <= delta_rho(x, y, rho));
    REQUIRE(delta_rho(x, y, static_cast<long long>(x.dim())) == y.dim() - intersection_dim(x, y));
  }
}

TEST_CASE("dual examples") {
  const Field f = Field::of_order(2);
  CHECK(dual(Subspace(f, 3)) == Subspace::full(f, 3));
  CHECK(dual(Subspace::full(f, 3)) == Subspace(f, 3));
  CHECK(dual(span(f, {{1, 1}}, 2)) == span(f, {{1, 1}}, 2));
}

TEST_CASE("dual is an involution and orthogonal") {
  const Field f = Field::of_order(5);
  Rng rng(500);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng.below(6);
    const auto u = random_subspace(f, n, rng.below(n + 1), rng);
    const auto d = dual(u);
    REQUIRE(d.dim() + u.dim() == n);
    REQUIRE(dual(d) == u);
    for (std::size_t a = 0; a < u.dim(); ++a) {
      for (std::size_t b = 0; b < d.dim(); ++b) {
        Elem dot = 0;
        for (std::size_t j = 0; j < n; ++j) dot = f.add(dot, f.mul(u.basis().at(a, j), d.basis().at(b, j)));
        REQUIRE(dot == 0);
      }
    }
  }
}

TEST_CASE("brute-force delta_rho examples") {
  const Field f = Field::of_order(2);
  const Matrix x = Matrix::identity(f, 2);
  CHECK(delta_rho_bruteforce(x, x, 0) == 0);
  CHECK(delta_rho_bruteforce(x, Matrix(f, 2, 2), 2) == 0);
  CHECK(delta_rho_bruteforce(x, Matrix(f, 2, 2), 1) == 1);
  CHECK(delta_rho_bruteforce(x, Matrix(f, 2, 2), 0) == 2);
  // Fewer received packets than n - rho: no admissible A.
  CHECK_THROWS_AS(delta_rho_bruteforce(x, Matrix(f, 1, 2), 0), Error);
  CHECK_THROWS_AS(delta_rho_bruteforce(x, x, -1), Error);
  BruteForceCaps tiny;
  tiny.max_states = 8;
  CHECK_THROWS_AS(delta_rho_bruteforce(Matrix::identity(f, 3), Matrix::identity(f, 3), 0, tiny), Error);
}

TEST_CASE("BFS oracle matches literal enumeration of A, D and Z") {
  const Field f = Field::of_order(2);
  for (std::size_t n = 1; n <= 2; ++n) {
    for (std::size_t m = 1; m <= 2; ++m) {
      for (std::size_t big_n = 1; big_n <= 2; ++big_n) {
        const auto ys = all_matrices(f, big_n, m);
        for (const auto& x : all_matrices(f, n, m)) {
          for (long long rho = 0; rho <= static_cast<long long>(n); ++rho) {
            std::map<std::vector<Elem>, std::size_t> best;
            const auto note = [&](std::vector<Elem> y, std::size_t r) {
              const auto [it, inserted] = best.emplace(std::move(y), r);
              if (!inserted) it->second = std::min(it->second, r);
            };
            for (const auto& a : all_matrices(f, big_n, n)) {
              if (rank(a) + rho < n) continue;
              const Matrix ax = matmul(a, x);
              note(ax.entries(), 0);
              for (std::size_t r = 1; r <= 2; ++r) {
                for (const auto& d : all_matrices(f, big_n, r)) {
                  for (const auto& z : all_matrices(f, r, m)) {
                    note(matadd(ax, matmul(d, z)).entries(), r);
                  }
                }
              }
            }
            const DeltaRhoOracle oracle(x, big_n, rho);
            REQUIRE(oracle.feasible() == !best.empty());
            const auto sx = Subspace::from_rows(x);
            for (const auto& y : ys) {
              const auto it = best.find(y.entries());
              const auto got = oracle.min_r(y);
              if (it == best.end()) {
                REQUIRE_FALSE(got.has_value());
                continue;
              }
              REQUIRE(got.has_value());
              REQUIRE(*got == it->second);
              REQUIRE(*got == delta_rho(sx, Subspace::from_rows(y), rho));
            }
          }
        }
      }
    }
  }
}
