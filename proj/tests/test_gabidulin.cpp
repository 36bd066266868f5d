#include <set>
#include <sstream>

#include "doctest.h"
#include "subcodes/error.hpp"
#include "subcodes/gabidulin.hpp"

using namespace subcodes;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::ParseError;
}

// Appends a zero coordinate to every basis row: the inverse of the default
// hyperplane's coordinatisation.
Subspace embed(const Subspace& s) {
  Matrix m(s.field(), s.dim(), s.ambient() + 1);
  for (std::size_t r = 0; r < s.dim(); ++r) {
    for (std::size_t c = 0; c < s.ambient(); ++c) m.set(r, c, s.basis().at(r, c));
  }
  return Subspace::from_rows(m);
}

}  // namespace

TEST_CASE("linearized polynomial evaluation") {
  const Field gf4 = Field::of_order(4);
  const FieldElement w = gf4.element(gf4.x());
  CHECK(evaluate_linearized({gf4, {0, 0}}, w).is_zero());
  CHECK(evaluate_linearized({gf4, {3}}, w) == gf4.element(3) * w);
  // x^2 at w gives w + 1.
  CHECK(evaluate_linearized({gf4, {0, 1}}, w) == w + gf4.element(1));

  const Field gf16 = Field::of_order(16);
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const auto a = gf16.element(static_cast<Elem>(rng.below(16)));
    const auto b = gf16.element(static_cast<Elem>(rng.below(16)));
    const LinearizedPoly f{gf16, {static_cast<Elem>(rng.below(16)), static_cast<Elem>(rng.below(16)),
                                  static_cast<Elem>(rng.below(16))}};
    REQUIRE(evaluate_linearized(f, a + b) == evaluate_linearized(f, a) + evaluate_linearized(f, b));
  }
}

TEST_CASE("encoder basics") {
  const GabidulinEncoder enc({2, 3, 3, 2});
  CHECK(enc.ext_field().order() == 8);
  CHECK(enc.points().size() == 3);
  CHECK(enc.points()[0] == 1);
  CHECK(enc.points()[1] == enc.ext_field().x());
  CHECK(enc.encode(std::vector<Elem>{0, 0}) == std::vector<Elem>{0, 0, 0});

  const GabidulinEncoder one({2, 1, 1, 1});
  CHECK(one.encode(std::vector<Elem>{1}) == std::vector<Elem>{1});
  CHECK_THROWS_AS(enc.encode(std::vector<Elem>{1}), Error);
  CHECK_THROWS_AS(enc.encode(std::vector<Elem>{8, 0}), Error);
}

TEST_CASE("encoding is GF(q^m)-linear") {
  const GabidulinEncoder enc({3, 3, 3, 2});
  const Field& f = enc.ext_field();
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const auto a = static_cast<Elem>(rng.below(f.order()));
    std::vector<Elem> u(2), v(2), w(2);
    for (std::size_t j = 0; j < 2; ++j) {
      u[j] = static_cast<Elem>(rng.below(f.order()));
      v[j] = static_cast<Elem>(rng.below(f.order()));
      w[j] = f.add(f.mul(a, u[j]), v[j]);
    }
    const auto cu = enc.encode(u), cv = enc.encode(v), cw = enc.encode(w);
    for (std::size_t j = 0; j < 3; ++j) REQUIRE(cw[j] == f.add(f.mul(a, cu[j]), cv[j]));
  }
}

TEST_CASE("encoding is injective on small codes") {
  for (const GabidulinParams p : {GabidulinParams{2, 2, 2, 1}, GabidulinParams{2, 3, 2, 2},
                                  GabidulinParams{3, 2, 2, 1}, GabidulinParams{2, 4, 3, 2}}) {
    const GabidulinEncoder enc(p);
    const auto order = enc.ext_field().order();
    std::uint64_t total = 1;
    for (unsigned i = 0; i < p.k; ++i) total *= order;
    std::set<Matrix> seen;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::vector<Elem> msg(p.k);
      std::uint64_t rest = idx;
      for (auto& c : msg) {
        c = static_cast<Elem>(rest % order);
        rest /= order;
      }
      REQUIRE(seen.insert(enc.expand_to_matrix(enc.encode(msg))).second);
    }
  }
}

TEST_CASE("lifting preserves rank distance") {
  const Field f = Field::of_order(2);
  std::vector<Matrix> all;
  for (Elem idx = 0; idx < 16; ++idx) {
    all.push_back(Matrix(f, 2, 2, {idx & 1u, (idx >> 1) & 1u, (idx >> 2) & 1u, (idx >> 3) & 1u}));
  }
  CHECK(lift(Matrix(f, 2, 2)) == Subspace::from_rows(hstack(Matrix::identity(f, 2), Matrix(f, 2, 2))));
  std::set<Subspace> lifted;
  for (const auto& a : all) {
    const Subspace la = lift(a);
    REQUIRE(la.dim() == 2);
    REQUIRE(la.ambient() == 4);
    lifted.insert(la);
    for (const auto& b : all) REQUIRE(injection_distance(la, lift(b)) == rank(matsub(a, b)));
  }
  CHECK(lifted.size() == 16);
}

TEST_CASE("parameter validation") {
  CHECK(kind_of([] { GabidulinParams{2, 2, 3, 1}.validate(); }) == ErrorKind::ParamViolation);
  CHECK(kind_of([] { GabidulinParams{2, 3, 2, 3}.validate(); }) == ErrorKind::ParamViolation);
  CHECK(kind_of([] { GabidulinParams{2, 3, 2, 0}.validate(); }) == ErrorKind::ParamViolation);
  CHECK(kind_of([] { GabidulinParams{6, 3, 2, 1}.validate(); }) == ErrorKind::NonPrimeCharacteristic);
  const CodeType t = GabidulinParams{2, 3, 2, 1}.type();
  CHECK(t.ambient == 5);
  CHECK(t.max_dim == 2);
  CHECK(t.log_q_size == doctest::Approx(3.0));
  CHECK(t.min_distance == std::optional<std::size_t>{2});
}

TEST_CASE("enumerated codes have their declared type") {
  const SubspaceCode small = enumerate_code({2, 2, 2, 1});
  CHECK(small.size() == 4);
  CHECK(small.ambient() == 4);
  CHECK(small.max_dim() == 2);
  CHECK(min_injection_distance(small) == 2);
  CHECK(small.declared_type() == GabidulinParams{2, 2, 2, 1}.type());

  const SubspaceCode full = enumerate_code({2, 3, 2, 2});
  CHECK(full.size() == 64);
  CHECK(full.ambient() == 5);
  CHECK(min_injection_distance(full) == 1);
  CHECK(full.declared_type().log_q_size == doctest::Approx(6.0));

  for (const GabidulinParams p : {GabidulinParams{2, 3, 3, 1}, GabidulinParams{3, 3, 3, 2},
                                  GabidulinParams{2, 4, 3, 1}, GabidulinParams{4, 2, 2, 1}}) {
    const SubspaceCode c = enumerate_code(p);
    REQUIRE(min_injection_distance(c) == p.min_distance());
    for (const auto& v : c.codewords()) REQUIRE(v.dim() == p.l);
  }
  CHECK(kind_of([] { enumerate_code({16, 30, 18, 15}); }) == ErrorKind::CodeTooLarge);
  CHECK(kind_of([] { enumerate_code({2, 3, 2, 2}, 63); }) == ErrorKind::CodeTooLarge);
}

TEST_CASE("minimum distance scan") {
  const Field f = Field::of_order(2);
  SubspaceCode c(f, 4);
  CHECK(kind_of([&] { min_injection_distance(c); }) == ErrorKind::ParamViolation);
  Rng rng(9);
  const auto u = random_subspace(f, 4, 2, rng);
  c.add(u);
  CHECK_FALSE(c.add(u));
  CHECK(c.size() == 1);
  const auto v = random_subspace(f, 4, 3, rng);
  c.add(v);
  CHECK(min_injection_distance(c) == injection_distance(u, v));
  CHECK(kind_of([&] { c.add(Subspace(f, 5)); }) == ErrorKind::AmbientMismatch);
  CHECK(kind_of([] { min_injection_distance(enumerate_code({2, 4, 4, 2}), 100); }) ==
        ErrorKind::BudgetExceeded);
}

TEST_CASE("puncturing a distance-3 code") {
  const SubspaceCode code = enumerate_code({2, 3, 3, 1});
  REQUIRE(min_injection_distance(code) == 3);
  const SubspaceCode p = puncture(code, default_hyperplane(code.field(), code.ambient()), 1);
  CHECK(p.ambient() == 5);
  CHECK(p.size() == code.size());
  CHECK(p.max_dim() == 2);
  CHECK(min_injection_distance(p) >= 2);
  CHECK(p.declared_type().ambient == 5);
  CHECK_FALSE(p.declared_type().min_distance.has_value());
  for (std::size_t i = 0; i < code.size(); ++i) REQUIRE(code[i].contains(embed(p[i])));
}

TEST_CASE("puncturing keeps D' >= D - 1 on random hyperplanes") {
  const SubspaceCode code = enumerate_code({2, 3, 3, 2});
  const std::size_t d = min_injection_distance(code);
  Rng rng(12);
  for (int i = 0; i < 20; ++i) {
    const Subspace w = random_subspace(code.field(), code.ambient(), code.ambient() - 1, rng);
    const SubspaceCode p = puncture(code, w, rng.next());
    REQUIRE(p.ambient() == code.ambient() - 1);
    REQUIRE(min_injection_distance(p) + 1 >= d);
  }
}

TEST_CASE("codeword inside the hyperplane takes the random branch") {
  const Field f = Field::of_order(2);
  SubspaceCode code(f, 4);
  const Subspace inside = Subspace::from_rows(Matrix::from_rows(f, {{1, 0, 0, 0}, {0, 1, 1, 0}}, 4));
  const Subspace across = Subspace::from_rows(Matrix::from_rows(f, {{1, 0, 0, 1}, {0, 0, 1, 0}}, 4));
  code.add(inside);
  code.add(across);
  const Subspace w = default_hyperplane(f, 4);
  REQUIRE(w.contains(inside));

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SubspaceCode p = puncture(code, w, seed);
    REQUIRE(p[0].dim() == 1);
    REQUIRE(inside.contains(embed(p[0])));
    REQUIRE(embed(p[1]) == intersection(across, w));

    const SubspaceCode h = puncture(code, w, seed, PunctureFallback::WithinHyperplane);
    REQUIRE(h[0].dim() == 1);
    REQUIRE(w.contains(embed(h[0])));
  }
  CHECK(puncture(code, w, 5).codewords() == puncture(code, w, 5).codewords());
}

TEST_CASE("puncture errors") {
  const Field f = Field::of_order(2);
  SubspaceCode code(f, 3);
  code.add(Subspace::from_rows(Matrix::from_rows(f, {{1, 0, 0}}, 3)));
  CHECK(kind_of([&] { puncture(code, default_hyperplane(f, 4), 0); }) == ErrorKind::AmbientMismatch);
  CHECK(kind_of([&] { puncture(code, Subspace::full(f, 3), 0); }) == ErrorKind::ParamViolation);
  code.add(Subspace(f, 3));
  CHECK(kind_of([&] { puncture(code, default_hyperplane(f, 3), 0); }) == ErrorKind::ZeroDimCodeword);
}

TEST_CASE("coordinates in a subspace basis") {
  const Field f = Field::of_order(3);
  const Subspace w = Subspace::from_rows(Matrix::from_rows(f, {{1, 0, 2}, {0, 1, 1}}, 3));
  CHECK(coordinates_in(w, std::vector<Elem>{2, 1, 2}) == std::vector<Elem>{2, 1});
  CHECK_THROWS_AS(coordinates_in(w, std::vector<Elem>{1, 0, 0}), Error);
}

TEST_CASE("example sequence") {
  const auto seq = example_sequence();
  REQUIRE(seq.size() == 27);
  CHECK(seq.front() == GabidulinParams{16, 4, 2, 2});
  CHECK(seq.back() == GabidulinParams{16, 30, 18, 15});
  const CodeType last = seq.back().type();
  CHECK(last.ambient == 48);
  CHECK(last.max_dim == 18);
  CHECK(last.log_q_size == doctest::Approx(450.0));
  CHECK(last.min_distance == std::optional<std::size_t>{4});
  for (const auto& p : seq) {
    REQUIRE(p.k <= p.l);
    REQUIRE(p.l <= p.m);
    REQUIRE(2 * p.l <= p.ambient());
  }
  CHECK_THROWS_AS(example_sequence(3, 30), Error);
}

TEST_CASE("code file round trip") {
  const SubspaceCode code = enumerate_code({3, 2, 2, 1});
  std::stringstream ss;
  write_code(ss, code);
  const SubspaceCode back = read_code(ss);
  CHECK(back.ambient() == code.ambient());
  CHECK(back.codewords() == code.codewords());

  for (const char* bad : {"", "code N=3 q=2\n", "code N=3 q=2 count=1\n",
                          "code N=3 q=2 count=1\ngf=gf(2) rows=1 cols=2\n1 0\n"}) {
    std::istringstream in(bad);
    CHECK_THROWS_AS(read_code(in), Error);
  }
}
