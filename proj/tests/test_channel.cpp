#include <algorithm>

#include "doctest.h"
#include "json.hpp"
#include "subcodes/channel.hpp"
#include "subcodes/error.hpp"

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

}  // namespace

TEST_CASE("random_transfer contracts") {
  const Field f = Field::of_order(2);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    REQUIRE(rank(random_transfer(4, 4, 0, f, seed)) == 4);
    REQUIRE(rank(random_transfer(4, 4, 2, f, seed, 2)) == 2);
    const Matrix a = random_transfer(5, 3, 2, f, seed);
    REQUIRE(a.rows() == 5);
    REQUIRE(a.cols() == 3);
    REQUIRE(rank(a) >= 1);
    // Three receivers for four packets forces a deficiency of at least one.
    const std::size_t r = rank(random_transfer(3, 4, 2, f, seed));
    REQUIRE(r >= 2);
    REQUIRE(r <= 3);
  }
  CHECK(random_transfer(4, 4, 1, f, 9) == random_transfer(4, 4, 1, f, 9));
  CHECK(kind_of([&] { random_transfer(2, 4, 1, f, 0); }) == ErrorKind::ParamViolation);
  CHECK(kind_of([&] { random_transfer(4, 4, -1, f, 0); }) == ErrorKind::ParamViolation);
  CHECK(kind_of([&] { random_transfer(4, 4, 1, f, 0, 2); }) == ErrorKind::ParamViolation);
}

TEST_CASE("transmit examples") {
  const Field f = Field::of_order(3);
  const Matrix x = random_matrix(3, 5, f, 1);
  const ChannelInstance clean{Matrix::identity(f, 3), Matrix(f, 3, 0), Matrix(f, 0, 5), 0};
  CHECK(transmit(x, clean) == x);

  const Matrix d = random_matrix(3, 2, f, 2);
  const Matrix z = random_matrix(2, 5, f, 3);
  const ChannelInstance noisy{random_matrix(3, 3, f, 4), d, z, 0};
  CHECK(transmit(Matrix(f, 3, 5), noisy) == matmul(d, z));

  Rng rng(6);
  for (int i = 0; i < 200; ++i) {
    const Matrix xi = random_matrix(3, 5, f, rng);
    const ChannelInstance inst{random_transfer(4, 3, 1, f, rng), random_matrix(4, 2, f, rng),
                               random_matrix(2, 5, f, rng), 1};
    const Subspace allowed = sum(Subspace::from_rows(xi), Subspace::from_rows(inst.errors));
    REQUIRE(allowed.contains(Subspace::from_rows(transmit(xi, inst))));
  }
  const ChannelInstance wrong{Matrix::identity(f, 2), Matrix(f, 2, 0), Matrix(f, 0, 5), 0};
  CHECK(kind_of([&] { transmit(x, wrong); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("noiseless decoding returns the sent codeword") {
  const SubspaceCode code = enumerate_code({2, 3, 3, 1});
  Rng rng(3);
  for (std::size_t j = 0; j < code.size(); ++j) {
    const Matrix x = code[j].basis();
    const auto r = decode(matmul(random_full_rank(3, code.field(), rng), x), code, 0);
    REQUIRE(r.status == DecodeResult::Status::Unique);
    REQUIRE(r.index == j);
    REQUIRE(r.metric == 0);
    // Rank-deficient A with the deficiency declared: d_I = 3 > rho.
    for (std::size_t delta = 1; delta <= 2; ++delta) {
      const Matrix a = random_transfer(3, 3, static_cast<long long>(delta), code.field(), rng, delta);
      const auto rd = decode(matmul(a, x), code, static_cast<long long>(delta));
      REQUIRE(rd.status == DecodeResult::Status::Unique);
      REQUIRE(rd.index == j);
    }
  }
}

TEST_CASE("an equidistant received space decodes as ambiguous") {
  const SubspaceCode code = enumerate_code({2, 2, 2, 1});
  std::size_t found = 0;
  for (const auto& y : all_subspaces(code.field(), 4)) {
    std::vector<std::size_t> metrics;
    for (const auto& c : code.codewords()) metrics.push_back(delta_rho(c, y, 0));
    const auto best = *std::min_element(metrics.begin(), metrics.end());
    const auto ties = std::count(metrics.begin(), metrics.end(), best);
    const auto r = decode(y.basis(), code, 0);
    REQUIRE(r.metric == best);
    REQUIRE((r.status == DecodeResult::Status::Ambiguous) == (ties >= 2));
    found += ties >= 2;
  }
  CHECK(found > 0);
}

TEST_CASE("decoding ignores row scrambling of Y") {
  const SubspaceCode code = enumerate_code({2, 3, 2, 1});
  Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    const Matrix y = random_matrix(3, code.ambient(), code.field(), rng);
    const Matrix s = random_full_rank(3, code.field(), rng);
    const long long rho = static_cast<long long>(rng.below(3));
    const auto a = decode(y, code, rho);
    const auto b = decode(matmul(s, y), code, rho);
    REQUIRE(a.status == b.status);
    REQUIRE(a.index == b.index);
    REQUIRE(a.metric == b.metric);
  }
}

TEST_CASE("decode errors") {
  const Field f = Field::of_order(2);
  const SubspaceCode empty(f, 4);
  CHECK(kind_of([&] { decode(Matrix(f, 1, 4), empty, 0); }) == ErrorKind::EmptyCode);
  const SubspaceCode code = enumerate_code({2, 2, 2, 1});
  CHECK(kind_of([&] { decode(Matrix(f, 1, 5), code, 0); }) == ErrorKind::AmbientMismatch);
  CHECK(kind_of([&] { decode(Matrix(f, 1, 4), code, -1); }) == ErrorKind::NegativeRho);
}

TEST_CASE("trial examples") {
  const TrialReport clean = correction_guarantee_trials(GabidulinParams{2, 2, 2, 1}, 0, 0, 1000, 1);
  CHECK(clean.trials == 1000);
  CHECK(clean.failures == 0);
  CHECK(clean.ambiguous == 0);
  CHECK(clean.d_i == 2);

  const TrialReport one_error = correction_guarantee_trials(GabidulinParams{2, 3, 3, 1}, 1, 0, 1000, 2);
  CHECK(one_error.d_i == 3);
  CHECK(one_error.failures == 0);
  CHECK(one_error.ambiguous == 0);

  const TrialReport beyond = correction_guarantee_trials(GabidulinParams{2, 2, 2, 1}, 1, 0, 300, 3);
  CHECK(beyond.failures + beyond.ambiguous > 0);

  const auto j = nlohmann::json::parse(clean.to_json());
  for (const char* key : {"trials", "failures", "ambiguous", "t", "rho", "d_I"}) CHECK(j.contains(key));
  CHECK(j["trials"] == 1000);

  const TrialReport again = correction_guarantee_trials(GabidulinParams{2, 2, 2, 1}, 1, 0, 300, 3);
  CHECK(again.failures == beyond.failures);
  CHECK(again.ambiguous == beyond.ambiguous);
  CHECK(kind_of([] { correction_guarantee_trials(GabidulinParams{16, 4, 2, 2}, 0, 0, 1, 0); }) ==
        ErrorKind::CodeTooLarge);
}

TEST_CASE("more receivers than packets") {
  TrialOptions opts;
  opts.received_rows = 5;
  const TrialReport r = correction_guarantee_trials(GabidulinParams{2, 3, 3, 1}, 1, 0, 300, 4, opts);
  CHECK(r.failures == 0);
  CHECK(r.ambiguous == 0);
}

TEST_CASE("exhaustive adversary") {
  const SubspaceCode code = enumerate_code({2, 2, 2, 1});
  // 2t + rho = 1 < d_I = 2: nothing defeats the decoder.
  CHECK_FALSE(exhaustive_adversary(code, 0, 1).has_value());
  CHECK_FALSE(exhaustive_adversary(code, 0, 0).has_value());

  const auto w = exhaustive_adversary(code, 1, 0);
  REQUIRE(w.has_value());
  const Matrix y = transmit(code[w->sent].basis(), w->instance);
  CHECK(y == w->received);
  CHECK(rank(w->instance.transfer) == 2);
  const auto again = decode(y, code, 0);
  CHECK((again.status == DecodeResult::Status::Ambiguous || again.index != w->sent));

  CHECK(kind_of([&] { exhaustive_adversary(enumerate_code({2, 3, 3, 1}), 1, 0, std::nullopt, 1000); }) ==
        ErrorKind::SearchSpaceTooLarge);
}
