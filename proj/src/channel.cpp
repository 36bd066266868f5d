#include "subcodes/channel.hpp"

#include <algorithm>
#include "json.hpp"

#include "subcodes/error.hpp"

namespace subcodes {

namespace {

Matrix matrix_from_index(const Field& f, std::size_t rows, std::size_t cols, std::uint64_t index) {
  std::vector<Elem> data(rows * cols);
  for (auto& e : data) {
    e = static_cast<Elem>(index % f.order());
    index /= f.order();
  }
  return Matrix(f, rows, cols, std::move(data));
}

std::uint64_t count_matrices(std::uint64_t q, std::size_t entries, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < entries; ++i) {
    if (r > cap / q) throw Error(ErrorKind::SearchSpaceTooLarge, "adversary search space too large");
    r *= q;
  }
  return r;
}

}  // namespace

Matrix random_transfer(std::size_t received_rows, std::size_t n, long long rho, const Field& field,
                       Rng& rng, std::optional<std::size_t> forced_deficiency) {
  if (rho < 0) throw Error(ErrorKind::ParamViolation, "rho must be nonnegative");
  if (static_cast<long long>(received_rows) < static_cast<long long>(n) - rho) {
    throw Error(ErrorKind::ParamViolation, "N_rx < n - rho leaves no admissible transfer matrix");
  }
  const std::size_t max_def = std::min<std::size_t>(static_cast<std::size_t>(rho), n);
  // A rank above N_rx is impossible, so the deficiency is at least n - N_rx.
  const std::size_t min_def = n > received_rows ? n - received_rows : 0;
  std::size_t deficiency;
  if (forced_deficiency) {
    deficiency = *forced_deficiency;
    if (deficiency > max_def || deficiency < min_def) {
      throw Error(ErrorKind::ParamViolation, "forced deficiency outside [" +
                                                 std::to_string(min_def) + ", " +
                                                 std::to_string(max_def) + "]");
    }
  } else {
    deficiency = min_def + rng.below(max_def - min_def + 1);
  }
  const std::size_t r = n - deficiency;
  if (r == 0) return Matrix(field, received_rows, n);
  const Matrix left = random_max_rank(received_rows, r, field, rng);
  const Matrix right = random_max_rank(r, n, field, rng);
  return matmul(left, right);
}

Matrix random_transfer(std::size_t received_rows, std::size_t n, long long rho, const Field& field,
                       std::uint64_t seed, std::optional<std::size_t> forced_deficiency) {
  Rng rng(seed);
  return random_transfer(received_rows, n, rho, field, rng, forced_deficiency);
}

Matrix transmit(const Matrix& x, const ChannelInstance& inst) {
  if (inst.error_transfer.cols() != inst.errors.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "D has " + std::to_string(inst.error_transfer.cols()) +
                                                  " columns but Z has " +
                                                  std::to_string(inst.errors.rows()) + " rows");
  }
  return matadd(matmul(inst.transfer, x), matmul(inst.error_transfer, inst.errors));
}

DecodeResult decode(const Matrix& y, const SubspaceCode& code, long long rho) {
  if (code.size() == 0) throw Error(ErrorKind::EmptyCode, "cannot decode against an empty code");
  if (y.cols() != code.ambient()) {
    throw Error(ErrorKind::AmbientMismatch, "packet length " + std::to_string(y.cols()) +
                                                " vs code ambient " +
                                                std::to_string(code.ambient()));
  }
  const Subspace received = Subspace::from_rows(y);
  DecodeResult best;
  std::size_t ties = 0;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const std::size_t d = delta_rho(code[i], received, rho);
    if (i == 0 || d < best.metric) {
      best.metric = d;
      best.index = i;
      ties = 1;
    } else if (d == best.metric) {
      ++ties;
    }
  }
  best.status = ties > 1 ? DecodeResult::Status::Ambiguous : DecodeResult::Status::Unique;
  return best;
}

std::string TrialReport::to_json() const {
  nlohmann::ordered_json j;
  j["trials"] = trials;
  j["failures"] = failures;
  j["ambiguous"] = ambiguous;
  j["t"] = t;
  j["rho"] = rho;
  j["d_I"] = d_i;
  return j.dump();
}

TrialReport correction_guarantee_trials(const SubspaceCode& code, std::size_t t, long long rho,
                                        std::uint64_t trials, std::uint64_t seed,
                                        const TrialOptions& options) {
  if (rho < 0) throw Error(ErrorKind::NegativeRho, "rho must be nonnegative");
  if (code.size() == 0) throw Error(ErrorKind::EmptyCode, "no codewords to send");
  TrialReport report;
  report.t = t;
  report.rho = rho;
  report.d_i = code.declared_type().min_distance
                   ? *code.declared_type().min_distance
                   : (code.size() > 1 ? min_injection_distance(code) : 0);
  const Field& f = code.field();
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    Rng rng(mix_seed(seed, trial));
    const std::size_t sent = rng.below(code.size());
    const Matrix& x = code[sent].basis();
    const std::size_t n = x.rows();
    const std::size_t rx = options.received_rows.value_or(n);
    ChannelInstance inst{random_transfer(rx, n, rho, f, rng), random_matrix(rx, t, f, rng),
                         random_matrix(t, code.ambient(), f, rng), rho};
    const DecodeResult out = decode(transmit(x, inst), code, rho);
    ++report.trials;
    if (out.status == DecodeResult::Status::Ambiguous) {
      ++report.ambiguous;
    } else if (out.index != sent) {
      ++report.failures;
    }
  }
  return report;
}

TrialReport correction_guarantee_trials(const GabidulinParams& params, std::size_t t,
                                        long long rho, std::uint64_t trials, std::uint64_t seed,
                                        const TrialOptions& options) {
  return correction_guarantee_trials(enumerate_code(params, options.code_cap), t, rho, trials,
                                     seed, options);
}

std::optional<AdversaryWitness> exhaustive_adversary(const SubspaceCode& code, std::size_t t,
                                                     long long rho,
                                                     std::optional<std::size_t> received_rows,
                                                     std::uint64_t max_cases) {
  if (rho < 0) throw Error(ErrorKind::NegativeRho, "rho must be nonnegative");
  if (code.size() == 0) throw Error(ErrorKind::EmptyCode, "no codewords to send");
  const Field& f = code.field();
  const std::uint64_t q = f.order();
  for (std::size_t sent = 0; sent < code.size(); ++sent) {
    const Matrix& x = code[sent].basis();
    const std::size_t n = x.rows();
    const std::size_t rx = received_rows.value_or(n);
    const std::uint64_t a_count = count_matrices(q, rx * n, max_cases);
    const std::uint64_t d_count = count_matrices(q, rx * t, max_cases);
    const std::uint64_t z_count = count_matrices(q, t * code.ambient(), max_cases);
    if (a_count > max_cases / d_count || a_count * d_count > max_cases / z_count ||
        a_count * d_count * z_count > max_cases / code.size()) {
      throw Error(ErrorKind::SearchSpaceTooLarge, "adversary search space too large");
    }
    const long long min_rank = static_cast<long long>(n) - rho;
    for (std::uint64_t ai = 0; ai < a_count; ++ai) {
      Matrix a = matrix_from_index(f, rx, n, ai);
      if (min_rank > 0 && static_cast<long long>(rank(a)) < min_rank) continue;
      const Matrix ax = matmul(a, x);
      for (std::uint64_t di = 0; di < d_count; ++di) {
        const Matrix d = matrix_from_index(f, rx, t, di);
        for (std::uint64_t zi = 0; zi < z_count; ++zi) {
          const Matrix z = matrix_from_index(f, t, code.ambient(), zi);
          Matrix y = matadd(ax, matmul(d, z));
          const DecodeResult out = decode(y, code, rho);
          if (out.status == DecodeResult::Status::Unique && out.index == sent) continue;
          return AdversaryWitness{sent, ChannelInstance{a, d, z, rho}, std::move(y), out};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace subcodes
