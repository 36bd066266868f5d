#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "subcodes/gabidulin.hpp"

namespace subcodes {

/// One use of the channel Y = A X + D Z.
struct ChannelInstance {
  Matrix transfer;        // A, N_rx x n
  Matrix error_transfer;  // D, N_rx x t
  Matrix errors;          // Z, t x m
  long long rho_declared = 0;
};

/// A with rank exactly n - delta, delta uniform in [0, min(rho, n)] unless
/// forced, built as (full-column-rank N_rx x (n-delta)) times
/// (full-row-rank (n-delta) x n).
Matrix random_transfer(std::size_t received_rows, std::size_t n, long long rho, const Field& field,
                       Rng& rng, std::optional<std::size_t> forced_deficiency = std::nullopt);
Matrix random_transfer(std::size_t received_rows, std::size_t n, long long rho, const Field& field,
                       std::uint64_t seed,
                       std::optional<std::size_t> forced_deficiency = std::nullopt);

/// A X + D Z.
Matrix transmit(const Matrix& x, const ChannelInstance& inst);

struct DecodeResult {
  enum class Status { Unique, Ambiguous };
  Status status = Status::Unique;
  std::size_t index = 0;   // argmin (first one when ambiguous)
  std::size_t metric = 0;  // minimum Delta_rho
};

/// Minimum-Delta_rho decoding of the row space of y against every codeword.
/// Ties are reported as Ambiguous, never broken.
DecodeResult decode(const Matrix& y, const SubspaceCode& code, long long rho);

struct TrialReport {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::uint64_t ambiguous = 0;
  std::size_t t = 0;
  long long rho = 0;
  std::size_t d_i = 0;

  std::string to_json() const;
};

struct TrialOptions {
  std::optional<std::size_t> received_rows;  // defaults to n = dim of the codewords
  std::uint64_t code_cap = 1u << 12;
};

/// Random codeword, random transfer with the declared rho, t random error
/// packets, decode. Trial i uses the seed stream mix_seed(seed, i).
TrialReport correction_guarantee_trials(const GabidulinParams& params, std::size_t t,
                                        long long rho, std::uint64_t trials, std::uint64_t seed,
                                        const TrialOptions& options = {});
TrialReport correction_guarantee_trials(const SubspaceCode& code, std::size_t t, long long rho,
                                        std::uint64_t trials, std::uint64_t seed,
                                        const TrialOptions& options = {});

/// Channel use on which decoding does not return the sent codeword uniquely.
struct AdversaryWitness {
  std::size_t sent = 0;
  ChannelInstance instance;
  Matrix received;
  DecodeResult outcome;
};

/// Exhaustive search over codewords, admissible A, D and Z for a channel use
/// that defeats the decoder. Throws SearchSpaceTooLarge past max_cases.
std::optional<AdversaryWitness> exhaustive_adversary(
    const SubspaceCode& code, std::size_t t, long long rho,
    std::optional<std::size_t> received_rows = std::nullopt,
    std::uint64_t max_cases = std::uint64_t{1} << 24);

}  // namespace subcodes
