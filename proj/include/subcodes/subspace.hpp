#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "subcodes/matrix.hpp"

namespace subcodes {

/// A subspace of F_q^N held by its RREF basis (no zero rows), so equality is
/// plain comparison of the basis matrices.
class Subspace {
 public:
  /// The zero subspace of F_q^ambient.
  Subspace(Field field, std::size_t ambient);

  /// Row space of m, in canonical form.
  static Subspace from_rows(const Matrix& m);
  static Subspace full(const Field& field, std::size_t ambient);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }

  bool contains(std::span<const Elem> v) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }
  bool operator<(const Subspace& o) const { return basis_ < o.basis_; }

 private:
  explicit Subspace(Matrix canonical_basis) : basis_(std::move(canonical_basis)) {}
  Matrix basis_;
};

std::size_t sum_dim(const Subspace& u, const Subspace& v);
std::size_t intersection_dim(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersection(const Subspace& u, const Subspace& v);

/// d_S(U, V) = dim U + dim V - 2 dim(U cap V).
std::size_t subspace_distance(const Subspace& u, const Subspace& v);
/// d_I(U, V) = dim(U + V) - min(dim U, dim V).
std::size_t injection_distance(const Subspace& u, const Subspace& v);
/// max(dim X - rho, dim Y) - dim(X cap Y), the minimum-cost decoding metric.
std::size_t delta_rho(const Subspace& x, const Subspace& y, long long rho);

/// Orthogonal complement under sum_i u_i v_i.
Subspace dual(const Subspace& u);

/// Every vector of u (q^dim of them), by enumerating coefficient tuples.
std::vector<std::vector<Elem>> span_vectors(const Subspace& u);

/// All subspaces of F_q^ambient, grown one vector at a time from {0} and
/// deduplicated by canonical form. Optionally only those of one dimension.
std::vector<Subspace> all_subspaces(const Field& field, std::size_t ambient,
                                    std::optional<std::size_t> only_dim = std::nullopt);

Subspace random_subspace(const Field& field, std::size_t ambient, std::size_t dim, Rng& rng);

struct BruteForceCaps {
  std::size_t max_r = 3;
  // Bound on both the number of transfer matrices A and of candidate Y states.
  std::uint64_t max_states = std::uint64_t{1} << 20;
};

/// Delta_rho from its definition as a minimisation: the least r such that
/// Y = A X + D Z for some A (N x n, rank >= n - rho), D (N x r), Z (r x m).
///
/// Enumerates every admissible A, then grows the reachable set
/// {A X + D Z : D has r columns} one column of D (one outer product d z) at a
/// time, breadth-first over all N x m matrices. Level r of the search is
/// exactly the set of Y explained with r error packets.
class DeltaRhoOracle {
 public:
  DeltaRhoOracle(const Matrix& x, std::size_t received_rows, long long rho,
                 BruteForceCaps caps = {});

  /// Least r, or nullopt if no admissible A exists or r would exceed max_r.
  std::optional<std::size_t> min_r(const Matrix& y) const;
  bool feasible() const { return feasible_; }
  std::uint64_t index_of(const Matrix& y) const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  bool feasible_ = false;
  std::vector<std::uint8_t> level_;  // 0xff = unreachable within max_r
};

/// Single-instance front end; throws Infeasible when no r <= max_r works.
std::size_t delta_rho_bruteforce(const Matrix& x, const Matrix& y, long long rho,
                                 BruteForceCaps caps = {});

}  // namespace subcodes
