#include "subcodes/subspace.hpp"

#include <algorithm>
#include <set>

#include "subcodes/error.hpp"

namespace subcodes {

namespace {

void require_compatible(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) {
    throw Error(ErrorKind::AmbientMismatch, "ambient dimensions " + std::to_string(u.ambient()) +
                                                " and " + std::to_string(v.ambient()));
  }
  if (u.field() != v.field()) throw Error(ErrorKind::FieldMismatch, "subspaces over different fields");
}

std::uint64_t checked_count(std::uint64_t q, std::uint64_t exponent, std::uint64_t cap,
                            const char* what) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (r > cap / q) {
      throw Error(ErrorKind::SearchSpaceTooLarge, std::string(what) + " exceeds the search cap");
    }
    r *= q;
  }
  return r;
}

// Row-major digits of an index in base q, length len.
void decode_digits(std::uint64_t index, std::uint64_t q, std::vector<Elem>& out) {
  for (auto& d : out) {
    d = static_cast<Elem>(index % q);
    index /= q;
  }
}

std::uint64_t encode_digits(std::span<const Elem> digits, std::uint64_t q) {
  std::uint64_t r = 0;
  for (std::size_t i = digits.size(); i-- > 0;) r = r * q + digits[i];
  return r;
}

}  // namespace

Subspace::Subspace(Field field, std::size_t ambient) : basis_(std::move(field), 0, ambient) {}

Subspace Subspace::from_rows(const Matrix& m) {
  auto ech = rref(m);
  return Subspace(ech.reduced.row_range(0, ech.rank));
}

Subspace Subspace::full(const Field& field, std::size_t ambient) {
  return Subspace(Matrix::identity(field, ambient));
}

bool Subspace::contains(std::span<const Elem> v) const {
  if (v.size() != ambient()) throw Error(ErrorKind::AmbientMismatch, "vector length");
  Matrix row(field(), 1, ambient(), std::vector<Elem>(v.begin(), v.end()));
  return rank(vstack(basis_, row)) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  return sum_dim(*this, other) == dim();
}

std::size_t sum_dim(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  return rank(vstack(u.basis(), v.basis()));
}

std::size_t intersection_dim(const Subspace& u, const Subspace& v) {
  return u.dim() + v.dim() - sum_dim(u, v);
}

Subspace sum(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  return Subspace::from_rows(vstack(u.basis(), v.basis()));
}

Subspace intersection(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  if (u.dim() == 0 || v.dim() == 0) return Subspace(u.field(), u.ambient());
  // Each left-kernel vector (a, b) of [U; V] gives a U = -b V in both spaces.
  const Matrix stacked = vstack(u.basis(), v.basis());
  const Matrix relations = kernel(stacked.transpose());
  const Matrix coeffs_u = relations.col_range(0, u.dim());
  return Subspace::from_rows(matmul(coeffs_u, u.basis()));
}

std::size_t subspace_distance(const Subspace& u, const Subspace& v) {
  return u.dim() + v.dim() - 2 * intersection_dim(u, v);
}

std::size_t injection_distance(const Subspace& u, const Subspace& v) {
  return sum_dim(u, v) - std::min(u.dim(), v.dim());
}

std::size_t delta_rho(const Subspace& x, const Subspace& y, long long rho) {
  if (rho < 0) throw Error(ErrorKind::NegativeRho, "rho must be nonnegative");
  const long long reduced = static_cast<long long>(x.dim()) - rho;
  const long long top = std::max(reduced, static_cast<long long>(y.dim()));
  return static_cast<std::size_t>(top - static_cast<long long>(intersection_dim(x, y)));
}

Subspace dual(const Subspace& u) { return Subspace::from_rows(kernel(u.basis())); }

std::vector<std::vector<Elem>> span_vectors(const Subspace& u) {
  const Field& f = u.field();
  const std::uint64_t q = f.order();
  const std::uint64_t count =
      checked_count(q, u.dim(), std::uint64_t{1} << 24, "span enumeration");
  std::vector<std::vector<Elem>> out;
  out.reserve(count);
  std::vector<Elem> coeffs(u.dim());
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    decode_digits(idx, q, coeffs);
    std::vector<Elem> v(u.ambient(), 0);
    for (std::size_t i = 0; i < u.dim(); ++i) {
      if (coeffs[i] == 0) continue;
      const auto row = u.basis().row(i);
      for (std::size_t c = 0; c < v.size(); ++c) v[c] = f.add(v[c], f.mul(coeffs[i], row[c]));
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Subspace> all_subspaces(const Field& field, std::size_t ambient,
                                    std::optional<std::size_t> only_dim) {
  const std::uint64_t q = field.order();
  const std::uint64_t vectors =
      checked_count(q, ambient, std::uint64_t{1} << 16, "subspace enumeration");
  std::vector<Subspace> all;
  std::vector<Subspace> level{Subspace(field, ambient)};
  std::vector<Elem> v(ambient);
  while (!level.empty()) {
    all.insert(all.end(), level.begin(), level.end());
    std::set<Subspace> next;
    for (const auto& s : level) {
      for (std::uint64_t idx = 1; idx < vectors; ++idx) {
        decode_digits(idx, q, v);
        if (s.contains(v)) continue;
        next.insert(Subspace::from_rows(vstack(s.basis(), Matrix(field, 1, ambient, v))));
      }
    }
    level.assign(next.begin(), next.end());
  }
  if (only_dim) {
    std::erase_if(all, [&](const Subspace& s) { return s.dim() != *only_dim; });
  }
  return all;
}

Subspace random_subspace(const Field& field, std::size_t ambient, std::size_t dim, Rng& rng) {
  if (dim > ambient) throw Error(ErrorKind::ParamViolation, "dimension exceeds ambient");
  if (dim == 0) return Subspace(field, ambient);
  return Subspace::from_rows(random_max_rank(dim, ambient, field, rng));
}

// --- brute-force Delta_rho ---------------------------------------------------

DeltaRhoOracle::DeltaRhoOracle(const Matrix& x, std::size_t received_rows, long long rho,
                               BruteForceCaps caps)
    : field_(x.field()), rows_(received_rows), cols_(x.cols()) {
  if (rho < 0) throw Error(ErrorKind::NegativeRho, "rho must be nonnegative");
  const std::uint64_t q = field_.order();
  const std::size_t n = x.rows();
  const std::uint64_t states = checked_count(q, rows_ * cols_, caps.max_states, "Y state space");
  const std::uint64_t transfers =
      checked_count(q, rows_ * n, caps.max_states, "transfer matrix enumeration");
  if (caps.max_r >= 0xff) throw Error(ErrorKind::SearchSpaceTooLarge, "max_r too large");

  constexpr std::uint8_t kUnreached = 0xff;
  level_.assign(states, kUnreached);

  const long long min_rank = static_cast<long long>(n) - rho;
  std::vector<std::uint64_t> frontier;
  std::vector<Elem> digits(rows_ * n);
  for (std::uint64_t a_idx = 0; a_idx < transfers; ++a_idx) {
    decode_digits(a_idx, q, digits);
    const Matrix a(field_, rows_, n, digits);
    if (min_rank > 0 && static_cast<long long>(rank(a)) < min_rank) continue;
    const std::uint64_t s = encode_digits(matmul(a, x).entries(), q);
    if (level_[s] == kUnreached) {
      level_[s] = 0;
      frontier.push_back(s);
    }
  }
  feasible_ = !frontier.empty();

  // Every outer product d z with d in F^rows, z in F^cols, both nonzero.
  std::vector<std::vector<Elem>> outer;
  const std::uint64_t dcount = checked_count(q, rows_, caps.max_states, "error column space");
  const std::uint64_t zcount = checked_count(q, cols_, caps.max_states, "error packet space");
  std::vector<Elem> d(rows_), z(cols_);
  for (std::uint64_t di = 1; di < dcount; ++di) {
    decode_digits(di, q, d);
    for (std::uint64_t zi = 1; zi < zcount; ++zi) {
      decode_digits(zi, q, z);
      std::vector<Elem> e(rows_ * cols_);
      for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) e[r * cols_ + c] = field_.mul(d[r], z[c]);
      }
      outer.push_back(std::move(e));
    }
  }

  std::vector<Elem> cur(rows_ * cols_), nxt(rows_ * cols_);
  for (std::size_t r = 1; r <= caps.max_r && !frontier.empty(); ++r) {
    std::vector<std::uint64_t> next_frontier;
    for (std::uint64_t s : frontier) {
      decode_digits(s, q, cur);
      for (const auto& e : outer) {
        for (std::size_t i = 0; i < cur.size(); ++i) nxt[i] = field_.add(cur[i], e[i]);
        const std::uint64_t t = encode_digits(nxt, q);
        if (level_[t] == kUnreached) {
          level_[t] = static_cast<std::uint8_t>(r);
          next_frontier.push_back(t);
        }
      }
    }
    frontier = std::move(next_frontier);
  }
}

std::uint64_t DeltaRhoOracle::index_of(const Matrix& y) const {
  if (y.field() != field_) throw Error(ErrorKind::FieldMismatch, "Y over a different field");
  if (y.rows() != rows_ || y.cols() != cols_) {
    throw Error(ErrorKind::DimensionMismatch, "Y shape does not match the oracle");
  }
  return encode_digits(y.entries(), field_.order());
}

std::optional<std::size_t> DeltaRhoOracle::min_r(const Matrix& y) const {
  const auto lvl = level_[index_of(y)];
  if (lvl == 0xff) return std::nullopt;
  return lvl;
}

std::size_t delta_rho_bruteforce(const Matrix& x, const Matrix& y, long long rho,
                                 BruteForceCaps caps) {
  if (x.field() != y.field()) throw Error(ErrorKind::FieldMismatch, "X and Y over different fields");
  if (x.cols() != y.cols()) throw Error(ErrorKind::DimensionMismatch, "packet lengths differ");
  const DeltaRhoOracle oracle(x, y.rows(), rho, caps);
  const auto r = oracle.min_r(y);
  if (!r) {
    throw Error(ErrorKind::Infeasible,
                oracle.feasible() ? "no decomposition with r <= " + std::to_string(caps.max_r)
                                  : "no transfer matrix satisfies the rank constraint");
  }
  return *r;
}

}  // namespace subcodes
