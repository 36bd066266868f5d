#include "subcodes/gabidulin.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "subcodes/error.hpp"

namespace subcodes {

namespace {

std::string params_text(const GabidulinParams& p) {
  return "(q=" + std::to_string(p.q) + ", m=" + std::to_string(p.m) + ", l=" +
         std::to_string(p.l) + ", k=" + std::to_string(p.k) + ")";
}

// q^e, or nullopt once it passes cap.
std::optional<std::uint64_t> power_within(std::uint64_t q, std::uint64_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > cap / q) return std::nullopt;
    r *= q;
  }
  return r;
}

std::vector<std::size_t> pivot_columns(const Matrix& rref_basis) {
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < rref_basis.rows(); ++r) {
    const auto row = rref_basis.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] != 0) {
        pivots.push_back(c);
        break;
      }
    }
  }
  return pivots;
}

// Uniform vector of `space`: a random coefficient combination of its basis.
std::vector<Elem> random_member(const Subspace& space, Rng& rng) {
  const Field& f = space.field();
  std::vector<Elem> v(space.ambient(), 0);
  for (std::size_t i = 0; i < space.dim(); ++i) {
    const auto c = static_cast<Elem>(rng.below(f.order()));
    if (c == 0) continue;
    const auto row = space.basis().row(i);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.add(v[j], f.mul(c, row[j]));
  }
  return v;
}

// Draws `dim` independent uniform vectors of `space`, retrying whole draws
// until they are independent.
Subspace random_subspace_of(const Subspace& space, std::size_t dim, Rng& rng) {
  const Field& f = space.field();
  if (dim == 0) return Subspace(f, space.ambient());
  while (true) {
    Matrix m(f, dim, space.ambient());
    for (std::size_t r = 0; r < dim; ++r) {
      const auto v = random_member(space, rng);
      std::copy(v.begin(), v.end(), m.row(r).begin());
    }
    if (rank(m) == dim) return Subspace::from_rows(m);
  }
}

}  // namespace

// --- parameters --------------------------------------------------------------

void GabidulinParams::validate() const {
  if (m == 0 || l == 0 || k == 0) {
    throw Error(ErrorKind::ParamViolation, "m, l, k must be positive " + params_text(*this));
  }
  if (l > m) throw Error(ErrorKind::ParamViolation, "need l <= m " + params_text(*this));
  if (k > l) throw Error(ErrorKind::ParamViolation, "need k <= l " + params_text(*this));
  if (q < 2) throw Error(ErrorKind::ParamViolation, "q must be a prime power");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint64_t rest = q;
  while (rest % p == 0) rest /= p;
  if (rest != 1) throw Error(ErrorKind::NonPrimeCharacteristic, "q = " + std::to_string(q) + " is not a prime power");
}

CodeType GabidulinParams::type() const {
  validate();
  return {ambient(), l, static_cast<double>(m) * k, min_distance()};
}

// --- encoder -----------------------------------------------------------------

FieldElement evaluate_linearized(const LinearizedPoly& f, const FieldElement& a) {
  if (a.field() != f.field) throw Error(ErrorKind::FieldMismatch, "point outside the polynomial's field");
  const Field& F = f.field;
  Elem acc = 0;
  Elem power = a.value();  // a^(q^i)
  for (Elem c : f.coeffs) {
    acc = F.add(acc, F.mul(c, power));
    power = F.frobenius(power);
  }
  return {F, acc};
}

GabidulinEncoder::GabidulinEncoder(GabidulinParams params, std::uint64_t cap)
    : params_(params),
      base_(Field::of_order((params.validate(), params.q), cap)),
      ext_(Field::extension(base_, params.m, std::nullopt, cap)) {
  for (unsigned i = 0; i < params_.l; ++i) {
    std::vector<Elem> unit(params_.m, 0);
    unit[i] = 1;
    points_.push_back(ext_.compress(unit));
  }
}

std::vector<Elem> GabidulinEncoder::encode(std::span<const Elem> message) const {
  if (message.size() != params_.k) {
    throw Error(ErrorKind::ParamViolation, "message length " + std::to_string(message.size()) +
                                               " but k = " + std::to_string(params_.k));
  }
  const LinearizedPoly f{ext_, std::vector<Elem>(message.begin(), message.end())};
  for (Elem c : f.coeffs) {
    if (!ext_.contains(c)) throw Error(ErrorKind::FieldMismatch, "message symbol outside GF(q^m)");
  }
  std::vector<Elem> out;
  out.reserve(points_.size());
  for (Elem a : points_) out.push_back(evaluate_linearized(f, ext_.element(a)).value());
  return out;
}

Matrix GabidulinEncoder::expand_to_matrix(std::span<const Elem> codeword) const {
  Matrix m(base_, codeword.size(), params_.m);
  for (std::size_t i = 0; i < codeword.size(); ++i) {
    const auto coords = ext_.expand(codeword[i]);
    std::copy(coords.begin(), coords.end(), m.row(i).begin());
  }
  return m;
}

Subspace lift(const Matrix& m) {
  return Subspace::from_rows(hstack(Matrix::identity(m.field(), m.rows()), m));
}

// --- codes -------------------------------------------------------------------

SubspaceCode::SubspaceCode(Field field, std::size_t ambient)
    : field_(std::move(field)), ambient_(ambient) {
  declared_.ambient = ambient;
}

bool SubspaceCode::add(Subspace s) {
  if (s.ambient() != ambient_) throw Error(ErrorKind::AmbientMismatch, "codeword ambient");
  if (s.field() != field_) throw Error(ErrorKind::FieldMismatch, "codeword field");
  if (!index_.insert(s).second) return false;
  codewords_.push_back(std::move(s));
  return true;
}

std::size_t SubspaceCode::max_dim() const {
  std::size_t l = 0;
  for (const auto& c : codewords_) l = std::max(l, c.dim());
  return l;
}

SubspaceCode enumerate_code(const GabidulinParams& params, std::uint64_t cap) {
  params.validate();
  const auto size = power_within(params.q, std::uint64_t{params.m} * params.k, cap);
  if (!size) {
    throw Error(ErrorKind::CodeTooLarge, "q^(mk) exceeds the enumeration cap of " +
                                             std::to_string(cap) + " " + params_text(params));
  }
  const GabidulinEncoder enc(params);
  const std::uint64_t symbols = enc.ext_field().order();
  SubspaceCode code(enc.base_field(), params.ambient());
  std::vector<Elem> message(params.k);
  for (std::uint64_t idx = 0; idx < *size; ++idx) {
    std::uint64_t rest = idx;
    for (auto& s : message) {
      s = static_cast<Elem>(rest % symbols);
      rest /= symbols;
    }
    code.add(lift(enc.expand_to_matrix(enc.encode(message))));
  }
  code.set_declared_type(params.type());
  return code;
}

std::size_t min_injection_distance(const SubspaceCode& code, std::uint64_t pair_budget) {
  const std::uint64_t n = code.size();
  if (n < 2) throw Error(ErrorKind::ParamViolation, "need at least two codewords");
  const std::uint64_t pairs = n * (n - 1) / 2;
  if (pairs > pair_budget) {
    throw Error(ErrorKind::BudgetExceeded, std::to_string(pairs) + " pairs exceed the budget of " +
                                               std::to_string(pair_budget));
  }
  std::size_t best = SIZE_MAX;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      best = std::min(best, injection_distance(code[i], code[j]));
      if (best == 1) return best;  // distinct subspaces are never closer
    }
  }
  return best;
}

Subspace default_hyperplane(const Field& field, std::size_t ambient) {
  if (ambient == 0) throw Error(ErrorKind::ParamViolation, "ambient must be positive");
  Matrix m(field, ambient - 1, ambient);
  for (std::size_t i = 0; i + 1 < ambient; ++i) m.set(i, i, 1);
  return Subspace::from_rows(m);
}

std::vector<Elem> coordinates_in(const Subspace& w, std::span<const Elem> v) {
  if (!w.contains(v)) throw Error(ErrorKind::ParamViolation, "vector is not in the subspace");
  std::vector<Elem> out;
  for (auto c : pivot_columns(w.basis())) out.push_back(v[c]);
  return out;
}

SubspaceCode puncture(const SubspaceCode& code, const Subspace& hyperplane, std::uint64_t seed,
                      PunctureFallback fallback) {
  const std::size_t n = code.ambient();
  if (hyperplane.ambient() != n) {
    throw Error(ErrorKind::AmbientMismatch, "hyperplane ambient " +
                                                std::to_string(hyperplane.ambient()) +
                                                " vs code ambient " + std::to_string(n));
  }
  if (hyperplane.field() != code.field()) throw Error(ErrorKind::FieldMismatch, "hyperplane field");
  if (n == 0 || hyperplane.dim() != n - 1) {
    throw Error(ErrorKind::ParamViolation, "puncturing needs a hyperplane of dimension N - 1");
  }
  for (const auto& v : code.codewords()) {
    if (v.dim() == 0) throw Error(ErrorKind::ZeroDimCodeword, "cannot puncture the zero subspace");
  }

  Rng rng(seed);
  const auto pivots = pivot_columns(hyperplane.basis());
  SubspaceCode out(code.field(), n - 1);
  for (const auto& v : code.codewords()) {
    Subspace reduced = intersection(v, hyperplane);
    if (reduced.dim() != v.dim() - 1) {
      const Subspace& source = fallback == PunctureFallback::WithinCodeword ? reduced : hyperplane;
      reduced = random_subspace_of(source, v.dim() - 1, rng);
    }
    Matrix coords(code.field(), reduced.dim(), n - 1);
    for (std::size_t r = 0; r < reduced.dim(); ++r) {
      const auto row = reduced.basis().row(r);
      for (std::size_t j = 0; j < pivots.size(); ++j) coords.set(r, j, row[pivots[j]]);
    }
    out.add(Subspace::from_rows(coords));
  }
  out.set_declared_type({n - 1, out.max_dim(),
                         std::log(static_cast<double>(out.size())) /
                             std::log(static_cast<double>(code.field().order())),
                         std::nullopt});
  return out;
}

std::vector<GabidulinParams> example_sequence(unsigned i_from, unsigned i_to) {
  if (i_from < 4 || i_from > i_to) {
    throw Error(ErrorKind::ParamViolation, "need 4 <= i_from <= i_to");
  }
  std::vector<GabidulinParams> out;
  for (unsigned i = i_from; i <= i_to; ++i) out.push_back({16, i, 3 * i / 5, i / 2});
  return out;
}

// --- .code files ---------------------------------------------------------------

void write_code(std::ostream& os, const SubspaceCode& code) {
  os << "code N=" << code.ambient() << " q=" << code.field().order() << " count=" << code.size()
     << '\n';
  for (const auto& c : code.codewords()) write_matrix(os, c.basis());
}

SubspaceCode read_code(std::istream& is) {
  std::string header;
  while (header.find_first_not_of(" \t\r") == std::string::npos) {
    if (!std::getline(is, header)) throw Error(ErrorKind::ParseError, "missing code header");
  }
  std::istringstream hs(header);
  std::string word;
  hs >> word;
  if (word != "code") throw Error(ErrorKind::ParseError, "code file must start with 'code'");
  std::optional<std::uint64_t> ambient, q, count;
  std::string tok;
  while (hs >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "bad header token '" + tok + "'");
    std::uint64_t value = 0;
    try {
      value = std::stoull(tok.substr(eq + 1));
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, "bad header value '" + tok + "'");
    }
    const std::string key = tok.substr(0, eq);
    if (key == "N") {
      ambient = value;
    } else if (key == "q") {
      q = value;
    } else if (key == "count") {
      count = value;
    } else {
      throw Error(ErrorKind::ParseError, "unknown header key '" + key + "'");
    }
  }
  if (!ambient || !q || !count) throw Error(ErrorKind::ParseError, "code header needs N, q, count");

  std::optional<SubspaceCode> code;
  for (std::uint64_t i = 0; i < *count; ++i) {
    const Matrix m = read_matrix(is);
    if (m.field().order() != *q) throw Error(ErrorKind::ParseError, "codeword field order differs from q");
    if (m.cols() != *ambient) throw Error(ErrorKind::ParseError, "codeword width differs from N");
    if (!code) code.emplace(m.field(), *ambient);
    if (!code->add(Subspace::from_rows(m))) {
      throw Error(ErrorKind::ParseError, "duplicate codeword " + std::to_string(i));
    }
  }
  if (!code) code.emplace(Field::of_order(*q), *ambient);
  code->set_declared_type({*ambient, code->max_dim(),
                           code->size() ? std::log(static_cast<double>(code->size())) /
                                              std::log(static_cast<double>(*q))
                                        : 0.0,
                           std::nullopt});
  return *code;
}

}  // namespace subcodes
