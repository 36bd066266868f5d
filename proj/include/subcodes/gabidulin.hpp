#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "subcodes/subspace.hpp"

namespace subcodes {

/// Type [N, l, log_q |C|, D] of a subspace code.
struct CodeType {
  std::size_t ambient = 0;      // N
  std::size_t max_dim = 0;      // l
  double log_q_size = 0.0;      // log_q |C|
  std::optional<std::size_t> min_distance;  // D, when known

  bool operator==(const CodeType&) const = default;
};

/// Lifted Gabidulin code over GF(q): extension degree m, l evaluation points,
/// message length k. Requires 1 <= k <= l <= m.
struct GabidulinParams {
  std::uint64_t q = 2;
  unsigned m = 1;
  unsigned l = 1;
  unsigned k = 1;

  void validate() const;
  std::size_t ambient() const { return l + m; }
  std::size_t min_distance() const { return l - k + 1; }
  /// [l + m, l, mk, l - k + 1].
  CodeType type() const;

  bool operator==(const GabidulinParams&) const = default;
};

/// f(x) = sum_i f_i x^(q^i) over GF(q^m); coefficient vector zero-padded to k.
struct LinearizedPoly {
  Field field;
  std::vector<Elem> coeffs;
};

FieldElement evaluate_linearized(const LinearizedPoly& f, const FieldElement& a);

/// The rank-metric encoder plus the fields it lives in.
class GabidulinEncoder {
 public:
  explicit GabidulinEncoder(GabidulinParams params, std::uint64_t cap = kDefaultFieldOrderCap);

  const GabidulinParams& params() const { return params_; }
  const Field& base_field() const { return base_; }
  const Field& ext_field() const { return ext_; }
  /// Evaluation points 1, b, ..., b^(l-1) for the polynomial-basis generator b.
  const std::vector<Elem>& points() const { return points_; }

  /// Evaluates the message polynomial at every point; GF(q^m)-linear.
  std::vector<Elem> encode(std::span<const Elem> message) const;
  /// l x m matrix over GF(q) whose row i is expand(v_i).
  Matrix expand_to_matrix(std::span<const Elem> codeword) const;

 private:
  GabidulinParams params_;
  Field base_;
  Field ext_;
  std::vector<Elem> points_;
};

/// Row space of [I_l | m]: always l-dimensional in ambient l + cols(m).
Subspace lift(const Matrix& m);

class SubspaceCode {
 public:
  SubspaceCode(Field field, std::size_t ambient);

  const Field& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t size() const { return codewords_.size(); }
  const std::vector<Subspace>& codewords() const { return codewords_; }
  const Subspace& operator[](std::size_t i) const { return codewords_[i]; }

  /// Appends unless already present; returns whether it was added.
  bool add(Subspace s);
  std::size_t max_dim() const;

  const CodeType& declared_type() const { return declared_; }
  void set_declared_type(CodeType t) { declared_ = std::move(t); }

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<Subspace> codewords_;
  std::set<Subspace> index_;
  CodeType declared_;
};

inline constexpr std::uint64_t kDefaultCodeCap = std::uint64_t{1} << 16;
inline constexpr std::uint64_t kDefaultPairBudget = 10'000'000;

/// All q^(mk) lifted codewords, messages in increasing base-q^m order.
SubspaceCode enumerate_code(const GabidulinParams& params, std::uint64_t cap = kDefaultCodeCap);

/// Minimum injection distance over distinct pairs, by exhaustive scan.
std::size_t min_injection_distance(const SubspaceCode& code,
                                   std::uint64_t pair_budget = kDefaultPairBudget);

/// Where the replacement codeword is drawn when V does not lose exactly one
/// dimension on intersecting with the hyperplane (that is, when V lies in it).
enum class PunctureFallback {
  WithinCodeword,   // random (dim V - 1)-subspace of V cap W' (= V)
  WithinHyperplane  // random (dim V - 1)-subspace of W'
};

/// Hyperplane {x : x_N = 0}.
Subspace default_hyperplane(const Field& field, std::size_t ambient);

/// Puncturing onto a hyperplane W': each V becomes V cap W' if that drops the
/// dimension by one, otherwise a random (dim V - 1)-dimensional subspace.
/// The result is written in coordinates of W''s RREF basis, so its ambient
/// is N - 1. Duplicates collapse, so |C'| < |C| is possible only when D = 1.
SubspaceCode puncture(const SubspaceCode& code, const Subspace& hyperplane, std::uint64_t seed,
                      PunctureFallback fallback = PunctureFallback::WithinCodeword);

/// Coordinates of v (which must lie in w) with respect to w's RREF basis.
std::vector<Elem> coordinates_in(const Subspace& w, std::span<const Elem> v);

/// m_i = i, l_i = floor(3i/5), k_i = floor(i/2) over GF(16).
std::vector<GabidulinParams> example_sequence(unsigned i_from = 4, unsigned i_to = 30);

/// ".code" format: header "code N=<N> q=<q> count=<c>", then each codeword's
/// basis in the matrix text format.
void write_code(std::ostream& os, const SubspaceCode& code);
SubspaceCode read_code(std::istream& is);

}  // namespace subcodes
