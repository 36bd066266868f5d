#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace subcodes {

/// Exact nonnegative integer for code sizes and bound values.
using BigCount = boost::multiprecision::cpp_int;

BigCount big_pow(std::uint64_t q, std::uint64_t e);

/// [N over l]_q: the number of l-dimensional subspaces of F_q^N.
BigCount gaussian_coefficient(std::uint64_t n, std::uint64_t l, std::uint64_t q);

/// Number of subspaces of F_q^N of dimension at most d_max.
BigCount count_subspaces_up_to(std::uint64_t n, std::uint64_t d_max, std::uint64_t q);

/// |C| <= 1 + (l - D + 1) [N - D + 1 over N - l]_q for a code of type
/// [N, l, log_q |C|, D] with 1 <= D <= l <= N/2.
BigCount singleton_bound(std::uint64_t n, std::uint64_t l, std::uint64_t d, std::uint64_t q);

/// The bound above specialised to lifted Gabidulin parameters:
/// 1 + k [m + k over m]_q.
BigCount gabidulin_bound_exact(std::uint64_t k, std::uint64_t m, std::uint64_t q);
/// 1 + 4k q^(mk).
BigCount gabidulin_bound_loose(std::uint64_t k, std::uint64_t m, std::uint64_t q);

/// [N over l]_q / q^(l(N-l)).
double lemma4_ratio(std::uint64_t n, std::uint64_t l, std::uint64_t q);

/// log_q(|C|) / (N l).
double rate(std::uint64_t n, std::uint64_t l, double log_q_size);

/// log_q n from the bit length and the leading 64 bits, without converting n
/// to a machine float.
double log_q_big(const BigCount& n, std::uint64_t q);

struct RateRow {
  unsigned i = 0;
  unsigned m = 0;
  unsigned l = 0;
  unsigned k = 0;
  unsigned n = 0;
  double rate_code = 0;
  double rate_eq_exact = 0;
  double rate_eq_loose = 0;
};

/// Rates of the GF(16) example family i = 4..30 against both bounds.
std::vector<RateRow> figure1_table();

/// CSV with header i,m,l,k,N,rate_code,rate_eq_exact,rate_eq_loose; reals
/// printed with 12 significant digits.
void write_figure1_csv(std::ostream& os, const std::vector<RateRow>& rows);
/// Scatter plot of the three rate series (diamonds, plus signs, circles).
void write_figure1_svg(std::ostream& os, const std::vector<RateRow>& rows);

}  // namespace subcodes
