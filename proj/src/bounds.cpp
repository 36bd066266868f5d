#include "subcodes/bounds.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "subcodes/error.hpp"
#include "subcodes/gabidulin.hpp"

namespace subcodes {

namespace mp = boost::multiprecision;

namespace {

void require_q(std::uint64_t q) {
  if (q < 2) throw Error(ErrorKind::ParamViolation, "q must be at least 2");
}

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

BigCount big_pow(std::uint64_t q, std::uint64_t e) {
  return mp::pow(BigCount(q), static_cast<unsigned>(e));
}

BigCount gaussian_coefficient(std::uint64_t n, std::uint64_t l, std::uint64_t q) {
  require_q(q);
  if (l > n) {
    throw Error(ErrorKind::ParamViolation,
                "Gaussian coefficient needs l <= N (l=" + std::to_string(l) + ", N=" +
                    std::to_string(n) + ")");
  }
  BigCount num = 1;
  BigCount den = 1;
  for (std::uint64_t i = 0; i < l; ++i) {
    num *= big_pow(q, n - i) - 1;
    den *= big_pow(q, l - i) - 1;
  }
  BigCount quotient, remainder;
  mp::divide_qr(num, den, quotient, remainder);
  if (remainder != 0) throw Error(ErrorKind::ParamViolation, "non-integral Gaussian coefficient");
  return quotient;
}

BigCount count_subspaces_up_to(std::uint64_t n, std::uint64_t d_max, std::uint64_t q) {
  if (d_max > n) throw Error(ErrorKind::ParamViolation, "d_max must not exceed N");
  BigCount total = 0;
  for (std::uint64_t i = 0; i <= d_max; ++i) total += gaussian_coefficient(n, i, q);
  return total;
}

BigCount singleton_bound(std::uint64_t n, std::uint64_t l, std::uint64_t d, std::uint64_t q) {
  require_q(q);
  if (2 * l > n) {
    throw Error(ErrorKind::ParamViolation,
                "l > N/2: the Gaussian coefficient is symmetric in l with its maximum at N/2, "
                "so the bound would be trivial");
  }
  if (d < 1 || d > l) {
    throw Error(ErrorKind::ParamViolation,
                "need 1 <= D <= l (D=" + std::to_string(d) + ", l=" + std::to_string(l) + ")");
  }
  return 1 + BigCount(l - d + 1) * gaussian_coefficient(n - d + 1, n - l, q);
}

BigCount gabidulin_bound_exact(std::uint64_t k, std::uint64_t m, std::uint64_t q) {
  require_q(q);
  if (k < 1 || m < 1) throw Error(ErrorKind::ParamViolation, "need k, m >= 1");
  return 1 + BigCount(k) * gaussian_coefficient(m + k, m, q);
}

BigCount gabidulin_bound_loose(std::uint64_t k, std::uint64_t m, std::uint64_t q) {
  require_q(q);
  if (k < 1 || m < 1) throw Error(ErrorKind::ParamViolation, "need k, m >= 1");
  return 1 + 4 * BigCount(k) * big_pow(q, m * k);
}

double lemma4_ratio(std::uint64_t n, std::uint64_t l, std::uint64_t q) {
  using Real = mp::cpp_bin_float_50;
  const BigCount g = gaussian_coefficient(n, l, q);
  const BigCount scale = big_pow(q, l * (n - l));
  return static_cast<double>(Real(g) / Real(scale));
}

double rate(std::uint64_t n, std::uint64_t l, double log_q_size) {
  if (n < 1 || l < 1) throw Error(ErrorKind::ParamViolation, "rate needs N, l >= 1");
  return log_q_size / (static_cast<double>(n) * static_cast<double>(l));
}

double log_q_big(const BigCount& n, std::uint64_t q) {
  require_q(q);
  if (n < 1) throw Error(ErrorKind::ParamViolation, "log of a value below 1");
  const unsigned top_bit = mp::msb(n);
  long double log2_value;
  if (top_bit < 64) {
    log2_value = std::log2(static_cast<long double>(n.convert_to<std::uint64_t>()));
  } else {
    const unsigned shift = top_bit - 63;
    const auto leading = static_cast<std::uint64_t>(n >> shift);
    log2_value = static_cast<long double>(shift) + std::log2(static_cast<long double>(leading));
  }
  return static_cast<double>(log2_value / std::log2(static_cast<long double>(q)));
}

std::vector<RateRow> figure1_table() {
  std::vector<RateRow> rows;
  for (const auto& p : example_sequence(4, 30)) {
    RateRow r;
    r.i = p.m;
    r.m = p.m;
    r.l = p.l;
    r.k = p.k;
    r.n = p.l + p.m;
    const double nl = static_cast<double>(r.n) * r.l;
    r.rate_code = static_cast<double>(p.m * p.k) / nl;
    r.rate_eq_exact = log_q_big(gabidulin_bound_exact(p.k, p.m, p.q), p.q) / nl;
    r.rate_eq_loose = log_q_big(gabidulin_bound_loose(p.k, p.m, p.q), p.q) / nl;
    rows.push_back(r);
  }
  return rows;
}

void write_figure1_csv(std::ostream& os, const std::vector<RateRow>& rows) {
  os << "i,m,l,k,N,rate_code,rate_eq_exact,rate_eq_loose\n";
  for (const auto& r : rows) {
    os << r.i << ',' << r.m << ',' << r.l << ',' << r.k << ',' << r.n << ','
       << fmt12(r.rate_code) << ',' << fmt12(r.rate_eq_exact) << ',' << fmt12(r.rate_eq_loose)
       << '\n';
  }
}

void write_figure1_svg(std::ostream& os, const std::vector<RateRow>& rows) {
  constexpr double width = 640, height = 420;
  constexpr double left = 60, right = 20, top = 20, bottom = 50;
  double x_min = 0, x_max = 1, y_min = 0, y_max = 1;
  if (!rows.empty()) {
    x_min = rows.front().n;
    x_max = rows.front().n;
    y_min = rows.front().rate_code;
    y_max = rows.front().rate_eq_loose;
    for (const auto& r : rows) {
      x_min = std::min<double>(x_min, r.n);
      x_max = std::max<double>(x_max, r.n);
      y_min = std::min({y_min, r.rate_code, r.rate_eq_exact, r.rate_eq_loose});
      y_max = std::max({y_max, r.rate_code, r.rate_eq_exact, r.rate_eq_loose});
    }
  }
  if (x_max == x_min) x_max = x_min + 1;
  const double pad = (y_max - y_min) * 0.05 + 1e-9;
  y_min -= pad;
  y_max += pad;
  auto sx = [&](double x) { return left + (x - x_min) / (x_max - x_min) * (width - left - right); };
  auto sy = [&](double y) {
    return height - bottom - (y - y_min) / (y_max - y_min) * (height - top - bottom);
  };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<g stroke=\"black\" stroke-width=\"1\">\n";
  os << "<line x1=\"" << left << "\" y1=\"" << height - bottom << "\" x2=\"" << width - right
     << "\" y2=\"" << height - bottom << "\"/>\n";
  os << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
     << height - bottom << "\"/>\n";
  os << "</g>\n<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int t = 0; t <= 5; ++t) {
    const double y = y_min + (y_max - y_min) * t / 5.0;
    os << "<text x=\"" << left - 6 << "\" y=\"" << sy(y) + 4 << "\" text-anchor=\"end\">"
       << fmt12(std::round(y * 1000) / 1000) << "</text>\n";
  }
  for (const auto& r : rows) {
    if (r.n % 6 != 0) continue;
    os << "<text x=\"" << sx(r.n) << "\" y=\"" << height - bottom + 16
       << "\" text-anchor=\"middle\">" << r.n << "</text>\n";
  }
  os << "<text x=\"" << (left + width - right) / 2 << "\" y=\"" << height - 10
     << "\" text-anchor=\"middle\">N</text>\n";
  os << "<text x=\"14\" y=\"" << (top + height - bottom) / 2
     << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 " << (top + height - bottom) / 2
     << ")\">rate</text>\n</g>\n";

  os << "<g fill=\"none\" stroke=\"black\" stroke-width=\"1.2\">\n";
  for (const auto& r : rows) {
    const double x = sx(r.n);
    const double yc = sy(r.rate_code);
    const double ye = sy(r.rate_eq_exact);
    const double yl = sy(r.rate_eq_loose);
    os << "<polygon points=\"" << x << ',' << yc - 4 << ' ' << x + 4 << ',' << yc << ' ' << x
       << ',' << yc + 4 << ' ' << x - 4 << ',' << yc << "\"/>\n";
    os << "<path d=\"M" << x - 4 << ' ' << ye << "H" << x + 4 << "M" << x << ' ' << ye - 4 << "V"
       << ye + 4 << "\"/>\n";
    os << "<circle cx=\"" << x << "\" cy=\"" << yl << "\" r=\"3.5\"/>\n";
  }
  os << "</g>\n</svg>\n";
}

}  // namespace subcodes
