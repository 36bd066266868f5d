#include "subcodes/verify.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

#include "subcodes/bounds.hpp"
#include "subcodes/channel.hpp"
#include "subcodes/error.hpp"

namespace subcodes {

namespace {

std::string params_label(const GabidulinParams& p) {
  std::ostringstream os;
  os << "(q=" << p.q << ",m=" << p.m << ",l=" << p.l << ",k=" << p.k << ")";
  return os.str();
}

template <typename T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

CheckOutcome fail(std::string detail) { return {false, std::move(detail)}; }

// All rows x cols matrices over f, in index order.
std::vector<Matrix> all_matrices(const Field& f, std::size_t rows, std::size_t cols) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < rows * cols; ++i) count *= f.order();
  std::vector<Matrix> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<Elem> data(rows * cols);
    std::uint64_t rest = idx;
    for (auto& e : data) {
      e = static_cast<Elem>(rest % f.order());
      rest /= f.order();
    }
    out.emplace_back(f, rows, cols, std::move(data));
  }
  return out;
}

CheckOutcome gaussian_ground_truth() {
  const Field f = Field::of_order(2);
  const auto subspaces = all_subspaces(f, 4);
  std::size_t dim2 = 0;
  for (const auto& s : subspaces) dim2 += s.dim() == 2;
  const BigCount g = gaussian_coefficient(4, 2, 2);
  const BigCount total = count_subspaces_up_to(4, 4, 2);
  const bool ok = g == 35 && total == 67 && BigCount(dim2) == g && BigCount(subspaces.size()) == total;
  return {ok, "[4 over 2]_2=" + str(g) + " (enumerated " + str(dim2) + "), subspaces of F_2^4=" +
                  str(total) + " (enumerated " + str(subspaces.size()) + ")"};
}

CheckOutcome gabidulin_min_distance() {
  std::size_t codes = 0;
  for (const auto& p : small_gabidulin_grid()) {
    const SubspaceCode code = enumerate_code(p);
    const std::size_t d = min_injection_distance(code);
    if (d != p.min_distance()) {
      return fail(params_label(p) + ": exhaustive d_I=" + str(d) + ", expected l-k+1=" +
                  str(p.min_distance()));
    }
    ++codes;
  }
  return {true, str(codes) + " codes, every exhaustive d_I equals l-k+1"};
}

CheckOutcome delta_rho_oracle() {
  const Field f = Field::of_order(2);
  std::uint64_t compared = 0;
  std::uint64_t infeasible = 0;
  for (std::size_t m = 1; m <= 3; ++m) {
    // Row spaces of every possible received matrix, per receiver count.
    std::map<std::size_t, std::vector<Matrix>> ys;
    std::map<std::size_t, std::vector<Subspace>> y_spaces;
    for (std::size_t rx = 1; rx <= 3; ++rx) {
      ys[rx] = all_matrices(f, rx, m);
      for (const auto& y : ys[rx]) y_spaces[rx].push_back(Subspace::from_rows(y));
    }
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const auto& x : all_matrices(f, n, m)) {
        const Subspace xs = Subspace::from_rows(x);
        for (std::size_t rx = 1; rx <= 3; ++rx) {
          for (long long rho = 0; rho <= 2; ++rho) {
            const DeltaRhoOracle oracle(x, rx, rho, BruteForceCaps{3, std::uint64_t{1} << 20});
            const bool admissible = static_cast<long long>(rx) >= static_cast<long long>(n) - rho;
            if (oracle.feasible() != admissible) {
              return fail("feasibility mismatch at n=" + str(n) + " N=" + str(rx) +
                          " rho=" + str(rho));
            }
            if (!admissible) {
              ++infeasible;
              continue;
            }
            const auto& yl = ys[rx];
            for (std::size_t i = 0; i < yl.size(); ++i) {
              const auto brute = oracle.min_r(yl[i]);
              const std::size_t closed = delta_rho(xs, y_spaces[rx][i], rho);
              if (!brute || *brute != closed) {
                return fail("mismatch: n=" + str(n) + " N=" + str(rx) + " m=" + str(m) +
                            " rho=" + str(rho) + " closed=" + str(closed) + " brute=" +
                            (brute ? str(*brute) : std::string("none")));
              }
              ++compared;
            }
          }
        }
      }
    }
  }
  return {true, str(compared) + " (X, Y, rho) instances agree; " + str(infeasible) +
                    " (X, N, rho) cells with N < n - rho correctly reported infeasible"};
}

CheckOutcome relation_identity() {
  const auto all = all_subspaces(Field::of_order(2), 4);
  if (all.size() != 67) return fail("expected 67 subspaces, got " + str(all.size()));
  std::size_t pairs = 0;
  for (const auto& u : all) {
    for (const auto& v : all) {
      const std::size_t di = injection_distance(u, v);
      const std::size_t ds = subspace_distance(u, v);
      const std::size_t gap = u.dim() > v.dim() ? u.dim() - v.dim() : v.dim() - u.dim();
      if (2 * di != ds + gap) return fail("identity broken at pair " + str(pairs));
      ++pairs;
    }
  }
  return {true, str(pairs) + " pairs satisfy 2 d_I = d_S + |dim U - dim V|"};
}

CheckOutcome duality_invariance() {
  const Field f = Field::of_order(2);
  Rng rng(mix_seed(5, 0));
  for (int i = 0; i < 500; ++i) {
    const Subspace u = random_subspace(f, 5, rng.below(6), rng);
    const Subspace v = random_subspace(f, 5, rng.below(6), rng);
    if (injection_distance(u, v) != injection_distance(dual(u), dual(v))) {
      return fail("pair " + str(i) + " breaks d_I(U,V) = d_I(U^perp, V^perp)");
    }
  }
  return {true, "500 seeded pairs in F_2^5"};
}

CheckOutcome puncturing() {
  std::vector<GabidulinParams> pool;
  for (const auto& p : small_gabidulin_grid()) {
    if (p.min_distance() >= 2) pool.push_back(p);
  }
  std::size_t fallbacks = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const GabidulinParams& p = pool[s % pool.size()];
    const SubspaceCode code = enumerate_code(p);
    Rng rng(mix_seed(6, s));
    // Alternate between the default hyperplane and seeded random ones.
    const Subspace w = s % 2 == 0 ? default_hyperplane(code.field(), code.ambient())
                                  : random_subspace(code.field(), code.ambient(),
                                                    code.ambient() - 1, rng);
    for (const auto& v : code.codewords()) fallbacks += w.contains(v);
    const SubspaceCode punctured = puncture(code, w, mix_seed(6, 100 + s));
    const std::size_t d = p.min_distance();
    const std::size_t d_after = min_injection_distance(punctured);
    if (punctured.max_dim() != p.l - 1 || punctured.size() != code.size() ||
        punctured.ambient() != code.ambient() - 1 || d_after + 1 < d) {
      return fail(params_label(p) + " seed " + str(s) + ": max dim " + str(punctured.max_dim()) +
                  ", size " + str(punctured.size()) + "/" + str(code.size()) + ", D' " +
                  str(d_after) + " vs D " + str(d));
    }
  }
  return {true, "20 seeded codes keep size, drop l by one, D' >= D-1 (" + str(fallbacks) +
                    " codewords took the random branch)"};
}

CheckOutcome singleton_consistency() {
  for (const auto& p : small_gabidulin_grid()) {
    const SubspaceCode code = enumerate_code(p);
    const BigCount size = code.size();
    const BigCount expected = big_pow(p.q, std::uint64_t{p.m} * p.k);
    const BigCount single = singleton_bound(p.ambient(), p.l, p.min_distance(), p.q);
    const BigCount exact = gabidulin_bound_exact(p.k, p.m, p.q);
    const BigCount loose = gabidulin_bound_loose(p.k, p.m, p.q);
    if (size != expected || size > single || single != exact || !(exact < loose)) {
      return fail(params_label(p) + ": |C|=" + str(size) + " singleton=" + str(single) +
                  " exact=" + str(exact) + " loose=" + str(loose));
    }
  }
  return {true, "|C| = q^(mk) <= singleton = 1 + k[m+k over m]_q < 1 + 4k q^(mk) on the grid"};
}

CheckOutcome figure1() {
  const auto rows = figure1_table();
  std::ostringstream csv;
  write_figure1_csv(csv, rows);
  std::istringstream in(csv.str());
  std::string line;
  std::getline(in, line);
  std::size_t data_lines = 0;
  while (std::getline(in, line)) data_lines += !line.empty();
  if (rows.size() != 27 || data_lines != 27) return fail("expected 27 rows, got " + str(data_lines));
  if (rows.front().n != 6 || rows[1].n != 8 || rows[2].n != 9 || rows.back().n != 48) {
    return fail("N column does not run 6, 8, 9, ..., 48");
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].n <= rows[i - 1].n) return fail("N column not increasing");
  }
  for (const auto& r : rows) {
    const BigCount code = big_pow(16, std::uint64_t{r.m} * r.k);
    const BigCount exact = gabidulin_bound_exact(r.k, r.m, 16);
    const BigCount loose = gabidulin_bound_loose(r.k, r.m, 16);
    if (!(code < exact && exact < loose)) return fail("exact ordering fails at i=" + str(r.i));
    if (!(r.rate_code < r.rate_eq_exact && r.rate_eq_exact < r.rate_eq_loose)) {
      return fail("rate ordering fails at i=" + str(r.i));
    }
  }
  const auto& last = rows.back();
  const double gap = last.rate_eq_loose - last.rate_code;
  if (std::abs(last.rate_code - 450.0 / 864.0) > 1e-9) return fail("rate_code(30) off");
  if (!(gap < 0.01)) return fail("loose gap at i=30 is " + str(gap));
  char buf[160];
  std::snprintf(buf, sizeof buf, "27 rows; i=30: rate_code=%.9f rate_eq_loose=%.9f gap=%.6f",
                last.rate_code, last.rate_eq_loose, gap);
  return {true, buf};
}

CheckOutcome correction_guarantee() {
  std::size_t cells = 0;
  std::uint64_t trials = 0;
  for (const auto& p : small_gabidulin_grid()) {
    const SubspaceCode code = enumerate_code(p);
    const auto d = static_cast<long long>(p.min_distance());
    for (long long t = 0; 2 * t < d; ++t) {
      for (long long rho = 0; 2 * t + rho < d; ++rho) {
        const std::uint64_t seed = mix_seed(9, cells);
        const TrialReport rep = correction_guarantee_trials(code, static_cast<std::size_t>(t),
                                                            rho, 500, seed);
        if (rep.failures != 0 || rep.ambiguous != 0) {
          return fail(params_label(p) + " t=" + str(t) + " rho=" + str(rho) + ": " + rep.to_json());
        }
        ++cells;
        trials += rep.trials;
      }
    }
  }
  const SubspaceCode small = enumerate_code({2, 2, 2, 1});
  const auto witness = exhaustive_adversary(small, 1, 0);
  if (!witness) return fail("no failing channel use found for d_I=2, t=1, rho=0");
  return {true, str(cells) + " cells, " + str(trials) +
                    " trials without failure; converse witnessed on (q=2,m=2,l=2,k=1) with "
                    "outcome " +
                    (witness->outcome.status == DecodeResult::Status::Ambiguous ? "ambiguous"
                                                                                 : "wrong")};
}

CheckOutcome gaussian_ratio() {
  std::size_t cases = 0;
  for (std::uint64_t q : {2, 3, 4, 16}) {
    for (std::uint64_t n = 2; n <= 24; ++n) {
      for (std::uint64_t l = 1; l < n; ++l) {
        const BigCount g = gaussian_coefficient(n, l, q);
        const BigCount scale = big_pow(q, l * (n - l));
        const double ratio = lemma4_ratio(n, l, q);
        if (!(g > scale && g < 4 * scale && ratio > 1.0 && ratio < 4.0)) {
          return fail("ratio outside (1,4) at N=" + str(n) + " l=" + str(l) + " q=" + str(q));
        }
        ++cases;
      }
    }
  }
  return {true, str(cases) + " (N, l, q) cases strictly inside (1, 4)"};
}

}  // namespace

std::vector<GabidulinParams> small_gabidulin_grid() {
  std::vector<GabidulinParams> out;
  for (unsigned m = 1; m <= 4; ++m) {
    for (unsigned l = 1; l <= m; ++l) {
      for (unsigned k = 1; k <= l; ++k) {
        if (m * k <= 8) out.push_back({2, m, l, k});
      }
    }
  }
  return out;
}

std::vector<Check> property_checks() {
  return {
      {1, "gaussian-ground-truth", 1, gaussian_ground_truth},
      {2, "gabidulin-min-distance", 60, gabidulin_min_distance},
      {3, "delta-rho-oracle", 600, delta_rho_oracle},
      {4, "relation-identity", 10, relation_identity},
      {5, "duality-invariance", 5, duality_invariance},
      {6, "puncturing", 120, puncturing},
      {7, "singleton-consistency", 10, singleton_consistency},
      {8, "figure1-reproduction", 5, figure1},
      {9, "correction-guarantee", 900, correction_guarantee},
      {10, "gaussian-ratio", 30, gaussian_ratio},
  };
}

CheckResult run_check(const Check& check) {
  CheckResult r;
  r.id = check.id;
  r.name = check.name;
  r.time_limit_seconds = check.time_limit_seconds;
  const auto start = std::chrono::steady_clock::now();
  CheckOutcome outcome;
  try {
    outcome = check.run();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.in_time = r.seconds <= check.time_limit_seconds;
  r.passed = outcome.passed && r.in_time;
  r.detail = outcome.detail;
  if (outcome.passed && !r.in_time) r.detail += " [over time limit]";
  return r;
}

std::string CheckResult::summary() const {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s %2d %s (%.2fs, limit %.0fs)", passed ? "PASS" : "FAIL", id,
                name.c_str(), seconds, time_limit_seconds);
  return std::string(buf) + ": " + detail;
}

}  // namespace subcodes
