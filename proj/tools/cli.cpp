#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "subcodes/bounds.hpp"
#include "subcodes/channel.hpp"
#include "subcodes/error.hpp"
#include "subcodes/gabidulin.hpp"
#include "subcodes/verify.hpp"

namespace subcodes::cli {

namespace {

struct Config {
  std::string field;
  std::uint64_t seed = 0;
  std::string output;
  std::string format;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SUBSPACE_CODEC_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, "SUBSPACE_CODEC_SEED is not an integer");
    }
  }
  return 0;
}

Matrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return read_matrix(in);
}

SubspaceCode load_code(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return read_code(in);
}

// Writes `text` to `path` if given, otherwise to `out`.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorKind::ParseError, "cannot write " + path);
  file << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subspace codes under the injection distance", "subspace-codec"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  try {
    cfg.seed = default_seed();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  app.add_option("--seed", cfg.seed, "seed (default $SUBSPACE_CODEC_SEED or 0)");
  app.add_option("--output,-o", cfg.output, "write the result to this file");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "json", "text"}));
  app.add_option("--field", cfg.field, "expected field of matrix inputs, e.g. gf(2)");

  // distance
  auto* distance = app.add_subcommand("distance", "distance between two row spaces");
  std::string metric, left_path, right_path;
  long long rho = 0;
  distance->add_option("--metric", metric)->required()->check(CLI::IsMember({"ds", "di", "delta"}));
  distance->add_option("--rho", rho);
  distance->add_option("--left", left_path)->required();
  distance->add_option("--right", right_path)->required();

  // bounds
  auto* bounds = app.add_subcommand("bounds", "exact upper bounds on code size");
  bounds->require_subcommand(1);
  auto* singleton = bounds->add_subcommand("singleton", "1 + (l-D+1)[N-D+1 over N-l]_q");
  std::uint64_t bn = 0, bl = 0, bd = 0, bq = 0, bk = 0, bm = 0;
  singleton->add_option("--N", bn)->required();
  singleton->add_option("--l", bl)->required();
  singleton->add_option("--D", bd)->required();
  singleton->add_option("--q", bq)->required();
  auto* gab_bound = bounds->add_subcommand("gabidulin", "1 + k[m+k over m]_q, or 1 + 4k q^(mk)");
  bool loose = false;
  gab_bound->add_option("--k", bk)->required();
  gab_bound->add_option("--m", bm)->required();
  gab_bound->add_option("--q", bq)->required();
  gab_bound->add_flag("--loose", loose);

  // gabidulin
  auto* gabidulin = app.add_subcommand("gabidulin", "lifted Gabidulin code parameters and codewords");
  GabidulinParams gp;
  std::string enumerate_path;
  bool want_distance = false;
  gabidulin->add_option("--q", gp.q)->required();
  gabidulin->add_option("--m", gp.m)->required();
  gabidulin->add_option("--l", gp.l)->required();
  gabidulin->add_option("--k", gp.k)->required();
  gabidulin->add_option("--enumerate", enumerate_path, "write the code to this .code file");
  gabidulin->add_flag("--min-distance", want_distance, "measure d_I exhaustively");

  // puncture
  auto* punct = app.add_subcommand("puncture", "puncture a code onto a hyperplane");
  std::string code_path, hyperplane_path;
  bool within_hyperplane = false;
  punct->add_option("--in", code_path)->required();
  punct->add_option("--hyperplane", hyperplane_path, "matrix whose row space is W' (default x_N = 0)");
  punct->add_flag("--sample-in-hyperplane", within_hyperplane,
                  "draw the random replacement from W' instead of from the codeword");

  // figure1
  auto* fig = app.add_subcommand("figure1", "rates of the GF(16) example family against the bounds");
  std::string csv_path, svg_path;
  fig->add_option("--csv", csv_path);
  fig->add_option("--svg", svg_path);

  // simulate
  auto* sim = app.add_subcommand("simulate", "random channel trials with minimum-distance decoding");
  GabidulinParams sp;
  std::size_t t = 0;
  long long sim_rho = 0;
  std::uint64_t trials = 1000;
  std::optional<std::size_t> receivers;
  bool adversary = false;
  sim->add_option("--q", sp.q)->required();
  sim->add_option("--m", sp.m)->required();
  sim->add_option("--l", sp.l)->required();
  sim->add_option("--k", sp.k)->required();
  sim->add_option("--t", t)->required();
  sim->add_option("--rho", sim_rho)->required();
  sim->add_option("--trials", trials);
  sim->add_option("--receivers", receivers, "rows of the transfer matrix (default l)");
  sim->add_flag("--exhaustive-adversary", adversary);

  // verify
  auto* verify = app.add_subcommand("verify", "run the exhaustive property suite");
  std::vector<int> only;
  verify->add_option("--only", only, "check ids to run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return 2;
  }

  try {
    std::ostringstream result;
    if (*distance) {
      const Matrix left = load_matrix(left_path);
      const Matrix right = load_matrix(right_path);
      if (!cfg.field.empty()) {
        const Field expected = Field::parse(cfg.field);
        if (left.field() != expected || right.field() != expected) {
          throw Error(ErrorKind::FieldMismatch, "inputs are not over " + cfg.field);
        }
      }
      const Subspace u = Subspace::from_rows(left);
      const Subspace v = Subspace::from_rows(right);
      std::size_t d = 0;
      if (metric == "ds") {
        d = subspace_distance(u, v);
      } else if (metric == "di") {
        d = injection_distance(u, v);
      } else {
        d = delta_rho(u, v, rho);
      }
      result << d << '\n';
    } else if (*bounds) {
      if (*singleton) {
        result << singleton_bound(bn, bl, bd, bq) << '\n';
      } else {
        result << (loose ? gabidulin_bound_loose(bk, bm, bq) : gabidulin_bound_exact(bk, bm, bq))
               << '\n';
      }
    } else if (*gabidulin) {
      const CodeType type = gp.type();
      result << "type=[" << type.ambient << "," << type.max_dim << "," << gp.m * gp.k << ","
             << *type.min_distance << "]\n";
      result << "size=" << big_pow(gp.q, std::uint64_t{gp.m} * gp.k) << '\n';
      if (!enumerate_path.empty() || want_distance) {
        const SubspaceCode code = enumerate_code(gp);
        if (!enumerate_path.empty()) {
          std::ostringstream text;
          write_code(text, code);
          emit(text.str(), enumerate_path, out);
        }
        if (want_distance) result << "min_distance=" << min_injection_distance(code) << '\n';
      }
    } else if (*punct) {
      const SubspaceCode code = load_code(code_path);
      const Subspace w = hyperplane_path.empty()
                             ? default_hyperplane(code.field(), code.ambient())
                             : Subspace::from_rows(load_matrix(hyperplane_path));
      write_code(result, puncture(code, w, cfg.seed,
                                  within_hyperplane ? PunctureFallback::WithinHyperplane
                                                    : PunctureFallback::WithinCodeword));
    } else if (*fig) {
      const auto rows = figure1_table();
      std::ostringstream csv;
      if (cfg.format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
          arr.push_back({{"i", r.i}, {"m", r.m}, {"l", r.l}, {"k", r.k}, {"N", r.n},
                         {"rate_code", r.rate_code}, {"rate_eq_exact", r.rate_eq_exact},
                         {"rate_eq_loose", r.rate_eq_loose}});
        }
        csv << arr.dump(2) << '\n';
      } else {
        write_figure1_csv(csv, rows);
      }
      if (!csv_path.empty()) emit(csv.str(), csv_path, out);
      if (!svg_path.empty()) {
        std::ostringstream svg;
        write_figure1_svg(svg, rows);
        emit(svg.str(), svg_path, out);
      }
      if (csv_path.empty() && svg_path.empty()) result << csv.str();
    } else if (*sim) {
      TrialOptions opts;
      opts.received_rows = receivers;
      const SubspaceCode code = enumerate_code(sp, opts.code_cap);
      const TrialReport rep = correction_guarantee_trials(code, t, sim_rho, trials, cfg.seed, opts);
      nlohmann::ordered_json j = nlohmann::ordered_json::parse(rep.to_json());
      if (adversary) {
        const auto witness = exhaustive_adversary(code, t, sim_rho, receivers);
        j["adversary_failure_found"] = witness.has_value();
      }
      if (cfg.format == "text") {
        for (const auto& [key, value] : j.items()) result << key << '=' << value.dump() << '\n';
      } else {
        result << j.dump() << '\n';
      }
    } else if (*verify) {
      bool all_passed = true;
      for (const auto& check : property_checks()) {
        if (!only.empty() && std::find(only.begin(), only.end(), check.id) == only.end()) continue;
        const CheckResult r = run_check(check);
        all_passed = all_passed && r.passed;
        out << r.summary() << std::endl;
      }
      return all_passed ? 0 : 1;
    }
    emit(result.str(), cfg.output, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace subcodes::cli
