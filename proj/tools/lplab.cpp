// Command-line front end: sequence constructions, square-function evaluation,
// and the scaling-law scans. Each command writes <outdir>/<command>.csv and
// <outdir>/<command>.summary.json (plus optional gnuplot sidecars).
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lplab/experiments.hpp"
#include "lplab/io.hpp"
#include "lplab/kernels.hpp"
#include "lplab/norms.hpp"
#include "lplab/sequences.hpp"
#include "lplab/square_function.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace lplab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

struct GlobalOpts {
  std::string outdir = ".";
  std::uint64_t seed = defaults::base_seed;
  int jobs = 0;
  bool dry_run = false;
  bool plot = false;
};

std::string out_path(const GlobalOpts& g, const std::string& stem, const std::string& ext) {
  return (std::filesystem::path(g.outdir) / (stem + ext)).string();
}

void write_plot_sidecar(const GlobalOpts& g, const std::string& command,
                        const std::string& xlabel, const std::string& ylabel) {
  if (!g.plot) return;
  std::ofstream out(out_path(g, command, ".plot"));
  out << "# gnuplot script; run: gnuplot " << command << ".plot\n"
      << "set datafile separator ','\n"
      << "set logscale xy\n"
      << "set xlabel '" << xlabel << "'\n"
      << "set ylabel '" << ylabel << "'\n"
      << "set key autotitle columnhead\n"
      << "plot '" << command << ".csv' using '" << xlabel << "':'" << ylabel
      << "' with points pt 7\n";
}

// Writes the record CSV + fit summary; returns the exit code.
int emit(const GlobalOpts& g, const ScanResult& scan, const std::string& command) {
  if (!all_finite(scan.records)) {
    std::fprintf(stderr, "error: non-finite measured value in %s\n", command.c_str());
    return kExitNumerical;
  }
  write_records_csv(out_path(g, command, ".csv"), scan.records);
  write_scan_summary(out_path(g, command, ".summary.json"), scan);
  for (const auto& note : scan.notes) std::printf("note: %s\n", note.c_str());
  for (const auto& [name, fit] : scan.fits)
    std::printf("fit %s: slope=%.6f intercept=%.6f r2=%.6f n=%d\n", name.c_str(), fit.slope,
                fit.intercept, fit.r_squared, fit.points_used);
  std::printf("wrote %s and %s\n", out_path(g, command, ".csv").c_str(),
              out_path(g, command, ".summary.json").c_str());
  return kExitOk;
}

ScanResult sequence_report(const std::string& name, const LacunarySequence& seq) {
  ScanResult res;
  res.name = name;
  SequenceStats st = stats(seq);
  for (std::size_t j = 0; j < seq.size(); ++j) {
    ExperimentRecord rec;
    rec.experiment = name;
    rec.params["N"] = static_cast<double>(j);
    rec.measured["term"] = static_cast<double>(seq.terms[j]);
    res.records.push_back(rec);
  }
  res.notes.push_back("rho=" + format_double(st.rho) + " sigma=" + std::to_string(st.sigma) +
                      " num_terms=" + std::to_string(st.num_terms));
  return res;
}

TrigPoly parse_input(const std::string& spec, std::uint64_t base_seed) {
  // forms: fN:<N>, fM:<M>, random:<deg>[:<seed>], dirichlet:<lo>:<len>
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t c = spec.find(':', pos);
    if (c == std::string::npos) c = spec.size();
    parts.push_back(spec.substr(pos, c - pos));
    pos = c + 1;
  }
  auto want = [&](std::size_t n) {
    if (parts.size() != n)
      throw CLI::ValidationError("--input", "malformed input spec '" + spec + "'");
  };
  if (parts[0] == "fN" || parts[0] == "fM") {
    want(2);
    return extremal_fN(std::stoll(parts[1]));
  }
  if (parts[0] == "random") {
    if (parts.size() == 2) return random_analytic(std::stoll(parts[1]), base_seed);
    want(3);
    return random_analytic(std::stoll(parts[1]), std::stoull(parts[2]));
  }
  if (parts[0] == "dirichlet") {
    want(3);
    return dirichlet_block(std::stoll(parts[1]), std::stoll(parts[2]));
  }
  throw CLI::ValidationError("--input", "unknown input family '" + parts[0] + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lacunary Littlewood-Paley square-function lab"};
  app.require_subcommand(1);
  app.set_config("--config", "", "config file (TOML/INI keys mirror flag names)");

  GlobalOpts g;
  app.add_option("--outdir", g.outdir, "output directory")->capture_default_str();
  app.add_option("--seed", g.seed, "base seed (env LP_LAB_SEED takes precedence)")
      ->capture_default_str();
  app.add_option("--jobs", g.jobs, "worker threads (default: logical cores)");
  app.add_flag("--dry-run", g.dry_run, "validate and print the task list, compute nothing");
  app.add_flag("--plot", g.plot, "also write a gnuplot sidecar per command");

  // ---- construct
  auto* c_construct = app.add_subcommand("construct", "near-ratio sequence from the geometric rule");
  double construct_lambda = 1.2;
  long long construct_count = 12;
  c_construct->add_option("--lambda", construct_lambda, "target ratio, lambda^3 < 2")->required();
  c_construct->add_option("--count", construct_count, "number of terms")->capture_default_str();

  // ---- refine
  auto* c_refine = app.add_subcommand("refine", "dyadic-plus-split refinement of a sequence");
  std::string refine_seq_file;
  c_refine->add_option("--seq-file", refine_seq_file, "JSON array of terms")->required();

  // ---- sigma-example
  auto* c_sigma_ex = app.add_subcommand("sigma-example", "sigma-block lower-bound sequence");
  long long se_sigma = 4, se_M = 4096;
  c_sigma_ex->add_option("--sigma", se_sigma)->required();
  c_sigma_ex->add_option("--M", se_M, "power of two")->required();

  // ---- square
  auto* c_square = app.add_subcommand("square", "evaluate S(f) on a grid");
  std::string sq_seq_file, sq_input = "fN:256";
  double sq_p = 2.0;
  std::size_t sq_grid = 0;
  c_square->add_option("--seq-file", sq_seq_file)->required();
  c_square->add_option("--input", sq_input, "fN:<N> | fM:<M> | random:<deg>[:<seed>] | dirichlet:<lo>:<len>")
      ->capture_default_str();
  c_square->add_option("--p", sq_p, "norm exponent reported in the summary")->capture_default_str();
  c_square->add_option("--grid", sq_grid, "grid size (0 = default oversampling 8)");

  // ---- square2d
  auto* c_square2d = app.add_subcommand("square2d", "two-parameter square function on a product grid");
  std::string s2_seq_file, s2_seq_file2, s2_input = "fN:64";
  c_square2d->add_option("--seq-file", s2_seq_file)->required();
  c_square2d->add_option("--seq-file2", s2_seq_file2, "second axis (default: same as --seq-file)");
  c_square2d->add_option("--input", s2_input, "1-D family, tensored with itself")
      ->capture_default_str();

  // ---- mikhlin
  auto* c_mikhlin = app.add_subcommand("mikhlin", "Mikhlin constants of randomized smoothed sums");
  double mk_lambda = 1.2;
  long long mk_count = 12;
  int mk_draws = 32;
  c_mikhlin->add_option("--lambda", mk_lambda)->required();
  c_mikhlin->add_option("--count", mk_count)->capture_default_str();
  c_mikhlin->add_option("--draws", mk_draws)->capture_default_str();

  // ---- scans
  std::vector<double> lambdas;
  auto* c_card = app.add_subcommand("cardinality-scan", "#A_N vs (lambda-1)^{-1}, exact pairing");
  c_card->add_option("--lambdas", lambdas, "comma-separated")->delimiter(',');

  auto* c_sharp = app.add_subcommand("sharpness-scan", "H^p lower-bound functional scan");
  std::vector<double> sharp_lambdas;
  std::vector<long long> sharp_Ns;
  c_sharp->add_option("--lambdas", sharp_lambdas)->delimiter(',');
  c_sharp->add_option("--Ns", sharp_Ns)->delimiter(',');

  auto* c_sigscan = app.add_subcommand("sigma-scan", "sigma^{1/2} law scan");
  std::vector<long long> sigmas;
  long long scan_M = 8192;
  c_sigscan->add_option("--sigmas", sigmas)->delimiter(',');
  c_sigscan->add_option("--M", scan_M)->capture_default_str();

  auto* c_paley = app.add_subcommand("paley-scan", "Paley quotient scan + 2-D product point");
  std::vector<double> paley_lambdas;
  long long paley_N = 4096, paley_N2d = 128;
  c_paley->add_option("--lambdas", paley_lambdas)->delimiter(',');
  c_paley->add_option("--N", paley_N)->capture_default_str();
  c_paley->add_option("--N2d", paley_N2d)->capture_default_str();

  auto* c_zyg = app.add_subcommand("zygmund", "Zygmund quotient vs sigma");
  std::vector<long long> zyg_sigmas;
  long long zyg_M = 8192;
  c_zyg->add_option("--sigmas", zyg_sigmas)->delimiter(',');
  c_zyg->add_option("--M", zyg_M)->capture_default_str();

  auto* c_lp = app.add_subcommand("lambda-p", "Lambda(p) quotient envelope");
  std::string lp_seq_file;
  std::vector<double> lp_ps{2, 4, 8};
  int lp_trials = 100;
  c_lp->add_option("--seq-file", lp_seq_file, "default: dyadic up to 1024");
  c_lp->add_option("--ps", lp_ps)->delimiter(',');
  c_lp->add_option("--trials", lp_trials)->capture_default_str();

  auto* c_wt = app.add_subcommand("weak-type", "normalized weak-(1,1) ratio flatness");
  std::vector<double> wt_lambdas;
  long long wt_N = 2048;
  c_wt->add_option("--lambdas", wt_lambdas)->delimiter(',');
  c_wt->add_option("--N", wt_N)->capture_default_str();

  auto* c_dual = app.add_subcommand("dual-scan", "p > 2 operator quotients across sequences");
  std::vector<double> dual_lambdas{1.1, 1.2, 1.25};
  std::vector<double> dual_ps{2.5, 3, 4, 6, 8};
  int dual_trials = 20;
  c_dual->add_option("--lambdas", dual_lambdas, "constructed sequences, one per lambda")
      ->capture_default_str()
      ->delimiter(',');
  c_dual->add_option("--ps", dual_ps)->delimiter(',');
  c_dual->add_option("--trials", dual_trials)->capture_default_str();

  auto* c_kh = app.add_subcommand("khintchine", "randomized projection sums vs S(f)");
  std::string kh_seq_file;
  std::vector<double> kh_ps{1, 1.2, 1.5, 2};
  int kh_functions = 100, kh_draws = 200;
  c_kh->add_option("--seq-file", kh_seq_file, "default: dyadic up to 512");
  c_kh->add_option("--ps", kh_ps)->delimiter(',');
  c_kh->add_option("--functions", kh_functions)->capture_default_str();
  c_kh->add_option("--draws", kh_draws)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  if (const char* env_seed = std::getenv("LP_LAB_SEED")) g.seed = std::strtoull(env_seed, nullptr, 10);
#ifdef _OPENMP
  if (g.jobs > 0) omp_set_num_threads(g.jobs);
#endif

  CLI::App* cmd = app.get_subcommands().front();
  const std::string command = cmd->get_name();

  if (lambdas.empty()) lambdas = defaults::cardinality_lambda_grid();
  if (sharp_lambdas.empty()) sharp_lambdas = defaults::sharpness_lambda_grid();
  if (sharp_Ns.empty()) sharp_Ns = defaults::sharpness_N_grid();
  if (sigmas.empty()) sigmas = defaults::sigma_grid();
  if (paley_lambdas.empty()) paley_lambdas = defaults::scan_lambda_grid();
  if (zyg_sigmas.empty()) zyg_sigmas = defaults::sigma_grid();
  if (wt_lambdas.empty()) wt_lambdas = defaults::scan_lambda_grid();

  if (g.dry_run) {
    std::printf("dry-run: command %s, outdir %s, seed %llu\n", command.c_str(), g.outdir.c_str(),
                static_cast<unsigned long long>(g.seed));
    if (command == "cardinality-scan")
      for (double l : lambdas) std::printf("  task lambda=%g\n", l);
    else if (command == "sharpness-scan")
      for (double l : sharp_lambdas)
        for (long long N : sharp_Ns) std::printf("  task lambda=%g N=%lld\n", l, N);
    else if (command == "sigma-scan" || command == "zygmund")
      for (long long s : (command == "zygmund" ? zyg_sigmas : sigmas))
        std::printf("  task sigma=%lld\n", s);
    else if (command == "paley-scan" || command == "weak-type")
      for (double l : (command == "weak-type" ? wt_lambdas : paley_lambdas))
        std::printf("  task lambda=%g\n", l);
    else
      std::printf("  task %s\n", command.c_str());
    return kExitOk;
  }

  try {
    std::filesystem::create_directories(g.outdir);

    if (cmd == c_construct) {
      LacunarySequence seq = construct_near_ratio(construct_lambda, static_cast<std::size_t>(construct_count));
      write_sequence_json(out_path(g, command, ".json"), seq);
      return emit(g, sequence_report(command, seq), command);
    }
    if (cmd == c_refine) {
      LacunarySequence seq = read_sequence_json(refine_seq_file);
      LacunarySequence out = refine(seq);
      write_sequence_json(out_path(g, command, ".json"), out);
      return emit(g, sequence_report(command, out), command);
    }
    if (cmd == c_sigma_ex) {
      LacunarySequence seq = sigma_block_example(se_sigma, se_M);
      write_sequence_json(out_path(g, command, ".json"), seq);
      return emit(g, sequence_report(command, seq), command);
    }
    if (cmd == c_square) {
      LacunarySequence seq = read_sequence_json(sq_seq_file);
      TrigPoly f = parse_input(sq_input, g.seed);
      SquareFunctionResult r = square_function(seq, f, sq_grid);
      write_square_function_csv(out_path(g, command, ".csv"), r);
      std::ofstream(out_path(g, command, ".summary.json")) << square_function_summary_json(r);
      const double np = lp_norm(r.as_grid(), sq_p);
      const double nf = lp_norm(evaluate(f, r.grid_size), sq_p);
      if (!std::isfinite(np) || !std::isfinite(nf)) return kExitNumerical;
      std::printf("||S(f)||_%g = %.12g  ||f||_%g = %.12g  ratio = %.12g\n", sq_p, np, sq_p, nf,
                  np / nf);
      write_plot_sidecar(g, command, "x", "value");
      return kExitOk;
    }
    if (cmd == c_square2d) {
      LacunarySequence s1 = read_sequence_json(s2_seq_file);
      LacunarySequence s2 = s2_seq_file2.empty() ? s1 : read_sequence_json(s2_seq_file2);
      TrigPoly gpoly = parse_input(s2_input, g.seed);
      TrigPoly2D f2 = TrigPoly2D::tensor(gpoly, gpoly);
      SquareFunction2DResult r = square_function_2d(s1, s2, f2);
      const double l2 = lp_norm(r.as_grid(), 2.0);
      const double parseval = l2_norm_parseval(f2);
      if (!std::isfinite(l2)) return kExitNumerical;
      ScanResult res;
      res.name = command;
      ExperimentRecord rec;
      rec.experiment = command;
      rec.params["grid"] = static_cast<double>(r.M1);
      rec.measured["l2_grid"] = l2;
      rec.measured["l2_parseval"] = parseval;
      rec.measured["isometry_err"] = std::abs(l2 / parseval - 1.0);
      res.records.push_back(rec);
      return emit(g, res, command);
    }
    if (cmd == c_mikhlin) {
      LacunarySequence seq = construct_near_ratio(mk_lambda, static_cast<std::size_t>(mk_count));
      const double rho = ratio(seq);
      ScanResult res;
      res.name = command;
      for (int d = 0; d < mk_draws; ++d) {
        SignVector sv = make_sign_vector(num_smoothed_symbols(seq),
                                         derive_seed(g.seed, command, {static_cast<double>(d)}));
        const double c = mikhlin_constant(randomized_sum(seq, sv, true));
        ExperimentRecord rec;
        rec.experiment = command;
        rec.params["lambda"] = mk_lambda;
        rec.params["rho"] = rho;
        rec.params["seed"] = static_cast<double>(sv.seed);
        rec.measured["mikhlin_constant"] = c;
        rec.measured["normalized"] = c * (rho - 1.0);
        res.records.push_back(rec);
      }
      return emit(g, res, command);
    }
    if (cmd == c_card) return emit(g, cardinality_scan(lambdas), command);
    if (cmd == c_sharp) {
      int code = emit(g, sharpness_scan_hp(sharp_lambdas, sharp_Ns), command);
      write_plot_sidecar(g, command, "lambda", "lower_bound_functional");
      return code;
    }
    if (cmd == c_sigscan) return emit(g, sigma_scan(sigmas, scan_M), command);
    if (cmd == c_paley) return emit(g, paley_scan(paley_lambdas, paley_N, paley_N2d), command);
    if (cmd == c_zyg) return emit(g, zygmund_scan(zyg_sigmas, zyg_M), command);
    if (cmd == c_lp) {
      LacunarySequence seq;
      if (lp_seq_file.empty()) {
        for (long long v = 4; v <= 1024; v *= 2) seq.terms.push_back(v);
        seq.label = "dyadic";
      } else {
        seq = read_sequence_json(lp_seq_file);
      }
      return emit(g, lambda_p_check(seq, lp_ps, lp_trials, g.seed), command);
    }
    if (cmd == c_wt) return emit(g, weak_type_scan(wt_lambdas, wt_N), command);
    if (cmd == c_dual) {
      std::vector<LacunarySequence> seqs;
      for (double l : dual_lambdas) seqs.push_back(construct_near_ratio(l, 14));
      return emit(g, dual_range_scan(seqs, dual_ps, dual_trials, g.seed), command);
    }
    if (cmd == c_kh) {
      LacunarySequence seq;
      if (kh_seq_file.empty()) {
        for (long long v = 4; v <= 512; v *= 2) seq.terms.push_back(v);
        seq.label = "dyadic";
      } else {
        seq = read_sequence_json(kh_seq_file);
      }
      return emit(g, khintchine_scan(seq, kh_ps, kh_functions, kh_draws, g.seed), command);
    }
    std::fprintf(stderr, "error: unhandled command %s\n", command.c_str());
    return kExitValidation;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  }
}
