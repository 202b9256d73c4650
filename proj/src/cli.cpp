#include "quatdyn/cli.hpp"

#include <CLI11.hpp>
#include <string>

#include "quatdyn/eqregion.hpp"
#include "quatdyn/io.hpp"
#include "quatdyn/jordan_form.hpp"
#include "quatdyn/oracle.hpp"

namespace quatdyn {

namespace {

struct CommonOpts {
  std::string input;
  std::string mode = "general";
  double tol = 1e-8;
  std::uint64_t seed = 12345;
  long max_power = -1;  // -1: pick per-command defaults
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--input", o.input, "JSON file holding the matrix {\"n\", \"entries\"}")
      ->required();
  cmd->add_option("--mode", o.mode, "general: numerical Jordan decomposition; assume-jordan: "
                                    "input is already in sorted-block Jordan form")
      ->check(CLI::IsMember({"general", "assume-jordan"}));
  cmd->add_option("--tol", o.tol, "eigenvalue clustering / unit-modulus tolerance")
      ->envname("QUATDYN_TOL");
  cmd->add_option("--seed", o.seed, "seed for probe sampling")->envname("QUATDYN_SEED");
  cmd->add_option("--max-power", o.max_power,
                  "orbit horizon for verification probes and power ladders");
}

Tolerances make_tol(const CommonOpts& o) {
  Tolerances t;
  t.spectral = o.tol;
  t.unit = o.tol;
  return t;
}

JordanData decompose(const HMatrix& gamma, const CommonOpts& o, const Tolerances& tol) {
  if (o.mode == "assume-jordan") return jordan_data_from_structure(gamma, tol.spectral);
  return jordan_decomposition(gamma, tol);
}

void require_invertible(const HMatrix& gamma, const Tolerances& tol) {
  if (rank(gamma, tol.rank_rel) < gamma.rows())
    throw SingularMatrix("input matrix is singular; projective transformations must be "
                         "invertible");
}

int run_classify(const CommonOpts& o, std::ostream& out) {
  Tolerances tol = make_tol(o);
  HMatrix gamma = read_matrix_file(o.input);
  require_invertible(gamma, tol);
  JordanData jd = decompose(gamma, o, tol);
  bool semisimple = true, unit = true;
  for (const auto& b : jd.blocks) {
    if (b.size > 1) semisimple = false;
    if (std::abs(std::abs(b.rep) - 1.0) > tol.unit) unit = false;
  }
  Json j{{"type", to_string(classify(jd, tol.unit))},
         {"blocks", jd.blocks},
         {"semisimple", semisimple},
         {"unit_moduli", unit}};
  out << canonical_dump(j) << "\n";
  return 0;
}

int run_eqregion(const CommonOpts& o, const std::string& coords, std::ostream& out) {
  Tolerances tol = make_tol(o);
  HMatrix gamma = read_matrix_file(o.input);
  require_invertible(gamma, tol);
  EqRegionReport rep = eq_region_from_jordan(decompose(gamma, o, tol), tol);
  Json j = rep;
  if (coords == "original") j.erase("complement_jordan");
  if (coords == "jordan") j.erase("complement");
  out << canonical_dump(j) << "\n";
  return 0;
}

int run_verify(const CommonOpts& o, std::ostream& out) {
  Tolerances tol = make_tol(o);
  HMatrix gamma = read_matrix_file(o.input);
  require_invertible(gamma, tol);
  EqRegionReport rep = eq_region_from_jordan(decompose(gamma, o, tol), tol);
  ProbeConfig cfg;
  cfg.seed = o.seed;
  if (o.max_power > 0) {
    cfg.max_power = o.max_power;
    cfg.crush_max_power = o.max_power;
  } else {
    // Long probe horizon by default: separating an eps-perturbation of a
    // depth-2 chain kernel point takes about 1/eps steps.
    cfg.max_power = 4000;
    cfg.eps_ladder = {3e-2, 1e-3};
    // The crushed-subspace extrapolation still sharpens past the probe
    // horizon, and long power ladders are cheap.
    cfg.crush_max_power = 1600;
  }
  VerificationSummary sum = verify_region(gamma, rep, cfg, tol);
  out << canonical_dump(Json(sum)) << "\n";
  return sum.all_passed() ? 0 : 5;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"quaternionic projective dynamics: classification, equicontinuity regions, "
               "verification"};
  app.require_subcommand(1);

  CommonOpts copts, eopts, vopts;
  std::string coords = "both";

  CLI::App* c = app.add_subcommand("classify", "dynamical type and Jordan block data");
  add_common(c, copts);
  CLI::App* e = app.add_subcommand("eqregion", "complement of the equicontinuity region");
  add_common(e, eopts);
  e->add_option("--coords", coords, "which coordinates to report the complement in")
      ->check(CLI::IsMember({"jordan", "original", "both"}));
  CLI::App* v = app.add_subcommand("verify", "cross-check the region report with power "
                                             "iteration oracles and probes");
  add_common(v, vopts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& pe) {
    int code = app.exit(pe, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c->parsed()) return run_classify(copts, out);
    if (e->parsed()) return run_eqregion(eopts, coords, out);
    if (v->parsed()) return run_verify(vopts, out);
    err << "no subcommand selected\n";
    return 2;
  } catch (const SingularMatrix& ex) {
    out << canonical_dump(Json{{"error", ex.what()}}) << "\n";
    return 3;
  } catch (const IllConditioned& ex) {
    out << canonical_dump(Json{{"error", ex.what()}}) << "\n";
    return 4;
  } catch (const UnstableEstimate& ex) {
    out << canonical_dump(Json{{"error", ex.what()}}) << "\n";
    return 6;
  } catch (const Json::exception& ex) {
    err << "input error: " << ex.what() << "\n";
    return 2;
  } catch (const Error& ex) {
    err << "input error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    err << "unexpected error: " << ex.what() << "\n";
    return 1;
  }
}

}  // namespace quatdyn
