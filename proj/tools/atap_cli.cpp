// atap: nonabelian SL2(C) representations of J(2m,2n) knot groups, their
// adjoint twisted Alexander polynomial by two independent routes, and the
// nonabelian Reidemeister torsion.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "atap/pipeline.hpp"
#include "atap/record_json.hpp"
#include "atap/selftest.hpp"

using namespace atap;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNoRoots = 2;
constexpr int kExitVerifyFail = 3;

// Complex argument syntax: "RE" or "RE,IM".
cplx parse_cplx(const std::string& text) {
  std::istringstream in(text);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(in >> re)) throw CLI::ValidationError("complex", "expected RE or RE,IM: " + text);
  if (in >> comma) {
    if (comma != ',' || !(in >> im))
      throw CLI::ValidationError("complex", "expected RE or RE,IM: " + text);
  }
  std::string rest;
  if (in >> rest) throw CLI::ValidationError("complex", "trailing junk in: " + text);
  return {re, im};
}

// Range syntax: "A..B".
std::pair<int, int> parse_range(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos)
    throw CLI::ValidationError("range", "expected A..B: " + text);
  try {
    const int lo = std::stoi(text.substr(0, pos));
    const int hi = std::stoi(text.substr(pos + 2));
    return {lo, hi};
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "expected A..B: " + text);
  }
}

std::string fmt_cplx(cplx v) {
  char buf[64];
  if (v.imag() == 0.0)
    snprintf(buf, sizeof buf, "%.12g", v.real());
  else
    snprintf(buf, sizeof buf, "%.12g%+.12gi", v.real(), v.imag());
  return buf;
}

std::string csv_cplx(const std::optional<cplx>& v) {
  if (!v) return ",";
  char buf[80];
  snprintf(buf, sizeof buf, "%.17g,%.17g", v->real(), v->imag());
  return buf;
}

void emit_records_csv(const std::vector<OutputRecord>& records, std::ostream& out) {
  out << "m,n,s_re,s_im,x_re,x_im,y_re,y_im,z_re,z_im,riley_residual,"
         "verify_residual,multiplicity,A_re,A_im,B_re,B_im,C_re,C_im,"
         "quad_mid_re,quad_mid_im,D1_re,D1_im,D2_re,D2_im,"
         "torsion_closed_re,torsion_closed_im,torsion_limit_re,torsion_limit_im,"
         "cc_pass,cc_discrepancy,cc_unit_shift,cc_sign,delta_source,delta_coeffs,flags\n";
  for (const OutputRecord& r : records) {
    char head[512];
    snprintf(head, sizeof head,
             "%d,%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.3e,%.3e,%d,",
             r.params.m, r.params.n, r.s.real(), r.s.imag(), r.x.real(), r.x.imag(),
             r.y.real(), r.y.imag(), r.z.real(), r.z.imag(), r.riley_residual,
             r.verify_residual, r.multiplicity);
    out << head << csv_cplx(r.A) << ',' << csv_cplx(r.B) << ',' << csv_cplx(r.C) << ','
        << csv_cplx(r.quad_mid) << ',' << csv_cplx(r.D1) << ',' << csv_cplx(r.D2) << ','
        << csv_cplx(r.torsion_closed) << ',' << csv_cplx(r.torsion_limit) << ','
        << (r.crosscheck.pass ? 1 : 0) << ',' << r.crosscheck.discrepancy << ','
        << r.crosscheck.unit_shift << ',' << r.crosscheck.sign << ',' << r.delta_source
        << ",\"";
    for (size_t i = 0; i < r.delta_coeffs.size(); ++i) {
      if (i) out << ';';
      out << fmt_cplx(r.delta_coeffs[i]);
    }
    out << "\",\"";
    for (size_t i = 0; i < r.flags.size(); ++i) {
      if (i) out << ';';
      out << r.flags[i];
    }
    out << "\"\n";
  }
}

void emit_records_text(const std::vector<OutputRecord>& records, std::ostream& out) {
  for (const OutputRecord& r : records) {
    out << "J(" << 2 * r.params.m << "," << 2 * r.params.n << ")  s=" << fmt_cplx(r.s)
        << "  x=" << fmt_cplx(r.x) << "\n";
    out << "  root y=" << fmt_cplx(r.y) << "  z=" << fmt_cplx(r.z)
        << "  |phi|=" << r.riley_residual << "  |rho(w^n a)-rho(b w^n)|="
        << r.verify_residual;
    if (r.multiplicity > 1) out << "  multiplicity=" << r.multiplicity;
    out << "\n";
    const double mn = double(r.params.m) * double(r.params.n);
    if (r.quad_mid) {
      out << "  Delta(t) = (t-1)/D1 * (" << mn << " t^2 - (" << fmt_cplx(*r.quad_mid)
          << ") t + " << mn << ")\n";
      out << "    D1=" << fmt_cplx(*r.D1) << "  D2=" << fmt_cplx(*r.D2)
          << "  A=" << fmt_cplx(*r.A) << "  B=" << fmt_cplx(*r.B)
          << "  C=" << fmt_cplx(*r.C) << "\n";
    } else {
      out << "  Delta(t) via Fox pipeline only (closed form singular)\n";
    }
    out << "  delta coeffs (t^0..):";
    for (const cplx& c : r.delta_coeffs) out << " " << fmt_cplx(c);
    out << "\n";
    if (r.torsion_closed) out << "  torsion_closed = " << fmt_cplx(*r.torsion_closed) << "\n";
    if (r.torsion_limit) out << "  torsion_limit  = " << fmt_cplx(*r.torsion_limit) << "\n";
    if (r.crosscheck.ran)
      out << "  crosscheck: " << (r.crosscheck.pass ? "pass" : "FAIL")
          << "  discrepancy=" << r.crosscheck.discrepancy
          << "  unit_shift=" << r.crosscheck.unit_shift << "  sign=" << r.crosscheck.sign
          << "\n";
    if (!r.flags.empty()) {
      out << "  flags:";
      for (const auto& f : r.flags) out << " " << f;
      out << "\n";
    }
  }
}

struct CommonArgs {
  int m = 1, n = 1;
  std::string x_text, s_text;
  bool parabolic = false;
  double tol = -1.0;
  std::string format = "text";
  std::uint64_t seed = 1;
  double perturb = 0.0;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_mn = true) {
  if (with_mn) {
    cmd->add_option("--m", args.m, "m of K = J(2m,2n), nonzero")->required();
    cmd->add_option("--n", args.n, "n of K = J(2m,2n), nonzero")->required();
    cmd->add_option("--x", args.x_text, "meridian trace x = tr rho(a), RE or RE,IM");
    cmd->add_option("--s", args.s_text, "eigenvalue s of rho(a), RE or RE,IM");
    cmd->add_flag("--parabolic", args.parabolic, "shorthand for --x 2");
  }
  cmd->add_option("--tol", args.tol,
                  "agreement tolerance override (equality/residual/crosscheck)");
  cmd->add_option("--format", args.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--seed", args.seed, "seed for randomized suites");
}

RunConfig make_config(const CommonArgs& args) {
  RunConfig cfg;
  cfg.m = args.m;
  cfg.n = args.n;
  cfg.seed = args.seed;
  cfg.perturb = args.perturb;
  int sources = 0;
  if (!args.x_text.empty()) ++sources;
  if (!args.s_text.empty()) ++sources;
  if (args.parabolic) ++sources;
  if (sources != 1)
    throw InvalidParam("supply exactly one of --x, --s, --parabolic");
  if (args.parabolic)
    cfg.x = cplx(2.0);
  else if (!args.x_text.empty())
    cfg.x = parse_cplx(args.x_text);
  else
    cfg.s = parse_cplx(args.s_text);
  if (args.tol > 0.0) {
    cfg.tol.equality = args.tol;
    cfg.tol.root_residual = args.tol;
    cfg.tol.crosscheck = args.tol;
  }
  return cfg;
}

int cmd_compute(const CommonArgs& args) {
  const RunConfig cfg = make_config(args);
  const ComputeResult res = compute_records(cfg);

  if (args.format == "json") {
    nlohmann::json j;
    j["version"] = kSchemaVersion;
    j["config"] = config_to_json(cfg);
    j["records"] = nlohmann::json::array();
    for (const OutputRecord& r : res.records) j["records"].push_back(record_to_json(r));
    j["discarded_abelian"] = res.discarded_abelian;
    std::cout << j.dump(2) << "\n";
  } else if (args.format == "csv") {
    emit_records_csv(res.records, std::cout);
  } else {
    emit_records_text(res.records, std::cout);
    if (res.no_usable_roots())
      std::cout << "no usable roots (" << res.discarded_abelian
                << " on the abelian locus y=2)\n";
  }
  return res.no_usable_roots() ? kExitNoRoots : kExitOk;
}

int cmd_riley(const CommonArgs& args) {
  const RunConfig cfg = make_config(args);
  const RileyListing listing = riley_listing(cfg);

  if (args.format == "json") {
    nlohmann::json j;
    j["version"] = kSchemaVersion;
    j["config"] = config_to_json(cfg);
    j["coeffs"] = nlohmann::json::array();
    for (const cplx& c : listing.coeffs) j["coeffs"].push_back(cplx_to_json(c));
    j["roots"] = nlohmann::json::array();
    for (const auto& r : listing.roots)
      j["roots"].push_back({{"y", cplx_to_json(r.y)},
                            {"residual", r.residual},
                            {"excluded_abelian", r.excluded_abelian},
                            {"multiplicity", r.multiplicity}});
    std::cout << j.dump(2) << "\n";
  } else if (args.format == "csv") {
    std::cout << "y_re,y_im,residual,excluded_abelian,multiplicity\n";
    for (const auto& r : listing.roots)
      std::cout << r.y.real() << ',' << r.y.imag() << ',' << r.residual << ','
                << (r.excluded_abelian ? 1 : 0) << ',' << r.multiplicity << "\n";
  } else {
    std::cout << "phi_K(s, y) coefficients (ascending powers of y), s="
              << fmt_cplx(listing.s) << ":\n ";
    for (const cplx& c : listing.coeffs) std::cout << " " << fmt_cplx(c);
    std::cout << "\nroots:\n";
    for (const auto& r : listing.roots) {
      std::cout << "  y=" << fmt_cplx(r.y) << "  |phi(y)|=" << r.residual;
      if (r.excluded_abelian) std::cout << "  [excluded: abelian locus]";
      if (r.multiplicity > 1) std::cout << "  multiplicity=" << r.multiplicity;
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_crosscheck(const CommonArgs& args, const std::string& m_range,
                   const std::string& n_range, const std::vector<std::string>& x_texts) {
  const auto [m_lo, m_hi] = parse_range(m_range);
  const auto [n_lo, n_hi] = parse_range(n_range);
  std::vector<cplx> xs;
  for (const std::string& chunk : x_texts) {
    std::istringstream in(chunk);
    std::string item;
    while (std::getline(in, item, ';'))
      if (!item.empty()) xs.push_back(parse_cplx(item));
  }
  if (xs.empty()) xs = {cplx(2.0), cplx(1.7), cplx(0.6, 1.1)};

  Tolerances tol;
  if (args.tol > 0.0) {
    tol.equality = args.tol;
    tol.root_residual = args.tol;
    tol.crosscheck = args.tol;
  }
  const GridSummary summary = crosscheck_grid(m_lo, m_hi, n_lo, n_hi, xs, tol, args.perturb);

  if (args.format == "json") {
    nlohmann::json j;
    j["version"] = kSchemaVersion;
    j["summary"] = grid_summary_to_json(summary);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "cells=" << summary.cells << " records=" << summary.records
              << " pass=" << summary.crosscheck_pass
              << " fail=" << summary.crosscheck_fail
              << " closed-form-skipped=" << summary.closed_form_skipped << "\n";
    std::cout << "worst discrepancy=" << summary.worst_discrepancy
              << "  torsion sigma=" << summary.torsion_sigma
              << " (consistent=" << (summary.torsion_sign_consistent ? "yes" : "NO")
              << ", worst err=" << summary.worst_torsion_err << ")\n";
    for (const GridCell& c : summary.failures)
      std::cout << "FAIL m=" << c.m << " n=" << c.n << " x=" << fmt_cplx(c.x)
                << " y=" << fmt_cplx(c.record.y)
                << " discrepancy=" << c.record.crosscheck.discrepancy << "\n";
    for (const GridCell& c : summary.flagged) {
      std::cout << "flagged m=" << c.m << " n=" << c.n << " x=" << fmt_cplx(c.x)
                << " y=" << fmt_cplx(c.record.y) << ":";
      for (const auto& f : c.record.flags) std::cout << " " << f;
      std::cout << "\n";
    }
  }
  return summary.pass() ? kExitOk : kExitVerifyFail;
}

int cmd_selftest(const CommonArgs& args) {
  Tolerances tol;
  if (args.tol > 0.0) {
    tol.equality = args.tol;
    tol.root_residual = args.tol;
    tol.crosscheck = args.tol;
  }
  const std::vector<SuiteResult> suites = run_selftest(args.seed, tol);
  bool all_pass = true;
  if (args.format == "json") {
    nlohmann::json j;
    j["version"] = kSchemaVersion;
    j["seed"] = args.seed;
    j["suites"] = suites_to_json(suites);
    for (const SuiteResult& s : suites) all_pass = all_pass && s.pass();
    j["pass"] = all_pass;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const SuiteResult& s : suites) {
      std::cout << (s.pass() ? "[pass] " : "[FAIL] ") << s.name << ": " << s.checks
                << " checks, " << s.failures << " failures, worst err " << s.worst_err
                << "\n";
      for (const auto& note : s.notes) std::cout << "    " << note << "\n";
      all_pass = all_pass && s.pass();
    }
  }
  return all_pass ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adjoint twisted Alexander polynomials of J(2m,2n) knots"};
  app.require_subcommand(1);

  CommonArgs compute_args, riley_args, crosscheck_args, selftest_args;
  std::string m_range = "-3..3", n_range = "-3..3";
  std::vector<std::string> x_texts;

  CLI::App* compute = app.add_subcommand(
      "compute", "representations, Delta by both pipelines, torsion");
  add_common(compute, compute_args);
  compute->add_option("--perturb", compute_args.perturb,
                      "debug: offset each root before evaluating");

  CLI::App* riley = app.add_subcommand("riley", "Riley polynomial and its roots");
  add_common(riley, riley_args);

  CLI::App* crosscheck =
      app.add_subcommand("crosscheck", "dual-pipeline agreement over a grid");
  crosscheck->add_option("--m-range", m_range, "m range A..B (0 skipped)");
  crosscheck->add_option("--n-range", n_range, "n range A..B (0 skipped)");
  crosscheck->add_option("--x-samples", x_texts,
                         "x sample (RE or RE,IM); repeatable or ;-separated");
  add_common(crosscheck, crosscheck_args, /*with_mn=*/false);
  crosscheck->add_option("--perturb", crosscheck_args.perturb,
                         "debug: offset each root before evaluating");

  CLI::App* selftest = app.add_subcommand("selftest", "run all invariant suites");
  add_common(selftest, selftest_args, /*with_mn=*/false);

  try {
    app.parse(argc, argv);
    if (compute->parsed()) return cmd_compute(compute_args);
    if (riley->parsed()) return cmd_riley(riley_args);
    if (crosscheck->parsed())
      return cmd_crosscheck(crosscheck_args, m_range, n_range, x_texts);
    if (selftest->parsed()) return cmd_selftest(selftest_args);
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const InvalidParam& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
}
