// Copyright 2026 The tspm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// tspm: command-line front end. Loads operators/maps as JSON, runs the
// analyses with seeded determinism and emits machine-readable reports.
//
// Exit codes: 0 success, 1 malformed input or schema violation,
// 2 numerical non-convergence (converged fraction below 1/2),
// 3 precondition failure.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tspm/blockpos.hpp"
#include "tspm/capacity.hpp"
#include "tspm/distill.hpp"
#include "tspm/io_json.hpp"
#include "tspm/twirl.hpp"

namespace {

using namespace tspm;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitNoConvergence = 2;
constexpr int kExitPrecondition = 3;

struct Cli {
  RunConfig config;
  std::string format = "json";
  std::string out;

  void emit(const Json& report) const {
    if (out.empty()) {
      std::cout << report.dump(2) << "\n";
    } else {
      write_json_file(out, report);
    }
  }

  void emit_text(const std::string& text) const {
    if (out.empty()) {
      std::cout << text;
    } else {
      std::FILE* f = std::fopen(out.c_str(), "w");
      if (!f) throw std::runtime_error("cannot open " + out + " for writing");
      std::fwrite(text.data(), 1, text.size(), f);
      std::fclose(f);
    }
  }

  bool csv() const { return format == "csv"; }
};

int convergence_exit(const OptReport& report) {
  return report.converged_fraction < 0.5 ? kExitNoConvergence : kExitOk;
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) row += ",";
    row += cells[i];
  }
  row += "\n";
  return row;
}

std::string fmt(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

Matrix seeded_hermitian(int d, Rng& rng) {
  const Matrix g = rng.ginibre(d, d);
  return (g + g.adjoint()) / 2.0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"positivity of linear maps under tensor powers: analysis toolkit"};
  app.require_subcommand(1);

  Cli cli;
  app.add_option("--seed", cli.config.seed, "base RNG seed")->capture_default_str();
  app.add_option("--restarts", cli.config.restarts, "optimizer restarts")->capture_default_str();
  app.add_option("--max-iter", cli.config.max_iter, "iteration cap per restart")
      ->capture_default_str();
  app.add_option("--tol", cli.config.tol, "convergence tolerance")->capture_default_str();
  app.add_option("--size-cap", cli.config.size_cap, "largest allowed matrix side")
      ->capture_default_str();
  app.add_option("--format", cli.format, "output format (json|csv)")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", cli.out, "write the report/artifact to this file");

  auto* upb_cmd = app.add_subcommand("upb", "write the unextendible-product-set operator");
  int upb_d1 = 2, upb_d2 = 2;
  upb_cmd->add_option("--d1", upb_d1)->required();
  upb_cmd->add_option("--d2", upb_d2)->required();

  auto* mu_cmd = app.add_subcommand("mu", "minimal product overlap of an operator");
  std::string mu_operator;
  int mu_split = 0;
  mu_cmd->add_option("--operator", mu_operator, "operator JSON file")->required();
  mu_cmd->add_option("--split", mu_split, "factors on the left side (default: half)");

  auto* witness_cmd = app.add_subcommand("witness", "build an n-tensor-stable witness map");
  int wit_d1 = 2, wit_d2 = 2, wit_n = 1;
  std::string wit_eps = "auto";
  witness_cmd->add_option("--d1", wit_d1)->required();
  witness_cmd->add_option("--d2", wit_d2)->required();
  witness_cmd->add_option("--n", wit_n)->required();
  witness_cmd->add_option("--eps", wit_eps, "epsilon or 'auto' for the interval end");

  auto* verify_cmd = app.add_subcommand("verify-nts", "probe n-tensor-stable positivity");
  std::string verify_map;
  int verify_n = 1;
  verify_cmd->add_option("--map", verify_map)->required();
  verify_cmd->add_option("--n", verify_n)->required();

  auto* dcp_cmd = app.add_subcommand("dcp", "distance from the completely positive cone");
  std::string dcp_map;
  dcp_cmd->add_option("--map", dcp_map)->required();

  auto* dnorm_cmd = app.add_subcommand("dnorm", "certified diamond-norm interval");
  std::string dnorm_map;
  dnorm_cmd->add_option("--map", dnorm_map)->required();

  auto* capacity_cmd = app.add_subcommand("capacity", "capacity / strong-converse bounds");
  std::string cap_channel, cap_bound = "transpose", cap_pmap;
  capacity_cmd->add_option("--channel", cap_channel)->required();
  capacity_cmd->add_option("--bound", cap_bound)
      ->check(CLI::IsMember({"transpose", "general", "left", "sc-rate"}));
  capacity_cmd->add_option("--pmap", cap_pmap, "auxiliary map JSON file");

  auto* two_way_cmd = app.add_subcommand("two-way", "two-way coding error floors");
  std::string tw_channel;
  int tw_m = 1;
  double tw_n = 0.0, tw_rate = -1.0;
  two_way_cmd->add_option("--channel", tw_channel)->required();
  two_way_cmd->add_option("--m", tw_m, "channel uses")->required();
  two_way_cmd->add_option("--N", tw_n, "code dimension");
  two_way_cmd->add_option("--rate", tw_rate, "rate in bits per use");

  auto* distill_cmd = app.add_subcommand("distill", "filter a Choi matrix to a symmetric state");
  std::string dis_map, dis_protocol = "werner", dis_side = "out";
  distill_cmd->add_option("--map", dis_map)->required();
  distill_cmd->add_option("--protocol", dis_protocol)
      ->check(CLI::IsMember({"werner", "isotropic"}));
  distill_cmd->add_option("--side", dis_side)->check(CLI::IsMember({"in", "out"}));

  auto* recurrence_cmd = app.add_subcommand("recurrence", "fidelity recursion table");
  double rec_p = 0.6;
  int rec_d = 2, rec_levels = 10;
  recurrence_cmd->add_option("--p", rec_p)->required();
  recurrence_cmd->add_option("--d", rec_d)->required();
  recurrence_cmd->add_option("--levels", rec_levels)->required();

  auto* family_cmd = app.add_subcommand("family", "one-parameter candidate family");
  double fam_p = 0.0;
  int fam_d = 0, fam_side_dim = 0;
  std::string fam_from;
  family_cmd->add_option("--p", fam_p);
  family_cmd->add_option("--d", fam_d);
  family_cmd->add_option("--from-map", fam_from, "build the candidate from a map JSON file");
  family_cmd->add_option("--side-dim", fam_side_dim, "filter side dimension (default dout)");

  auto* twirl_cmd = app.add_subcommand("twirl", "closed form vs Monte-Carlo discrepancies");
  bool twirl_check = false;
  int twirl_dim = 2, twirl_samples = 10000;
  twirl_cmd->add_flag("--check", twirl_check, "run the discrepancy table");
  twirl_cmd->add_option("--dim", twirl_dim);
  twirl_cmd->add_option("--samples", twirl_samples);

  auto* lmin_cmd = app.add_subcommand("lmin", "minimal output eigenvalue");
  std::string lmin_map, lmin_tensor;
  lmin_cmd->add_option("--map", lmin_map)->required();
  lmin_cmd->add_option("--tensor", lmin_tensor, "second factor for the additivity check");

  // global options may follow the subcommand name
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    cli.config.validate();

    if (*upb_cmd) {
      const UpbOperator upb = upb_operator(upb_d1, upb_d2);
      cli.emit(operator_to_json(upb.op));
      return kExitOk;
    }

    if (*mu_cmd) {
      const FactoredOperator op = operator_from_json(read_json_file(mu_operator));
      const int split = mu_split > 0 ? mu_split : op.num_factors() / 2;
      const OptReport report = min_product_overlap(op, split, cli.config);
      cli.emit(opt_report_to_json(report, cli.config));
      return convergence_exit(report);
    }

    if (*witness_cmd) {
      const bool automatic = wit_eps == "auto";
      WitnessMap witness =
          nts_witness_map(wit_d1, wit_d2, wit_n, automatic ? 0.0 : std::stod(wit_eps), cli.config);
      if (automatic) {
        witness = nts_witness_map(wit_d1, wit_d2, wit_n, witness.eps_limit, cli.config);
      }
      if (!witness.within_guarantee) {
        std::cerr << "note: eps exceeds the guaranteed interval end " << witness.eps_limit
                  << " (the interval is sufficient, not necessary)\n";
      }
      Json info{{"eps", witness.eps},
                {"mu", witness.mu},
                {"eps_interval", Json::array({0.0, witness.eps_limit})},
                {"within_guarantee", witness.within_guarantee}};
      if (cli.out.empty()) {
        info["map"] = map_to_json(witness.map);
        std::cout << info.dump(2) << "\n";
      } else {
        // --out holds the map artifact; the interval report goes to stdout
        write_json_file(cli.out, map_to_json(witness.map));
        std::cout << info.dump(2) << "\n";
      }
      return kExitOk;
    }

    if (*verify_cmd) {
      const MapRep m = map_from_json(read_json_file(verify_map));
      const OptReport report = verify_nts(m, verify_n, cli.config);
      cli.emit(opt_report_to_json(report, cli.config));
      return convergence_exit(report);
    }

    if (*dcp_cmd) {
      const MapRep m = map_from_json(read_json_file(dcp_map));
      cli.emit(Json{{"d_cp", d_cp(m)}});
      return kExitOk;
    }

    if (*dnorm_cmd) {
      const MapRep m = map_from_json(read_json_file(dnorm_map));
      Json j = norm_interval_to_json(diamond_interval(m, cli.config));
      j["config"] = config_to_json(cli.config);
      cli.emit(j);
      return kExitOk;
    }

    if (*capacity_cmd) {
      const MapRep t = map_from_json(read_json_file(cap_channel));
      BoundReport report;
      if (cap_bound == "transpose") {
        report = transposition_bound(t, cli.config);
      } else {
        if (cap_pmap.empty()) {
          throw std::invalid_argument("--pmap is required for bound '" + cap_bound + "'");
        }
        const MapRep p = map_from_json(read_json_file(cap_pmap));
        if (cap_bound == "general") {
          report = capacity_bound_general(t, p, cli.config);
        } else if (cap_bound == "left") {
          report = capacity_bound_left(t, p, cli.config);
        } else {
          report = strong_converse_rate_ts(t, p, cli.config);
        }
      }
      cli.emit(bound_report_to_json(report, cli.config));
      return kExitOk;
    }

    if (*two_way_cmd) {
      const MapRep t = map_from_json(read_json_file(tw_channel));
      if (tw_rate >= 0.0) {
        const double floor = strong_converse_q2(t, tw_rate, tw_m, cli.config);
        cli.emit(Json{{"rate_bits", tw_rate}, {"m", tw_m}, {"error_floor", floor}});
      } else {
        if (tw_n < 1.0) throw std::invalid_argument("two-way needs --N or --rate");
        Json j = two_way_report_to_json(two_way_error_report(t, tw_m, tw_n, cli.config));
        j["m"] = tw_m;
        j["N"] = tw_n;
        cli.emit(j);
      }
      return kExitOk;
    }

    if (*distill_cmd) {
      const MapRep m = map_from_json(read_json_file(dis_map));
      const FilterSide side = dis_side == "in" ? FilterSide::InputSide : FilterSide::OutputSide;
      const FilterOutcome outcome = dis_protocol == "werner" ? filter_to_werner(m, side)
                                                             : filter_to_isotropic(m, side);
      Json j = filter_outcome_to_json(outcome);
      j["classification"] = classify_report_to_json(outcome.state, classify(outcome.state));
      cli.emit(j);
      return kExitOk;
    }

    if (*recurrence_cmd) {
      const std::vector<double> table = recurrence_iterate(rec_p, rec_d, rec_levels);
      if (cli.csv()) {
        std::string text = csv_row({"level", "p"});
        for (std::size_t i = 0; i < table.size(); ++i) {
          text += csv_row({std::to_string(i), fmt(table[i])});
        }
        cli.emit_text(text);
      } else {
        cli.emit(Json{{"p", rec_p}, {"d", rec_d}, {"iterates", table}});
      }
      return kExitOk;
    }

    if (*family_cmd) {
      if (!fam_from.empty()) {
        const MapRep m = map_from_json(read_json_file(fam_from));
        const int side_dim = fam_side_dim > 0 ? fam_side_dim : m.dout();
        const CandidateResult result = build_candidate(m, side_dim, cli.config);
        Json provenance = candidate_to_json(result);
        if (!cli.out.empty()) {
          // --out holds the family map; provenance goes to stdout
          write_json_file(cli.out, provenance.at("family"));
          provenance.erase("family");
          std::cout << provenance.dump(2) << "\n";
        } else {
          std::cout << provenance.dump(2) << "\n";
        }
      } else {
        if (fam_d < 2) throw std::invalid_argument("family needs --d >= 2 or --from-map");
        cli.emit(map_to_json(one_param_family(fam_p, fam_d)));
      }
      return kExitOk;
    }

    if (*twirl_cmd) {
      if (!twirl_check) throw std::invalid_argument("twirl currently only supports --check");
      Rng rng(cli.config.seed);
      const Matrix raw = seeded_hermitian(twirl_dim * twirl_dim, rng);
      const FactoredOperator c({twirl_dim, twirl_dim}, raw / trace_norm(raw));
      const FactoredOperator closed_uu = twirl_uu(c);
      const FactoredOperator closed_uubar = twirl_uubar(c);

      std::vector<int> grid;
      for (int s = 1000; s < twirl_samples; s *= 10) grid.push_back(s);
      grid.push_back(twirl_samples);

      Json rows = Json::array();
      std::string text = csv_row({"samples", "max_err_uu", "max_err_uubar"});
      for (int s : grid) {
        const double err_uu = (mc_twirl(c, s, cli.config.seed, false).data() - closed_uu.data())
                                  .cwiseAbs()
                                  .maxCoeff();
        const double err_uubar =
            (mc_twirl(c, s, cli.config.seed, true).data() - closed_uubar.data())
                .cwiseAbs()
                .maxCoeff();
        rows.push_back(Json{{"samples", s}, {"max_err_uu", err_uu}, {"max_err_uubar", err_uubar}});
        text += csv_row({std::to_string(s), fmt(err_uu), fmt(err_uubar)});
      }
      if (cli.csv()) {
        cli.emit_text(text);
      } else {
        cli.emit(Json{{"dim", twirl_dim}, {"rows", rows}});
      }
      return kExitOk;
    }

    if (*lmin_cmd) {
      const MapRep m = map_from_json(read_json_file(lmin_map));
      if (lmin_tensor.empty()) {
        const OptReport report = lambda_min_out(m, cli.config);
        cli.emit(opt_report_to_json(report, cli.config));
        return convergence_exit(report);
      }
      const MapRep s = map_from_json(read_json_file(lmin_tensor));
      const AdditivityReport report = check_additivity_lmin(m, s, cli.config);
      cli.emit(additivity_report_to_json(report, cli.config));
      return kExitOk;
    }

    throw std::invalid_argument("no subcommand handled");
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failure: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}
