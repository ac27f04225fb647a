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

#include <doctest.h>

#include "support.hpp"
#include "tspm/blockpos.hpp"
#include "tspm/distill.hpp"

using namespace tspm;
using testing::max_abs_diff;

TEST_CASE("filter_to_werner produces entangled Werner states") {
  for (double p : {-1.0, -0.5, -0.1}) {
    for (FilterSide side : {FilterSide::OutputSide, FilterSide::InputSide}) {
      const FilterOutcome outcome = filter_to_werner(werner_channel(p, 2), side);
      CHECK(outcome.state.kind == TwirlKind::Werner);
      CHECK(outcome.state.p < 0.0);
      CHECK(outcome.raw_overlap < 0.0);
      CHECK(classify(outcome.state).verdict == EntanglementClass::EntangledNPPT);

      // outcome invariant: parameter recomputed from the realized state
      CHECK(werner_param(outcome.twirled) == doctest::Approx(outcome.state.p).epsilon(1e-10));
      CHECK(std::abs(outcome.twirled.trace().real() - 1.0) <= 1e-12);
    }
  }
  CHECK_THROWS_WITH_AS(filter_to_werner(transpose_map(2), FilterSide::OutputSide),
                       doctest::Contains("completely co-positive"), PreconditionError);
}

TEST_CASE("filter identity tr(C' F) = d <psi| C^T2 |psi> on random NPPT inputs") {
  Rng rng(3);
  int tested = 0;
  for (int trial = 0; trial < 20 && tested < 6; ++trial) {
    // random NPPT density matrices as Choi inputs keep the map CP, so the
    // caller obligation (positivity) holds
    const FactoredOperator choi({2, 3}, testing::random_density(6, rng));
    const MapRep m = from_choi(choi);
    const HermitianEig pt = eig_hermitian(partial_transpose(choi, {1}));
    if (pt.eigenvalues(0) >= -1e-6) continue;
    ++tested;
    for (FilterSide side : {FilterSide::OutputSide, FilterSide::InputSide}) {
      const FilterOutcome outcome = filter_to_werner(m, side);
      const int d = side == FilterSide::OutputSide ? m.dout() : m.din();
      // reconstruct the filtered operator from the stored filter matrix
      Matrix filtered;
      if (side == FilterSide::OutputSide) {
        filtered = kron_matrix(outcome.filter.adjoint(), Matrix::Identity(3, 3)) *
                   choi.data() * kron_matrix(outcome.filter, Matrix::Identity(3, 3));
      } else {
        filtered = kron_matrix(Matrix::Identity(2, 2), outcome.filter.transpose()) *
                   choi.data() * kron_matrix(Matrix::Identity(2, 2), outcome.filter.conjugate());
      }
      const FactoredOperator c_prime({d, d}, filtered);
      CHECK(werner_param(c_prime) ==
            doctest::Approx(d * outcome.raw_overlap).epsilon(1e-10));
    }
  }
  CHECK(tested >= 3);
}

TEST_CASE("reduction quantity on reference maps") {
  CHECK(reduction_p(identity_map(3)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(reduction_p(werner_channel(-1.0, 2)) == doctest::Approx(1.0).epsilon(1e-12));
  // (1 - p) / (d (d - 1)) at p = -0.5, d = 4: below the 1/d threshold
  CHECK(reduction_p(werner_channel(-0.5, 4)) == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(reduction_p(werner_channel(-0.5, 4)) < 0.25);
}

TEST_CASE("filter_to_isotropic produces entangled isotropic states") {
  const FilterOutcome ident = filter_to_isotropic(identity_map(3), FilterSide::OutputSide);
  CHECK(ident.state.kind == TwirlKind::Isotropic);
  CHECK(ident.state.p == doctest::Approx(1.0).epsilon(1e-10));

  for (FilterSide side : {FilterSide::OutputSide, FilterSide::InputSide}) {
    const FilterOutcome outcome = filter_to_isotropic(werner_channel(-1.0, 2), side);
    CHECK(outcome.state.p > 0.5);
    CHECK(classify(outcome.state).verdict == EntanglementClass::EntangledNPPT);
    CHECK(isotropic_param(outcome.twirled) == doctest::Approx(outcome.state.p).epsilon(1e-10));
  }

  CHECK_THROWS_AS(filter_to_isotropic(transpose_map(2), FilterSide::OutputSide),
                  PreconditionError);
}

TEST_CASE("recurrence recursion fixed points and convergence") {
  for (int d = 2; d <= 5; ++d) {
    CHECK(recurrence_r(1.0, d) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(recurrence_r(1.0 / d, d) == doctest::Approx(1.0 / d).epsilon(1e-12));
  }

  // the recursion contracts linearly with asymptotic factor g_d(1) = 2/(d+1),
  // so reaching 1e-6 from p = 0.6 at d = 2 takes about 39 levels
  const std::vector<double> iterates = recurrence_iterate(0.6, 2, 40);
  CHECK(iterates.size() == 41);
  for (std::size_t i = 1; i < iterates.size(); ++i) CHECK(iterates[i] > iterates[i - 1]);
  CHECK(iterates[20] == doctest::Approx(1.0 - 1.8874277473900358e-3).epsilon(1e-10));
  CHECK(iterates.back() > 1.0 - 1e-6);

  // constant at the fixed points
  const std::vector<double> fixed = recurrence_iterate(0.5, 2, 5);
  for (double v : fixed) CHECK(v == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("contraction factor matches its defining relation and the quoted form") {
  for (int d = 2; d <= 5; ++d) {
    const double dd = d;
    for (double p = 1.0 / d + 0.02; p < 0.999; p += 0.05) {
      const double g = recurrence_g(p, d);
      CHECK(g == doctest::Approx((1.0 - recurrence_r(p, d)) / (1.0 - p)).epsilon(1e-12));
      // long form with the explicit (1 - p) factor in the denominator
      const double quoted = (dd * (dd + 1.0) - 2.0 - p * (p * dd * (dd - 1.0) + 2.0 * (dd - 1.0))) /
                            ((1.0 - p) * (p * (p * dd * dd * dd - 2.0 * dd) + dd * dd + dd - 1.0));
      CHECK(g == doctest::Approx(quoted).epsilon(1e-12));
      CHECK(g >= 0.0);
      CHECK(g < 1.0);
    }
    CHECK(recurrence_g(1.0, d) == doctest::Approx(2.0 / (dd + 1.0)).epsilon(1e-12));
  }
}

TEST_CASE("recurrence-based dcp bound") {
  // n = 2: floor(log2(1)) = 0 levels, bound = 2 (1 - p)
  const MapRep w = werner_channel(-1.0, 2);  // reduction p = 1
  const BoundReport at_two = dcp_bound_recurrence(w, 2);
  CHECK(at_two.bound_value == doctest::Approx(0.0).epsilon(1e-12));

  const BoundReport ident = dcp_bound_recurrence(identity_map(2), 5);
  CHECK(ident.bound_value == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(ident.constituents.at("d_cp").upper == doctest::Approx(0.0).epsilon(1e-12));

  // p in the open interval: bound = 2 (1 - p) g^levels
  const MapRep iso = from_choi(isotropic_state(0.8, 2));
  const double p = reduction_p(iso);
  CHECK(p > 0.5);
  const BoundReport at_five = dcp_bound_recurrence(iso, 5);  // floor(log2 4) = 2 levels
  const double expected = 2.0 * (1.0 - p) * std::pow(recurrence_g(p, 2), 2);
  CHECK(at_five.bound_value == doctest::Approx(expected).epsilon(1e-12));

  CHECK_THROWS_AS(dcp_bound_recurrence(werner_channel(-0.5, 4), 4), PreconditionError);
  CHECK_THROWS_AS(dcp_bound_recurrence(w, 1), std::invalid_argument);
}

TEST_CASE("one-parameter family Choi structure and non-triviality") {
  for (double p : {-1.0, -0.5, 0.3}) {
    const MapRep family = one_param_family(p, 3);
    CHECK(family.din() == 9);
    CHECK(family.dout() == 9);
    const FactoredOperator expected =
        permute_factors(kron(werner_state(p, 3), partial_transpose(werner_state(p, 3), {1})),
                        {0, 2, 1, 3})
            .regrouped({9, 9});
    CHECK(max_abs_diff(family.choi().data(), expected.data()) <= 1e-12);
  }

  for (double p : {-1.0, -0.5, -0.1, -0.01}) {
    const MapRep family = one_param_family(p, 3);
    CHECK_FALSE(is_cp(family).ok);
    CHECK_FALSE(is_ccp(family).ok);
  }
  // separable-parameter members are completely positive
  CHECK(is_cp(one_param_family(0.3, 2)).ok);
}

TEST_CASE("depolarizing mix moves the Werner parameter affinely") {
  Rng rng(7);
  for (double q : {-0.8, -0.3}) {
    for (double alpha : {0.2, 0.7, 1.0}) {
      const int d = 3;
      const FactoredOperator rho = werner_state(q, d);
      const MapRep dep = depolarizing(alpha, d);
      const FactoredOperator mixed = apply_first(dep, rho);
      CHECK(werner_param(mixed) ==
            doctest::Approx(alpha * q + (1.0 - alpha) / d).epsilon(1e-12));
    }
  }
}

TEST_CASE("build_candidate lifts the smaller branch to the matched parameter") {
  // needs a map m with neither m nor theta . m completely co-positive, i.e.
  // m neither CP nor cCP; a family member qualifies
  const MapRep m = one_param_family(-0.5, 2);
  const CandidateResult result = build_candidate(m, 4);
  CHECK(result.p == doctest::Approx(std::max(result.p1, result.p2)).epsilon(1e-12));
  CHECK(result.p < 0.0);
  CHECK(result.p1 < 0.0);
  CHECK(result.p2 < 0.0);
  const double p_small = std::min(result.p1, result.p2);
  if (result.p1 != result.p2) {
    CHECK(result.alpha ==
          doctest::Approx((result.p - 0.25) / (p_small - 0.25)).epsilon(1e-12));
    CHECK(result.alpha * p_small + (1.0 - result.alpha) / 4.0 ==
          doctest::Approx(result.p).epsilon(1e-12));
  }
  CHECK_FALSE(is_cp(result.family).ok);
  CHECK_FALSE(is_ccp(result.family).ok);
  CHECK(result.family.din() == 16);

  // a channel's transposition branch is completely co-positive, so the
  // construction must refuse it
  CHECK_THROWS_AS(build_candidate(werner_channel(-0.7, 2), 2), PreconditionError);
  CHECK_THROWS_AS(build_candidate(m, 5), std::invalid_argument);
}

TEST_CASE("separable application and scheme errors") {
  const FactoredOperator omega = max_entangled_projector(2);
  std::vector<std::pair<Matrix, Matrix>> pass{{Matrix::Identity(2, 2), Matrix::Identity(2, 2)}};
  CHECK(max_abs_diff(apply_separable(pass, omega).data(), omega.data()) == 0.0);
  CHECK(scheme_error(identity_map(2), pass, 2) <= 1e-12);

  // filter realized as a Kraus pair reproduces direct state arithmetic
  const MapRep w = werner_channel(-1.0, 2);
  const FilterOutcome outcome = filter_to_werner(w, FilterSide::OutputSide);
  std::vector<std::pair<Matrix, Matrix>> filter_pairs{
      {outcome.filter.adjoint(), Matrix::Identity(2, 2)}};
  const Matrix direct = kron_matrix(outcome.filter.adjoint(), Matrix::Identity(2, 2)) *
                        w.choi().data() *
                        kron_matrix(outcome.filter, Matrix::Identity(2, 2));
  const double via_scheme = scheme_error(w, filter_pairs, 2);
  const double via_direct = trace_norm(omega.data() - direct);
  CHECK(via_scheme == doctest::Approx(via_direct).epsilon(1e-12));

  std::vector<std::pair<Matrix, Matrix>> wrong{{Matrix::Identity(3, 3), Matrix::Identity(2, 2)}};
  CHECK_THROWS_AS(apply_separable(wrong, omega), std::invalid_argument);
}

TEST_CASE("filtered intermediates stay positive after the UU-twirl") {
  RunConfig config;
  config.restarts = 24;
  const MapRep w = werner_channel(-0.6, 2);
  const FilterOutcome outcome = filter_to_werner(w, FilterSide::OutputSide);
  const Matrix filtered = kron_matrix(outcome.filter.adjoint(), Matrix::Identity(2, 2)) *
                          w.choi().data() *
                          kron_matrix(outcome.filter, Matrix::Identity(2, 2));
  const TwirlPositivityReport report =
      twirl_positivity_check(FactoredOperator({2, 2}, filtered), config);
  CHECK(report.block_positive_heuristic);
  CHECK(report.flip_expectation < 0.0);
  CHECK(report.uu_applicable);
  CHECK(report.uu_lambda_min >= -1e-10);
}

TEST_CASE("scheme bound report evaluates the inequality and its hypothesis") {
  Rng rng(11);
  const MapRep channel = testing::random_channel(2, 2, 2, rng);
  RunConfig config;
  config.restarts = 24;

  const SchemeBoundReport cp_case = dcp_scheme_bound(channel, identity_map(2), config);
  CHECK(cp_case.dcp <= 1e-10);
  CHECK(cp_case.bound >= cp_case.dcp - 1e-9);
  CHECK_FALSE(cp_case.hypothesis_refuted);

  // id (x) theta is not a positive map: the probe must certify a refutation
  const SchemeBoundReport theta_case = dcp_scheme_bound(transpose_map(2), identity_map(2), config);
  CHECK(theta_case.hypothesis_refuted);
  CHECK(theta_case.hypothesis_probe.value < 0.0);

  // audit the inequality on unrefuted random schemes around a Werner channel
  const MapRep w = werner_channel(-1.0, 2);
  int audited = 0;
  for (int trial = 0; trial < 4; ++trial) {
    const MapRep r = testing::random_channel(2, 2, 2, rng);
    const SchemeBoundReport audit = dcp_scheme_bound(w, r, config);
    if (!audit.hypothesis_refuted) {
      CHECK(audit.bound >= audit.dcp - 1e-8);
      ++audited;
    }
  }
  (void)audited;
}

TEST_CASE("candidate family inherits half the tensor-stability support") {
  // heuristic chain: when the probe finds no refutation for the input at n,
  // the constructed family member survives the probe at floor(n/2). The d=2
  // family member at p = -0.1 passes the two-copy probe (the see-saw refutes
  // two-copy positivity only from about p = -0.3 on).
  RunConfig config;
  config.restarts = 48;
  const MapRep input = one_param_family(-0.1, 2);
  const OptReport input_probe = verify_nts(input, 2, config);
  REQUIRE(input_probe.certified == Certification::HeuristicMinimum);

  const CandidateResult candidate = build_candidate(input, 4, config);
  CHECK(candidate.p < 0.0);
  const OptReport family_probe = verify_nts(candidate.family, 1, config);
  CHECK(family_probe.certified == Certification::HeuristicMinimum);
  CHECK(family_probe.value >= -config.tol);

  // deeper in the parameter range the two-copy probe certifies a refutation
  const OptReport refuted = verify_nts(one_param_family(-0.5, 2), 2, config);
  CHECK(refuted.certified == Certification::RefutationCertified);
}
