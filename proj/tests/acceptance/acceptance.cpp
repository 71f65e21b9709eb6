// Copyright 2026 The minsvm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "instances.hpp"
#include "minsvm/core.hpp"
#include "minsvm/data.hpp"
#include "minsvm/errors.hpp"
#include "minsvm/io.hpp"
#include "minsvm/metrics.hpp"
#include "minsvm/oracle.hpp"
#include "minsvm/solver.hpp"

namespace {

using namespace minsvm;

struct Verdict {
  bool pass = true;
  std::string detail;
};

void require(Verdict& v, bool ok, const std::string& why) {
  if (!ok && v.pass) {
    v.pass = false;
    v.detail = why;
  }
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// 1. analytic gradient vs central differences.
Verdict gradient_check() {
  Verdict v;
  double worst = 0.0;
  int instances = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto inst = minsvm::testing::random_instance(7000 + seed, 50, 10);
    const Vector& y = inst.dataset.labels();
    const Vector g = gradient(inst.w_aug, inst.view, y, inst.cfg);
    const Vector fd = fd_gradient(inst.w_aug, inst.view, y, inst.cfg, 1e-6);
    for (Eigen::Index j = 0; j < g.size(); ++j) {
      if (std::abs(g(j)) < 1e-8) continue;
      worst = std::max(worst, std::abs(g(j) - fd(j)) / std::abs(g(j)));
    }
    ++instances;
  }
  require(v, instances >= 100, "too few instances");
  require(v, worst <= 1e-4, fmt("worst relative error %.3g", worst));
  if (v.pass) v.detail = fmt("%.0f instances, worst relative error %.3g", instances, worst);
  return v;
}

// 2. p = 1 momentum solver vs dual coordinate descent.
Verdict oracle_equivalence() {
  Verdict v;
  double worst_gap_ratio = 0.0, worst_angle = 0.0;
  for (std::uint64_t seed = 1000; seed < 1010; ++seed) {
    const auto data = gen_toy({.seed = seed, .n_per_class = 20});
    TrainConfig cfg;
    cfg.C = 1.0;
    cfg.p = 1.0;
    cfg.s = 200.0;
    cfg.regularize_bias = true;
    const auto primal = train(data, cfg);
    const auto dual = dual_cd_train(data, cfg.C);
    require(v, dual.converged, "oracle did not converge");
    const double j_star = primal_objective(dual.model, data, cfg.C, 1.0, true);
    const double j = primal_objective(primal.model, data, cfg.C, 1.0, true);
    const double bound =
        cfg.C * static_cast<double>(data.n()) * std::log(2.0) / cfg.s + 1e-3 * (1.0 + j_star);
    const double theta = angle_theta(primal.model.w, dual.model.w);
    worst_gap_ratio = std::max(worst_gap_ratio, (j - j_star) / bound);
    worst_angle = std::max(worst_angle, theta);
    require(v, j - j_star <= bound,
            fmt("seed %.0f: gap %.4g exceeds %.4g", static_cast<double>(seed), j - j_star, bound));
    require(v, theta <= 2.0, fmt("seed %.0f: angle %.3g deg", static_cast<double>(seed), theta));
  }
  if (v.pass) v.detail = fmt("worst gap/bound %.3g, worst angle %.3g deg", worst_gap_ratio, worst_angle);
  return v;
}

// 3. KKT residuals of converged oracle solutions.
Verdict kkt_residuals() {
  Verdict v;
  double worst = 0.0;
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    for (double C : {0.1, 1.0, 10.0}) {
      const auto data = gen_toy({.seed = 500 + seed});
      const auto sol = dual_cd_train(data, C, {.seed = seed});
      if (!sol.converged) continue;
      const auto r = kkt_check(sol.model, sol.alpha, data, C);
      for (double x : {r.stationarity_residual, r.complementarity_residual, r.box_violation,
                       r.feasibility_violation}) {
        worst = std::max(worst, x);
      }
      ++checked;
    }
  }
  require(v, checked > 0, "no converged solution");
  require(v, worst <= 1e-6, fmt("worst residual %.3g", worst));
  if (v.pass) v.detail = fmt("%.0f solutions, worst residual %.3g", checked, worst);
  return v;
}

// 4. SV counts shrink with C for p = 0.5 but not for p = 1.
Verdict sv_trend() {
  Verdict v;
  const double cs[] = {1.0, 50.0, 100.0};
  int passing = 0;
  std::string per_seed;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto data = gen_toy({.seed = seed});
    std::size_t sv1[3], sv05[3];
    for (int i = 0; i < 3; ++i) {
      TrainConfig cfg;
      cfg.C = cs[i];
      cfg.eta = 1e-3 / cs[i];
      cfg.p = 1.0;
      sv1[i] = slack(train(data, cfg).model, data).n_sv;
      cfg.p = 0.5;
      sv05[i] = slack(train(data, cfg).model, data).n_sv;
    }
    const auto spread = [](const std::size_t* a) {
      return *std::max_element(a, a + 3) - *std::min_element(a, a + 3);
    };
    const bool a = sv05[2] < sv05[0];
    const bool b = spread(sv1) <= spread(sv05);
    const bool c = sv05[1] <= sv1[1] && sv05[2] <= sv1[2];
    passing += (a && b && c) ? 1 : 0;
    per_seed += " " + std::to_string(sv1[0]) + "/" + std::to_string(sv1[1]) + "/" +
                std::to_string(sv1[2]) + "->" + std::to_string(sv05[0]) + "/" +
                std::to_string(sv05[1]) + "/" + std::to_string(sv05[2]);
  }
  require(v, passing >= 4, std::to_string(passing) + "/5 seeds;" + per_seed);
  if (v.pass) v.detail = std::to_string(passing) + "/5 seeds;" + per_seed;
  return v;
}

// 5. cross-validated SV comparison on blobs.
Verdict cv_direction() {
  Verdict v;
  const auto data = gen_blobs(7, 50, 10, 2.0);
  TrainConfig s;
  s.C = 10.0;
  s.eta = 1e-2 / s.C;
  s.p = 1.0;
  TrainConfig m = s;
  m.p = 0.5;
  const auto rep = run_comparison(data, s, m, {.k = 5, .seed = 3});
  int wins = 0;
  for (const auto& f : rep.folds) {
    wins += f.n_sv_min < f.n_sv_std ? 1 : 0;
    require(v, std::isfinite(f.angle_theta_degrees) && f.angle_theta_degrees >= 0.0 &&
                   f.angle_theta_degrees <= 180.0,
            "theta out of range");
    require(v, std::isfinite(f.dist_d) && f.dist_d >= 0.0, "d out of range");
  }
  require(v, wins >= 4, std::to_string(wins) + "/5 folds");
  require(v, rep.mean.n_sv_min < rep.mean.n_sv_std, "mean n_sv not lower");
  if (v.pass) {
    v.detail = std::to_string(wins) + "/5 folds; mean n_sv " + fmt("%.1f vs %.1f", rep.mean.n_sv_min,
                                                                    rep.mean.n_sv_std);
  }
  return v;
}

// 6. convergence of the default configuration.
Verdict convergence() {
  Verdict v;
  int worst_iter = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto data = gen_toy({.seed = seed});
    const TrainConfig cfg;
    const auto r = train(data, cfg);
    const auto& h = r.trace.objective_history;
    const double final = h.back();
    const double initial_bound = cfg.C * static_cast<double>(data.n());
    require(v, h.front() == initial_bound, "initial objective is not C*n");
    require(v, final <= initial_bound, "final objective above C*n");
    // First iteration after which the trace stays within 1% of its final value.
    std::size_t settle = h.size();
    for (std::size_t t = h.size(); t-- > 0;) {
      if (std::abs(h[t] - final) > 0.01 * std::abs(final)) break;
      settle = t;
    }
    worst_iter = std::max(worst_iter, static_cast<int>(settle));
    require(v, settle <= 500, "seed " + std::to_string(seed) + " settles at " +
                                  std::to_string(settle));
  }
  if (v.pass) v.detail = "within 1% of final by iteration " + std::to_string(worst_iter);
  return v;
}

// 7. determinism, label-negation symmetry, model JSON round trip.
Verdict determinism() {
  Verdict v;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto data = gen_toy({.seed = 40 + seed});
    TrainConfig cfg;
    cfg.max_iter = 2000;
    const auto a = train(data, cfg).model;
    const auto b = train(data, cfg).model;
    require(v, a.w == b.w && a.b == b.b, "repeat runs differ");
    const auto neg = train(data.with_negated_labels(), cfg).model;
    require(v, neg.w == -a.w && neg.b == -a.b, "negated labels do not give (-w, -b)");
    const ModelFile f{kModelFormatVersion, a, {}};
    const auto back = model_from_json(model_to_json(f)).model;
    require(v, back.w == a.w && back.b == a.b, "JSON round trip is not exact");
  }
  if (v.pass) v.detail = "bit-identical repeats, exact mirror, exact round trip";
  return v;
}

// 8. angle and distance identities.
Verdict metric_identities() {
  Verdict v;
  Rng rng(99);
  for (int t = 0; t < 1000; ++t) {
    Vector w(1 + static_cast<Eigen::Index>(rng.below(10)));
    for (auto& x : w) x = rng.normal() * std::pow(10.0, rng.uniform(-100, 100));
    const double self = angle_theta(w, w);
    const double opposite = angle_theta(w, -w);
    require(v, self == 0.0, fmt("theta(w, w) = %.3g", self));
    require(v, opposite == 180.0, fmt("theta(w, -w) = %.17g", opposite));
    require(v, dist_d(w, w) == 0.0, "d(w, w) != 0");
    require(v, !std::isnan(angle_theta(w, 3.0 * w)), "theta is NaN");
    // w1 is the reference: d(w, 0) = 1, a zero reference is rejected.
    require(v, dist_d(w, Vector::Zero(w.size())) == 1.0, "d(w, 0) != 1");
    bool rejected = false;
    try {
      dist_d(Vector::Zero(w.size()), w);
    } catch (const ValidationError&) {
      rejected = true;
    }
    require(v, rejected, "d(0, w) not rejected");
  }
  if (v.pass) v.detail = "1000 random vectors";
  return v;
}

// 9. finite objective and gradient across extreme margins.
Verdict robustness() {
  Verdict v;
  Matrix x(1, 1);
  x << 1.0;
  Vector y(1);
  y << 1.0;
  const auto view = augment(LabeledDataset(x, y));
  int points = 0;
  for (double p : {0.3, 0.5, 1.0}) {
    TrainConfig cfg;
    cfg.p = p;
    cfg.s = 100.0;
    for (int e = -120; e <= 60; ++e) {
      const double mag = std::pow(10.0, e / 10.0);
      for (double z : {mag, -mag, 0.0}) {
        // margin z = 1 - y w x with x = 1, b = 0
        Vector w(2);
        w << 1.0 - z, 0.0;
        bool ok = false;
        try {
          ok = std::isfinite(objective(w, view, y, cfg)) && gradient(w, view, y, cfg).allFinite();
        } catch (const NumericalError&) {
        }
        require(v, ok, fmt("non-finite at z = %.3g, p = %.1f", z, p));
        ++points;
      }
    }
  }
  if (v.pass) v.detail = std::to_string(points) + " grid points, |z| up to 1e6";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Verdict()> check;
    double budget_seconds;  ///< 0: no runtime limit
  };
  const std::vector<Criterion> criteria = {
      {1, "gradient matches finite differences", gradient_check, 10},
      {2, "p=1 solver matches dual oracle", oracle_equivalence, 30},
      {3, "oracle KKT residuals", kkt_residuals, 0},
      {4, "support-vector trend over C", sv_trend, 60},
      {5, "cross-validated support-vector direction", cv_direction, 0},
      {6, "convergence with defaults", convergence, 0},
      {7, "determinism and symmetry", determinism, 0},
      {8, "metric identities", metric_identities, 0},
      {9, "numerical robustness", robustness, 0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (v.pass && c.budget_seconds > 0.0 && secs > c.budget_seconds) {
      v = {false, fmt("exceeded %.0fs budget", c.budget_seconds)};
    }
    std::printf("%s criterion %d: %s (%.2fs) %s\n", v.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                v.detail.c_str());
    failures += v.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
