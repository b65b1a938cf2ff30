// Copyright 2026 The panobench authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace panobench {

enum class Metric { Plcc, Srcc };

inline const char* metric_name(Metric m) { return m == Metric::Plcc ? "PLCC" : "SRCC"; }

namespace detail {

inline void require_pair(const std::vector<double>& x, const std::vector<double>& y,
                         std::size_t min_n, const char* who) {
  if (x.size() != y.size())
    throw std::invalid_argument(std::string(who) + ": length mismatch");
  if (x.size() < min_n)
    throw std::invalid_argument(std::string(who) + ": needs at least " +
                                std::to_string(min_n) + " samples");
  for (double v : x)
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(who) + ": non-finite input");
  for (double v : y)
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(who) + ": non-finite input");
}

}  // namespace detail

/// Pearson correlation, computed as cov / sqrt(var_x * var_y).
/// Returns NaN when either argument has zero variance.
inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  detail::require_pair(x, y, 3, "pearson");
  const std::size_t n = x.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double cov = 0.0, vx = 0.0, vy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    cov += dx * dy;
    vx += dx * dx;
    vy += dy * dy;
  }
  if (vx <= 0.0 || vy <= 0.0) return std::numeric_limits<double>::quiet_NaN();
  return cov / std::sqrt(vx * vy);
}

/// Average ranks (1-based); tied values share the mean of their positions.
inline std::vector<double> average_ranks(const std::vector<double>& v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&v](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && v[idx[j + 1]] == v[idx[i]]) ++j;
    const double shared = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = shared;
    i = j + 1;
  }
  return ranks;
}

/// Spearman rank-order correlation with average-rank tie handling.
/// Returns NaN (all-tied input) with no other side effect; callers surface
/// the sentinel with a diagnostic.
inline double srcc(const std::vector<double>& pred, const std::vector<double>& mos) {
  detail::require_pair(pred, mos, 3, "srcc");
  return pearson(average_ranks(pred), average_ranks(mos));
}

struct LogisticParams {
  // f(x) = b1 * (1/2 - 1/(1 + exp(b2 * (x - b3)))) + b4 * x + b5
  double b1 = 0.0, b2 = 0.0, b3 = 0.0, b4 = 0.0, b5 = 0.0;
};

inline double logistic5(const LogisticParams& p, double x) {
  const double t = p.b2 * (x - p.b3);
  // exp overflow guard; the logistic term saturates at +-1/2 anyway
  double s;
  if (t > 500.0)
    s = 0.0;
  else if (t < -500.0)
    s = 1.0;
  else
    s = 1.0 / (1.0 + std::exp(t));
  return p.b1 * (0.5 - s) + p.b4 * x + p.b5;
}

struct LogisticFit {
  LogisticParams params;
  bool converged = false;
  double residual = std::numeric_limits<double>::quiet_NaN();
};

namespace detail {

inline double logistic_sse(const std::array<double, 5>& p, const std::vector<double>& x,
                           const std::vector<double>& y) {
  const LogisticParams lp{p[0], p[1], p[2], p[3], p[4]};
  double sse = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = logistic5(lp, x[i]) - y[i];
    sse += d * d;
  }
  return sse;
}

/// Nelder-Mead simplex descent on the 5-parameter objective. Runs until the
/// relative spread of the simplex residuals drops below 1e-10 or the shared
/// evaluation budget is spent; returns the best vertex seen.
inline std::pair<std::array<double, 5>, double> nelder_mead(
    std::array<double, 5> start, const std::vector<double>& x, const std::vector<double>& y,
    int& budget) {
  constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;
  const int dim = 5;
  std::array<std::array<double, 5>, 6> simplex;
  std::array<double, 6> sse;
  simplex[0] = start;
  for (int k = 0; k < dim; ++k) {
    simplex[k + 1] = start;
    const double step = std::abs(start[k]) > 1e-8 ? 0.1 * std::abs(start[k]) : 0.1;
    simplex[k + 1][k] += step;
  }
  for (int k = 0; k <= dim; ++k) sse[k] = logistic_sse(simplex[k], x, y);
  budget -= dim + 1;

  std::array<int, 6> ord{0, 1, 2, 3, 4, 5};
  while (budget > 0) {
    std::sort(ord.begin(), ord.end(), [&sse](int a, int b) { return sse[a] < sse[b]; });
    const double best = sse[ord[0]], worst = sse[ord[dim]];
    if (worst - best <= 1e-10 * (std::abs(best) + 1e-30)) break;

    std::array<double, 5> centroid{};
    for (int k = 0; k < dim; ++k)
      for (int d = 0; d < dim; ++d) centroid[d] += simplex[ord[k]][d] / dim;

    auto blend = [&](double coef) {
      std::array<double, 5> p;
      for (int d = 0; d < dim; ++d)
        p[d] = centroid[d] + coef * (centroid[d] - simplex[ord[dim]][d]);
      return p;
    };

    const std::array<double, 5> refl = blend(kReflect);
    const double f_refl = logistic_sse(refl, x, y);
    --budget;
    if (f_refl < sse[ord[0]]) {
      const std::array<double, 5> exp_p = blend(kExpand);
      const double f_exp = logistic_sse(exp_p, x, y);
      --budget;
      if (f_exp < f_refl) {
        simplex[ord[dim]] = exp_p;
        sse[ord[dim]] = f_exp;
      } else {
        simplex[ord[dim]] = refl;
        sse[ord[dim]] = f_refl;
      }
    } else if (f_refl < sse[ord[dim - 1]]) {
      simplex[ord[dim]] = refl;
      sse[ord[dim]] = f_refl;
    } else {
      const std::array<double, 5> con = blend(-kContract);
      const double f_con = logistic_sse(con, x, y);
      --budget;
      if (f_con < sse[ord[dim]]) {
        simplex[ord[dim]] = con;
        sse[ord[dim]] = f_con;
      } else {
        for (int k = 1; k <= dim; ++k) {
          for (int d = 0; d < dim; ++d)
            simplex[ord[k]][d] =
                simplex[ord[0]][d] + kShrink * (simplex[ord[k]][d] - simplex[ord[0]][d]);
          sse[ord[k]] = logistic_sse(simplex[ord[k]], x, y);
        }
        budget -= dim;
      }
    }
  }
  std::sort(ord.begin(), ord.end(), [&sse](int a, int b) { return sse[a] < sse[b]; });
  return {simplex[ord[0]], sse[ord[0]]};
}

struct LinearFit {
  double slope = 0.0, intercept = 0.0, sse = 0.0;
};

inline LinearFit ols_line(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  LinearFit f;
  f.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  f.intercept = my - f.slope * mx;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = f.slope * x[i] + f.intercept - y[i];
    f.sse += d * d;
  }
  return f;
}

}  // namespace detail

/// Least-squares fit of the five-parameter logistic by simplex descent.
/// The straight line is a member of the family (b1 = 0), so the fit also
/// evaluates the least-squares line and keeps whichever residual is lower;
/// converged means the result is at least as good as that line.
inline LogisticFit fit_logistic(const std::vector<double>& pred,
                                const std::vector<double>& mos) {
  detail::require_pair(pred, mos, 1, "fit_logistic");
  LogisticFit out;
  if (pred.size() < 5) {
    out.converged = false;
    return out;
  }
  const std::size_t n = pred.size();
  double mean_pred = 0.0, mean_mos = 0.0;
  double lo = mos[0], hi = mos[0];
  for (std::size_t i = 0; i < n; ++i) {
    mean_pred += pred[i];
    mean_mos += mos[i];
    lo = std::min(lo, mos[i]);
    hi = std::max(hi, mos[i]);
  }
  mean_pred /= static_cast<double>(n);
  mean_mos /= static_cast<double>(n);
  double var_pred = 0.0;
  for (double v : pred) var_pred += (v - mean_pred) * (v - mean_pred);
  const double std_pred = std::sqrt(var_pred / static_cast<double>(n));

  const detail::LinearFit line = detail::ols_line(pred, mos);
  const std::array<double, 5> linear_params{0.0, std_pred > 0.0 ? 1.0 / std_pred : 1.0,
                                            mean_pred, line.slope, line.intercept};

  std::array<double, 5> best{hi - lo, std_pred > 0.0 ? 1.0 / std_pred : 1.0, mean_pred, 0.0,
                             mean_mos};
  double best_sse = detail::logistic_sse(best, pred, mos);

  int budget = 5000;
  // A couple of restarts from the running best recover from simplex collapse.
  std::array<std::array<double, 5>, 3> starts{best, linear_params, best};
  for (std::size_t s = 0; s < starts.size() && budget > 0; ++s) {
    const std::array<double, 5> start = s == 2 ? best : starts[s];
    auto [params, sse] = detail::nelder_mead(start, pred, mos, budget);
    if (sse < best_sse) {
      best = params;
      best_sse = sse;
    }
  }
  if (line.sse < best_sse) {
    best = linear_params;
    best_sse = line.sse;
  }

  out.params = {best[0], best[1], best[2], best[3], best[4]};
  out.residual = best_sse;
  out.converged = best_sse <= line.sse * (1.0 + 1e-12) + 1e-30;
  return out;
}

/// Correlation pair plus fit diagnostics for one scorer/dataset cell.
struct EvalReport {
  double plcc = std::numeric_limits<double>::quiet_NaN();
  double srcc = std::numeric_limits<double>::quiet_NaN();
  long n = 0;
  LogisticParams logistic_params;
  bool fit_converged = false;
  double raw_pearson = std::numeric_limits<double>::quiet_NaN();
  std::string diagnostic;
};

/// PLCC with optional five-parameter logistic prefit plus SRCC, bundled with
/// diagnostics. Undefined correlations (zero variance) surface as NaN with a
/// note instead of throwing.
inline EvalReport evaluate_scores(const std::vector<double>& pred,
                                  const std::vector<double>& mos, bool prefit = true) {
  detail::require_pair(pred, mos, 3, "evaluate_scores");
  EvalReport rep;
  rep.n = static_cast<long>(pred.size());
  rep.raw_pearson = pearson(pred, mos);
  rep.srcc = srcc(pred, mos);
  if (std::isnan(rep.raw_pearson)) rep.diagnostic = "zero variance; correlations undefined";
  if (std::isnan(rep.srcc) && rep.diagnostic.empty())
    rep.diagnostic = "all ranks tied; srcc undefined";

  if (!prefit || pred.size() < 5 || std::isnan(rep.raw_pearson)) {
    rep.plcc = rep.raw_pearson;
    rep.fit_converged = false;
    if (prefit && pred.size() < 5)
      rep.diagnostic = "n < 5; logistic prefit skipped, raw pearson reported";
    return rep;
  }

  const LogisticFit fit = fit_logistic(pred, mos);
  rep.logistic_params = fit.params;
  rep.fit_converged = fit.converged;
  if (!fit.converged) {
    rep.plcc = rep.raw_pearson;
    rep.diagnostic = "logistic fit did not converge; raw pearson reported";
    return rep;
  }
  std::vector<double> mapped(pred.size());
  for (std::size_t i = 0; i < pred.size(); ++i) mapped[i] = logistic5(fit.params, pred[i]);
  const double fitted = pearson(mapped, mos);
  rep.plcc = std::isnan(fitted) ? rep.raw_pearson : fitted;
  if (fit.params.b4 < 0.0) rep.diagnostic = "logistic prefit has negative slope";
  return rep;
}

}  // namespace panobench
