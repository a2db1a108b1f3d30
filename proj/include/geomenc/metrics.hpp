#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <span>
#include <vector>

#include "geomenc/errors.hpp"

namespace geomenc {

namespace detail {

struct SumsOfSquares {
  double ss_res = 0;
  double ss_tot = 0;
};

inline SumsOfSquares sums_of_squares(std::span<const double> y_true,
                                     std::span<const double> y_pred) {
  if (y_true.size() != y_pred.size())
    throw_error(ErrorCode::argument, "r2: series lengths differ");
  if (y_true.empty()) throw_error(ErrorCode::argument, "r2: empty series");
  double mean = std::accumulate(y_true.begin(), y_true.end(), 0.0) /
                static_cast<double>(y_true.size());
  SumsOfSquares s;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    double r = y_true[i] - y_pred[i];
    double t = y_true[i] - mean;
    s.ss_res += r * r;
    s.ss_tot += t * t;
  }
  return s;
}

}  // namespace detail

// Coefficient of determination, 1 - SS_res / SS_tot.
inline double r2(std::span<const double> y_true, std::span<const double> y_pred) {
  auto s = detail::sums_of_squares(y_true, y_pred);
  if (s.ss_tot <= 0)
    throw_error(ErrorCode::domain, "r2 is undefined for zero-variance targets");
  return 1.0 - s.ss_res / s.ss_tot;
}

// Pools residual and total sums of squares across two prediction series
// before forming the ratio.
inline double pooled_r2(std::span<const double> y_true_1,
                        std::span<const double> y_pred_1,
                        std::span<const double> y_true_2,
                        std::span<const double> y_pred_2) {
  auto s1 = detail::sums_of_squares(y_true_1, y_pred_1);
  auto s2 = detail::sums_of_squares(y_true_2, y_pred_2);
  double tot = s1.ss_tot + s2.ss_tot;
  if (tot <= 0)
    throw_error(ErrorCode::domain, "pooled_r2 is undefined for zero-variance targets");
  return 1.0 - (s1.ss_res + s2.ss_res) / tot;
}

// Rank-based ROC AUC: the probability that a positive case receives a larger
// score than a negative one, ties counted one half (Mann-Whitney U).
inline double roc_auc(std::span<const int> labels, std::span<const double> scores) {
  if (labels.size() != scores.size())
    throw_error(ErrorCode::argument, "roc_auc: series lengths differ");
  const std::size_t n = labels.size();
  std::size_t n_pos = 0;
  for (int l : labels) n_pos += (l != 0);
  std::size_t n_neg = n - n_pos;
  if (n_pos == 0 || n_neg == 0)
    throw_error(ErrorCode::domain, "roc_auc needs both classes present");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] < scores[b];
  });

  // Average ranks within tie groups; sum the positive ranks.
  double pos_rank_sum = 0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && scores[order[j]] == scores[order[i]]) ++j;
    double avg_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2;
    for (std::size_t k = i; k < j; ++k)
      if (labels[order[k]] != 0) pos_rank_sum += avg_rank;
    i = j;
  }
  double u = pos_rank_sum -
             static_cast<double>(n_pos) * (static_cast<double>(n_pos) + 1) / 2;
  return u / (static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

// Recovers the orientation angle from predicted cos(2 theta), sin(2 theta);
// result folded into [0, pi).
inline double angle_from_cos_sin(double c, double s) {
  if (std::hypot(c, s) < 1e-9)
    throw_error(ErrorCode::domain, "angle undefined near zero magnitude");
  double a = std::atan2(s, c) / 2;
  const double pi = std::numbers::pi;
  if (a < 0) a += pi;
  if (a >= pi) a -= pi;
  return a;
}

}  // namespace geomenc
