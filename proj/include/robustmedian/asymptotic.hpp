// Closed-form asymptotic robustness measures for the sign-test interval:
// maximum asymptotic length under contamination, length/power breakdown
// points, consistency distance, the tightest limiting endpoints of any
// nonparametric eps-robust interval, and the limiting length of the
// parametric competitor over the normal neighborhood.
//
// "Unbounded" is the distinguished value +infinity, never an exception,
// so sweep tables can render it.

#pragma once

#include <utility>

#include "robustmedian/distributions.hpp"

namespace robmed {

// F^{-1}{(1+eps)/(2(1-delta))} - F^{-1}{(1-eps)/(2(1-delta))} for
// delta < (1-eps)/2; +infinity otherwise. Requires eps, delta in [0, 1/2).
double max_asymptotic_length(const TargetDistribution& dist, double eps,
                             double delta);

// Actual contamination fraction at which the maximum asymptotic length
// becomes infinite: (1 - eps)/2.
double length_breakdown(double eps);

// The interval family keeps finite worst-case length at delta = eps exactly
// when eps < 1/3 (strict).
bool is_length_robust(double eps);

// Tightest possible limiting endpoints (A_max, B_min) =
// (F^{-1}((1-eps)/2), F^{-1}((1+eps)/2)) of any nonparametric eps-robust
// interval with converging limits; their difference equals
// max_asymptotic_length(dist, eps, 0).
std::pair<double, double> optimal_limit_bounds(const TargetDistribution& dist,
                                               double eps);

// Smallest alternative shift beyond which test power tends to 1 uniformly
// over the delta-neighborhood: F^{-1}{(1+eps)/(2(1-delta))}; +infinity when
// delta >= (1-eps)/2.
double consistency_distance(const TargetDistribution& dist, double eps,
                            double delta);

// (1 - eps)/2, same form as the length breakdown.
double power_breakdown(double eps);

// eps < 1/3, strict.
bool is_power_robust(double eps);

// Limiting length of the parametric robust interval over the normal
// neighborhood: 2 Phi^{-1}[1 / {2(1-eps)}]; contamination-independent.
double parametric_length(double eps);

}  // namespace robmed
