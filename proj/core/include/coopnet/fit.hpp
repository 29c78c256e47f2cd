// SPDX-License-Identifier: Apache-2.0
//
// coopnet: hierarchical cooperative relaying for extended wireless networks
// Copyright (C) 2026 The coopnet contributors
// ------------------------------------------------------------------------

#ifndef COOPNET_FIT_HPP
#define COOPNET_FIT_HPP

#include <string>
#include <utility>
#include <vector>

namespace coopnet
{

struct ScalingFit
{
    std::string x_name;
    std::string y_name;
    std::vector<std::pair<double, double>> points;
    double slope = 0.0;
    double intercept = 0.0; // in natural-log space
    double r_squared = 0.0;
};

// Least squares on (ln x, ln y). Needs >= 3 points with x, y > 0; throws std::invalid_argument.
// A perfectly flat response reports r_squared = 1.
ScalingFit fit_loglog(const std::vector<std::pair<double, double>> &points, std::string x_name = "x",
                      std::string y_name = "y");

// ln y = a ln x1 + b ln x2 + c. Needs >= 4 points.
struct PlaneFit
{
    double coef_x1 = 0.0;
    double coef_x2 = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

struct PlanePoint
{
    double x1, x2, y;
};

PlaneFit fit_loglog_plane(const std::vector<PlanePoint> &points);

} // namespace coopnet

#endif
