// SPDX-License-Identifier: Apache-2.0
//
// coopnet: hierarchical cooperative relaying for extended wireless networks
// Copyright (C) 2026 The coopnet contributors
// ------------------------------------------------------------------------

#include "coopnet/fit.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coopnet
{

namespace
{
double log_positive(double v)
{
    if (!(v > 0.0) || !std::isfinite(v))
        throw std::invalid_argument("log-log fit needs finite positive values");
    return std::log(v);
}

double r_squared(const Eigen::VectorXd &y, const Eigen::VectorXd &pred)
{
    const double ss_res = (y - pred).squaredNorm();
    const double ss_tot = (y.array() - y.mean()).matrix().squaredNorm();
    if (ss_tot <= 1e-300)
        return ss_res <= 1e-24 ? 1.0 : 0.0;
    return std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0);
}
} // namespace

ScalingFit fit_loglog(const std::vector<std::pair<double, double>> &points, std::string x_name, std::string y_name)
{
    if (points.size() < 3)
        throw std::invalid_argument("log-log fit needs at least 3 points");
    const auto n = static_cast<Eigen::Index>(points.size());
    Eigen::MatrixXd X(n, 2);
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i)
    {
        X(i, 0) = log_positive(points[static_cast<std::size_t>(i)].first);
        X(i, 1) = 1.0;
        y(i) = log_positive(points[static_cast<std::size_t>(i)].second);
    }
    const Eigen::VectorXd beta = X.colPivHouseholderQr().solve(y);
    ScalingFit f;
    f.x_name = std::move(x_name);
    f.y_name = std::move(y_name);
    f.points = points;
    f.slope = beta(0);
    f.intercept = beta(1);
    f.r_squared = r_squared(y, X * beta);
    return f;
}

PlaneFit fit_loglog_plane(const std::vector<PlanePoint> &points)
{
    if (points.size() < 4)
        throw std::invalid_argument("plane fit needs at least 4 points");
    const auto n = static_cast<Eigen::Index>(points.size());
    Eigen::MatrixXd X(n, 3);
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i)
    {
        const auto &p = points[static_cast<std::size_t>(i)];
        X(i, 0) = log_positive(p.x1);
        X(i, 1) = log_positive(p.x2);
        X(i, 2) = 1.0;
        y(i) = log_positive(p.y);
    }
    const Eigen::VectorXd beta = X.colPivHouseholderQr().solve(y);
    return {beta(0), beta(1), beta(2), r_squared(y, X * beta)};
}

} // namespace coopnet
