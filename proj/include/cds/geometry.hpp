#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cds/embedding.hpp"

namespace cds::geometry {

/// Curvature summary of one ordered embedding sequence.
/// total = sum(angles); mean over defined angles only (0 when none);
/// smoothness = 1 / (1 + mean) in (0, 1].
struct CurvatureReport {
    std::vector<double> angles;  // each in [0, pi], length max(n-2,0) minus skips
    double total = 0.0;
    double mean = 0.0;
    double smoothness = 1.0;
    std::size_t skipped_degenerate = 0;  // interior positions with a zero-length displacement
};

struct CorrelationResult {
    double r = 0.0;
    std::size_t n_points = 0;
    std::vector<std::pair<double, double>> inputs;  // retained for audit
};

/// Turning angle at `cur`: angle between (cur - prev) and (next - cur),
/// cosine clipped to [-1, 1]. Returns nullopt when either displacement has
/// zero norm; duplicates are data artifacts, not turns.
std::optional<double> turning_angle(std::span<const double> prev, std::span<const double> cur,
                                    std::span<const double> next);
std::optional<double> turning_angle(const embedding::EmbeddingVector& prev,
                                    const embedding::EmbeddingVector& cur,
                                    const embedding::EmbeddingVector& next);

CurvatureReport curvature_report(const std::vector<std::vector<double>>& points);
CurvatureReport curvature_report(const std::vector<embedding::EmbeddingVector>& points);

/// Product-moment correlation. Errors on length mismatch, n < 2, or a
/// constant series (r undefined).
CorrelationResult pearson(const std::vector<double>& xs, const std::vector<double>& ys);

/// Z-scores using the population standard deviation. Errors on constant
/// input or n < 2.
std::vector<double> normalize_scores(const std::vector<double>& xs);

/// Compensated (Kahan) sum; keeps long curvature totals permutation-stable.
double kahan_sum(std::span<const double> values);

} // namespace cds::geometry
