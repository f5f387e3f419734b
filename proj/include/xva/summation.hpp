#pragma once

#include <cstddef>
#include <span>

namespace xva {

// Fixed-shape pairwise sum. The reduction tree depends only on the array
// length, so the result is independent of how the values were produced
// (serial loop or any worker partition) and numerically stable in n.
double pairwise_sum(std::span<const double> xs) noexcept;

struct SampleStats {
    double mean = 0.0;
    double std_error = 0.0;  // sample standard deviation of the mean
    std::size_t n = 0;
};

// Two-pass mean and standard error, both reduced pairwise.
SampleStats summarize_samples(std::span<const double> xs);

}  // namespace xva
