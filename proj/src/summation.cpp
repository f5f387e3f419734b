#include "xva/summation.hpp"

#include <cmath>
#include <vector>

namespace xva {

namespace {
constexpr std::size_t kLeafSize = 32;

double pairwise_sum_impl(const double* xs, std::size_t n) noexcept {
    if (n <= kLeafSize) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += xs[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum_impl(xs, half) + pairwise_sum_impl(xs + half, n - half);
}
}  // namespace

double pairwise_sum(std::span<const double> xs) noexcept {
    return pairwise_sum_impl(xs.data(), xs.size());
}

SampleStats summarize_samples(std::span<const double> xs) {
    SampleStats st;
    st.n = xs.size();
    if (st.n == 0) return st;
    st.mean = pairwise_sum(xs) / static_cast<double>(st.n);
    if (st.n == 1) return st;
    std::vector<double> sq(st.n);
    for (std::size_t i = 0; i < st.n; ++i) {
        const double d = xs[i] - st.mean;
        sq[i] = d * d;
    }
    const double var = pairwise_sum(sq) / static_cast<double>(st.n - 1);
    st.std_error = std::sqrt(var / static_cast<double>(st.n));
    return st;
}

}  // namespace xva
