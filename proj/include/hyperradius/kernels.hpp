#pragma once

#include <limits>
#include <span>
#include <vector>

#include "hyperradius/multiindex.hpp"

namespace hyperradius::kernels {

/// Neumaier-compensated accumulator. The majorant sums mix terms spanning
/// hundreds of orders of magnitude; naive accumulation loses the small ones.
class CompensatedSum {
  public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

int thread_count();

/// out[i] = f(slice[i]). The parallel variant splits the slice across OpenMP
/// threads; f must be pure.
template <class F>
void fill_exponents_serial(std::span<const MultiIndex> slice, std::vector<double>& out, F&& f) {
    out.resize(slice.size());
    for (std::size_t i = 0; i < slice.size(); ++i) out[i] = f(slice[i]);
}

template <class F>
void fill_exponents(std::span<const MultiIndex> slice, std::vector<double>& out, F&& f) {
    out.resize(slice.size());
    const std::int64_t n = static_cast<std::int64_t>(slice.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = f(slice[static_cast<std::size_t>(i)]);
}

// Reductions over a vector of log-domain contributions. Empty input gives
// -inf for max/log_sum_exp and 0 for sum_exp. Parallel results are
// deterministic for a fixed thread count (fixed chunking, in-order combine).

double max_serial(std::span<const double> v);
double max_parallel(std::span<const double> v);

double log_sum_exp_serial(std::span<const double> v);
double log_sum_exp_parallel(std::span<const double> v);

/// Kahan sum of exp(v[i]) in the linear domain; overflows to +inf honestly.
double sum_exp_serial(std::span<const double> v);
double sum_exp_parallel(std::span<const double> v);

} // namespace hyperradius::kernels
