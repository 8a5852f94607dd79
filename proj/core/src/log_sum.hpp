#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace hyperlab::detail {

// Neumaier compensated summation; log-products over long horizons stay
// accurate to a few ulps of the total.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }
    double sum() const noexcept { return sum_; }
    double compensation() const noexcept { return comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Prefix sums of log-weights over [base, top] with compensation terms kept
// separately so differences do not lose the low-order bits.
class LogPrefix {
public:
    template <class LogWeight>
    LogPrefix(long base, long top, LogWeight&& log_weight) : base_(base) {
        const auto n = static_cast<std::size_t>(top - base + 1);
        sums_.resize(n);
        comps_.resize(n);
        CompensatedSum acc;
        for (std::size_t i = 1; i < n; ++i) {
            acc.add(log_weight(base + static_cast<long>(i)));
            sums_[i] = acc.sum();
            comps_[i] = acc.compensation();
        }
    }

    /// sum of log w_i for i in (from, to].
    double range(long from, long to) const noexcept {
        const auto a = static_cast<std::size_t>(from - base_);
        const auto b = static_cast<std::size_t>(to - base_);
        return (sums_[b] - sums_[a]) + (comps_[b] - comps_[a]);
    }

private:
    long base_;
    std::vector<double> sums_;
    std::vector<double> comps_;
};

}  // namespace hyperlab::detail
