#pragma once

#include <cmath>
#include <cstddef>
#include <functional>

namespace riesz {

/// Neumaier (improved Kahan) compensated accumulator.
template <typename T>
class BasicNeumaierSum {
public:
    void add(T x) noexcept {
        const T t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    BasicNeumaierSum& operator+=(T x) noexcept {
        add(x);
        return *this;
    }

    T value() const noexcept { return sum_ + comp_; }

private:
    T sum_ = 0;
    T comp_ = 0;
};

using NeumaierSum = BasicNeumaierSum<double>;
using NeumaierSumLD = BasicNeumaierSum<long double>;

/// How an O(N²) pairwise reduction is split. The row range [0, N) is cut into
/// `chunks` contiguous blocks; each block is summed on its own and the block
/// results are combined in block order. The value depends on `chunks` only,
/// never on `threads`.
struct ReductionPolicy {
    std::size_t chunks = 1;
    std::size_t threads = 1;
};

/// Sums row(i) for i in [0, n) under `policy`. row(i) must be safe to call
/// concurrently for distinct i.
double reduce_rows(std::size_t n, const std::function<double(std::size_t)>& row,
                   const ReductionPolicy& policy = {});

/// Calls body(i) for i in [0, n), spreading indices round-robin over
/// `threads` workers. The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& body);

}  // namespace riesz
