#include "riesz/summation.hpp"
#include "riesz/random.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace riesz {

double reduce_rows(std::size_t n, const std::function<double(std::size_t)>& row,
                   const ReductionPolicy& policy) {
    const std::size_t chunks = std::clamp<std::size_t>(policy.chunks, 1, std::max<std::size_t>(n, 1));
    std::vector<double> partial(chunks, 0.0);

    auto run_chunk = [&](std::size_t c) {
        const std::size_t lo = n * c / chunks;
        const std::size_t hi = n * (c + 1) / chunks;
        NeumaierSum acc;
        for (std::size_t i = lo; i < hi; ++i) acc.add(row(i));
        partial[c] = acc.value();
    };

    parallel_for(chunks, policy.threads, run_chunk);

    NeumaierSum total;
    for (double p : partial) total.add(p);
    return total.value();
}

void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& body) {
    threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
    if (threads == 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i = t; i < n; i += threads) body(i);
                } catch (...) {
                    const std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u = 0.0, v = 0.0, q = 0.0;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        q = u * u + v * v;
    } while (q >= 1.0 || q == 0.0);
    const double f = std::sqrt(-2.0 * std::log(q) / q);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
}

}  // namespace riesz
