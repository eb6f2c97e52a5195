#ifndef GCN_SWEEP_HPP
#define GCN_SWEEP_HPP

#include <cstddef>
#include <exception>
#include <vector>

namespace gcn {

enum class Exec { Serial, Parallel };

/// Evaluates f(0), ..., f(count-1) and returns the results in index order, so
/// the output is identical for both execution modes. If tasks throw, one of
/// the exceptions is rethrown after the loop.
template <class R, class F>
std::vector<R> index_map(std::size_t count, F&& f, Exec exec = Exec::Parallel)
{
    std::vector<R> out(count);
    if (exec == Exec::Serial) {
        for (std::size_t i = 0; i < count; ++i)
            out[i] = f(i);
        return out;
    }
    std::exception_ptr err;
    long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(gcn_sweep_error)
            if (!err)
                err = std::current_exception();
        }
    }
    if (err)
        std::rethrow_exception(err);
    return out;
}

int max_threads();

}  // namespace gcn

#endif
