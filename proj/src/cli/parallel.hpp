#pragma once

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

/*
  Ordered parallel map: results land in input order no matter how many
  workers run, so output bytes cannot depend on the worker count. The
  lowest-index exception wins when several inputs fail.
*/

namespace hecke::cli {

template <class T, class F>
std::vector<T> parallel_map(std::size_t count, int jobs, F&& fn) {
    std::vector<T> results(count);
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            results[i] = fn(i);
        return results;
    }
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    const int workers = std::min<std::size_t>(jobs, count);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    results[i] = fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& thread : threads)
        thread.join();
    for (const auto& error : errors)
        if (error)
            std::rethrow_exception(error);
    return results;
}

} // namespace hecke::cli
