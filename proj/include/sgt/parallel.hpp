#ifndef SGT_PARALLEL_HPP
#define SGT_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace sgt {

struct CodeRange {
    std::uint64_t begin = 0;
    std::uint64_t end = 0;
};

/// Splits [0, total) into `chunks` contiguous ranges of near-equal length.
inline std::vector<CodeRange> split_range(std::uint64_t total, std::uint64_t chunks) {
    chunks = std::max<std::uint64_t>(1, std::min(chunks, total));
    std::vector<CodeRange> out;
    for (std::uint64_t c = 0; c < chunks; ++c)
        out.push_back({total * c / chunks, total * (c + 1) / chunks});
    return out;
}

/// Runs `work(chunk_index)` for every index in `todo` on `jobs` threads and
/// hands each result to `done` under a lock. Partial results are merged by
/// the caller, so the merge must be associative and commutative.
template <class Partial, class Work, class Done>
void run_chunks(const std::vector<std::size_t>& todo, unsigned jobs, Work&& work, Done&& done) {
    jobs = std::max(1u, jobs);
    std::atomic<std::size_t> next{0};
    std::mutex lock;
    std::exception_ptr failure;
    auto worker = [&] {
        for (;;) {
            std::size_t slot = next.fetch_add(1);
            if (slot >= todo.size())
                return;
            try {
                Partial part = work(todo[slot]);
                std::lock_guard guard(lock);
                done(todo[slot], std::move(part));
            } catch (...) {
                std::lock_guard guard(lock);
                if (!failure)
                    failure = std::current_exception();
                next.store(todo.size());
                return;
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace sgt

#endif // SGT_PARALLEL_HPP
