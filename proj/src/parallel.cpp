#include "fpcover/parallel.hpp"

#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

namespace fpcover::par {

namespace {

int env_default_workers() {
    if (const char* env = std::getenv("COVER_KCENTER_THREADS")) {
        const int parsed = std::atoi(env);
        if (parsed >= 1) return parsed;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw >= 1 ? static_cast<int>(hw) : 1;
}

// Persistent worker pool. Jobs are published under a generation counter;
// workers pull chunk indices from a shared atomic until the job drains.
class Pool {
public:
    static Pool& instance() {
        static Pool pool;
        return pool;
    }

    int cap() {
        std::lock_guard<std::mutex> lock(mutex_);
        return cap_;
    }

    void set_cap(int workers) {
        std::lock_guard<std::mutex> lock(mutex_);
        cap_ = workers >= 1 ? workers : env_default_workers();
    }

    void run(std::size_t nchunks,
             const std::function<void(std::size_t)>& chunk_fn) {
        if (nchunks <= 1) {
            if (nchunks == 1) chunk_fn(0);
            return;
        }
        {
            std::unique_lock<std::mutex> lock(mutex_);
            ensure_workers_locked(static_cast<std::size_t>(cap_) - 1);
            job_fn_ = &chunk_fn;
            job_chunks_ = nchunks;
            next_chunk_.store(0, std::memory_order_relaxed);
            remaining_.store(static_cast<std::ptrdiff_t>(nchunks),
                             std::memory_order_relaxed);
            ++generation_;
            work_cv_.notify_all();
        }
        // The calling thread participates; it counts against the worker cap.
        drain(chunk_fn, nchunks);
        std::unique_lock<std::mutex> lock(mutex_);
        done_cv_.wait(lock, [&] { return remaining_.load(std::memory_order_acquire) == 0; });
        job_fn_ = nullptr;
    }

private:
    Pool() : cap_(env_default_workers()) {}

    ~Pool() {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            stop_ = true;
            work_cv_.notify_all();
        }
        for (auto& t : threads_) t.join();
    }

    void ensure_workers_locked(std::size_t wanted) {
        while (threads_.size() < wanted) {
            threads_.emplace_back([this] { worker_loop(); });
        }
    }

    void drain(const std::function<void(std::size_t)>& chunk_fn, std::size_t nchunks) {
        while (true) {
            const std::size_t c = next_chunk_.fetch_add(1, std::memory_order_relaxed);
            if (c >= nchunks) break;
            chunk_fn(c);
            if (remaining_.fetch_sub(1, std::memory_order_acq_rel) == 1) {
                std::lock_guard<std::mutex> lock(mutex_);
                done_cv_.notify_all();
            }
        }
    }

    void worker_loop() {
        std::uint64_t seen_generation = 0;
        while (true) {
            const std::function<void(std::size_t)>* fn = nullptr;
            std::size_t nchunks = 0;
            {
                std::unique_lock<std::mutex> lock(mutex_);
                work_cv_.wait(lock, [&] { return stop_ || generation_ != seen_generation; });
                if (stop_) return;
                seen_generation = generation_;
                fn = job_fn_;
                nchunks = job_chunks_;
            }
            if (fn != nullptr) drain(*fn, nchunks);
        }
    }

    std::mutex mutex_;
    std::condition_variable work_cv_;
    std::condition_variable done_cv_;
    std::vector<std::thread> threads_;
    const std::function<void(std::size_t)>* job_fn_ = nullptr;
    std::size_t job_chunks_ = 0;
    std::atomic<std::size_t> next_chunk_{0};
    std::atomic<std::ptrdiff_t> remaining_{0};
    std::uint64_t generation_ = 0;
    bool stop_ = false;
    int cap_;
};

std::size_t plan_chunks(std::size_t n, std::size_t min_grain, int cap) {
    if (n == 0) return 0;
    if (min_grain == 0) min_grain = 1;
    const std::size_t by_grain = (n + min_grain - 1) / min_grain;
    std::size_t chunks = static_cast<std::size_t>(cap);
    if (by_grain < chunks) chunks = by_grain;
    if (chunks < 1) chunks = 1;
    return chunks;
}

}  // namespace

int max_workers() { return Pool::instance().cap(); }

void set_max_workers(int workers) { Pool::instance().set_cap(workers); }

void for_chunks(std::size_t n, std::size_t min_grain,
                const std::function<void(std::size_t, std::size_t, std::size_t)>& f) {
    const std::size_t chunks = plan_chunks(n, min_grain, max_workers());
    if (chunks == 0) return;
    if (chunks == 1) {
        f(0, n, 0);
        return;
    }
    Pool::instance().run(chunks, [&](std::size_t c) {
        const std::size_t begin = n * c / chunks;
        const std::size_t end = n * (c + 1) / chunks;
        f(begin, end, c);
    });
}

Best reduce_max(std::size_t n, std::size_t min_grain,
                const std::function<Best(std::size_t, std::size_t)>& chunk_fn) {
    const std::size_t chunks = plan_chunks(n, min_grain, max_workers());
    Best identity{-std::numeric_limits<float>::infinity(),
                  std::numeric_limits<std::size_t>::max()};
    if (chunks == 0) return identity;
    if (chunks == 1) return chunk_fn(0, n);

    std::vector<Best> results(chunks, identity);
    Pool::instance().run(chunks, [&](std::size_t c) {
        const std::size_t begin = n * c / chunks;
        const std::size_t end = n * (c + 1) / chunks;
        results[c] = chunk_fn(begin, end);
    });
    Best best = identity;
    for (const Best& r : results) best = merge_max(best, r);
    return best;
}

}  // namespace fpcover::par
