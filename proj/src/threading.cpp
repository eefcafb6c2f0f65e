#include "toric/threading.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace toric::parallel {

namespace {

int default_budget() {
    if (const char* env = std::getenv("TDF_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) return static_cast<int>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::atomic<int> g_budget{0};  // 0 = not yet initialized

}  // namespace

int worker_budget() {
    int b = g_budget.load(std::memory_order_relaxed);
    if (b == 0) {
        b = default_budget();
        g_budget.store(b, std::memory_order_relaxed);
    }
    return b;
}

void set_worker_budget(int n) {
    g_budget.store(std::max(1, n), std::memory_order_relaxed);
}

void reset_worker_budget() {
    g_budget.store(default_budget(), std::memory_order_relaxed);
}

std::size_t chunk_count(std::size_t count) {
    return std::min<std::size_t>(count, static_cast<std::size_t>(worker_budget()));
}

void run_chunked(std::size_t count,
                 const std::function<void(std::size_t, std::size_t, std::size_t)>& work) {
    if (count == 0) return;
    std::size_t chunks = chunk_count(count);
    if (chunks <= 1) {
        work(0, count, 0);
        return;
    }
    std::size_t base = count / chunks;
    std::size_t rem = count % chunks;
    std::vector<std::thread> threads;
    threads.reserve(chunks);
    std::vector<std::exception_ptr> errors(chunks);
    std::size_t begin = 0;
    for (std::size_t c = 0; c < chunks; ++c) {
        std::size_t len = base + (c < rem ? 1 : 0);
        std::size_t end = begin + len;
        threads.emplace_back([&, begin, end, c] {
            try {
                work(begin, end, c);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
        begin = end;
    }
    for (auto& th : threads) th.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace toric::parallel
