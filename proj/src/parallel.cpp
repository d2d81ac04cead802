#include "cobga/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace cobga {

void parallel_for(int count, int workers, const std::function<void(int)>& fn) {
    if (workers < 1) workers = 1;
    if (workers == 1 || count <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int spawn = std::min(workers, count);
    pool.reserve(static_cast<size_t>(spawn));
    for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace cobga
