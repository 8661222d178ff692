#include "tamekernel/parallel.hpp"

#include <cstdlib>
#include <string>

namespace tamekernel {

unsigned worker_count() {
    if (const char* env = std::getenv("TAMEKERNEL_THREADS")) {
        try {
            long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (...) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

namespace detail {
bool& inside_parallel_region() {
    thread_local bool inside = false;
    return inside;
}
}  // namespace detail

}  // namespace tamekernel
