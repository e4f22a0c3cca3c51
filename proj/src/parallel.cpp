#include "porocrack/parallel.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

namespace porocrack {

void init_threads_from_env() {
    const char* env = std::getenv("POROCRACK_THREADS");
    if (!env) return;
    try {
        const int n = std::stoi(env);
        if (n > 0) omp_set_num_threads(n);
    } catch (const std::exception&) {
        // ignore malformed values, keep the runtime default
    }
}

int current_max_threads() { return omp_get_max_threads(); }

}  // namespace porocrack
