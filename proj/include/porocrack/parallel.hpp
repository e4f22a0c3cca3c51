#ifndef POROCRACK_PARALLEL_HPP
#define POROCRACK_PARALLEL_HPP

namespace porocrack {

// Applies the POROCRACK_THREADS worker cap (0 or unset: runtime default).
void init_threads_from_env();

int current_max_threads();

}  // namespace porocrack

#endif
