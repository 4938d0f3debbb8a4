#include "rda/parallel.hpp"

#include <cstdlib>

namespace rda {

int env_thread_count() {
    const char* env = std::getenv("RDA_THREADS");
    if (!env) return 1;
    int n = std::atoi(env);
    return n > 0 ? n : 1;
}

}  // namespace rda
