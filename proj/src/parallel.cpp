#include "jrpsched/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace jrpsched {

int max_workers() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace jrpsched
