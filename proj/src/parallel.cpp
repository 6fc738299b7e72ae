#include "clocksim/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace clocksim {

Exec default_exec() {
#ifdef _OPENMP
    return Exec::parallel;
#else
    return Exec::serial;
#endif
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace clocksim
