#include "dpva/parallel.hpp"

#include <omp.h>

namespace dpva {

int worker_threads() { return omp_get_max_threads(); }

}  // namespace dpva
