#include "gcn/sweep.hpp"

#include <omp.h>

namespace gcn {

int max_threads() { return omp_get_max_threads(); }

}  // namespace gcn
