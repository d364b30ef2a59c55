#include "cosetlab/kernels/exec.hpp"

#include <omp.h>

namespace cosetlab::kernels {

void set_threads(int n) {
    if (n > 0) omp_set_num_threads(n);
}

int max_threads() { return omp_get_max_threads(); }

std::string to_string(Exec e) { return e == Exec::serial ? "serial" : "parallel"; }

}  // namespace cosetlab::kernels
