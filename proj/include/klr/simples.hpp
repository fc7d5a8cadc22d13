#pragma once

#include <vector>

#include "klr/cyclotomic.hpp"

namespace klr {

struct SimplesReport {
    // dimension of the centre of A / rad A
    int count = 0;
    int dim = 0;
    int radical_dim = 0;
    // the centre of A / rad A is spanned by orthogonal idempotents found over Q
    bool split = false;
    // those idempotents, as representatives in A
    std::vector<Elem> idempotents;
};

// Number of simple modules of A over Q from the trace-form radical. Advisory
// unless `split` is set.
SimplesReport count_simples(const CycAlgebra& A);

}  // namespace klr
