#include "matfun/tolerances.hpp"

namespace matfun {

Tolerances& tolerances() {
    static Tolerances instance;
    return instance;
}

void scale_tolerances(double factor) {
    Tolerances& t = tolerances();
    t.pole *= factor;
    t.trim *= factor;
    t.gcd_cutoff *= factor;
    t.node_sep *= factor;
    t.interp_residual *= factor;
    t.cluster *= factor;
    t.root_residual *= factor;
    t.matrix_identity *= factor;
    t.rank *= factor;
    t.jordan *= factor;
}

}  // namespace matfun
