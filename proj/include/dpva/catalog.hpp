#pragma once

#include <string>
#include <vector>

#include "dpva/double_bracket.hpp"
#include "dpva/dpva.hpp"

namespace dpva {

// Programmatic constructions of the bundled examples.
DPAlgebra make_ku(const Scalar& alpha, const Scalar& beta, const Scalar& gamma);  // k[a]
DPAlgebra make_symp();                                                            // k<a,b>
DPAlgebra make_symp_gl();                                                         // k<a,b^{+-1}>
DPAlgebra make_qpq(int p, int q, int c);                                          // Q_{p,q} with cutoff c
DPAlgebra make_zero(int loops);                                                   // zero bracket on loops

// <<u_l u>> = 1(x)u - u(x)1 + eps (1(x)1) l on the jets of one loop
DPVAlgebra make_kupva(const Scalar& eps, int cap = 8);

}  // namespace dpva
