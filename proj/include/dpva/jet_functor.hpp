#pragma once

#include "dpva/double_bracket.hpp"
#include "dpva/dpva.hpp"

namespace dpva {

// J: lambda-rules <<g^(k)_l h^(l)>> = (-l)^k (d+l)^l <<g,h>> on the jet quiver with orders <= cap
DPVAlgebra jet_of_dpa(const DPAlgebra& A, int cap);

// Q: kill all generators of order >= 1; bracket is the lambda^0 coefficient
DPAlgebra quotient_Q(const DPVAlgebra& V);

// drops every term containing a letter of jet order >= 1, rehomed on q
NCPoly kill_jets(const NCPoly& p, const QuiverPtr& q);
Tensor2 kill_jets(const Tensor2& t, const QuiverPtr& q);

CheckReport check_QJ_roundtrip(const DPAlgebra& A, int cap = 4);

}  // namespace dpva
