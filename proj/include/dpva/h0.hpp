#pragma once

#include <vector>

#include "dpva/double_bracket.hpp"
#include "dpva/dpva.hpp"
#include "dpva/rep_algebra.hpp"

namespace dpva {

// Canonical necklace: cyclically reduced (inverse pairs across the seam cancel), then the
// minimal rotation under the letter order (Booth). Requires a closed word.
Word necklace_of(const Quiver& q, const Word& w);

// Element of H0 = A/[A,A]: an NCPoly whose keys are canonical necklaces.
using H0Elem = NCPoly;
using LH0 = LPoly<H0Elem>;
using LMH0 = LMPoly<H0Elem>;

H0Elem h0_project(const NCPoly& p);
H0Elem h0_del(const H0Elem& h, int k = 1);  // expand, differentiate, re-project
// (-lambda)^k (lambda + d)^l P
LH0 h0_sesqui(const LH0& P, int k, int l);

H0Elem h0_lie(const DPAlgebra& A, const NCPoly& x, const NCPoly& y);
LH0 h0v_lie(const DPVAlgebra& V, const NCPoly& x, const NCPoly& y);

CommDiffPoly trace_of_h0(const RepSpace& R, const H0Elem& h);
LCPoly trace_of_h0(const RepSpace& R, const LH0& h);

// canonical necklaces of closed words of length 1..max_len (plus idempotents when asked), deduplicated
std::vector<Word> necklaces(const Quiver& q, int max_len, int max_order = 0, bool with_idems = false);

std::string lh0_str(const LH0& h);

// antisymmetry and Jacobi of h0_lie on necklaces of length <= max_len
CheckReport h0_axioms_check(const DPAlgebra& A, int max_len = 3, Exec ex = Exec::Parallel);
// sesquilinearity, skewsymmetry and Jacobi of the Lie vertex bracket on necklaces of length <= max_len
CheckReport h0v_axioms_check(const DPVAlgebra& V, int max_len = 2, int max_order = 1, Exec ex = Exec::Parallel);

// the cube faces
CheckReport face_front_check(const DPAlgebra& A, const DimVector& dims, int word_len = 3, Exec ex = Exec::Parallel);
CheckReport face_left_check(const DPAlgebra& A, int cap = 2, int word_len = 3, Exec ex = Exec::Parallel);
CheckReport face_bottom_check(const DPAlgebra& A, const DimVector& dims, int cap = 2, int word_len = 3,
                              Exec ex = Exec::Parallel);
CheckReport face_back_check(const DPAlgebra& A, const DimVector& dims, int cap = 2, int word_len = 3,
                            Exec ex = Exec::Parallel);

CheckReport lift_independence_check(const DPAlgebra& A, std::uint64_t seed = 0, int samples = 3);
CheckReport lift_independence_check(const DPVAlgebra& V, std::uint64_t seed = 0, int samples = 3);

}  // namespace dpva
