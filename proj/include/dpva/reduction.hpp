#pragma once

#include <vector>

#include "dpva/double_bracket.hpp"
#include "dpva/dpva.hpp"
#include "dpva/groebner.hpp"
#include "dpva/rep_algebra.hpp"

namespace dpva {

struct MomentDatum {
    NCPoly mu;
    std::vector<NCPoly> parts;  // e_s mu e_s
    std::vector<Scalar> zeta;   // one per vertex
};

// splits mu into its vertex components; zeta defaults to 0
MomentDatum make_moment(const NCPoly& mu, std::vector<Scalar> zeta = {});
MomentDatum rehome_moment(const MomentDatum& m, const QuiverPtr& q);

// sum over the double quiver of eps(a) a a*
MomentDatum quiver_moment(const QuiverPtr& q);

// <<mu_s, g>> = g e_s (x) e_s - e_s (x) e_s g for every vertex s and generator g
CheckReport nc_moment_check(const DPAlgebra& A, const MomentDatum& m);
// lambda^0 excess and every higher coefficient of <<mu_s _l g>> lie in ker(m o sigma); generators of order <= max_order
CheckReport vertex_moment_check(const DPVAlgebra& V, const MomentDatum& m, int max_order = 3);

// {tr(xi X(mu)), g_kl} = xi.g_kl for block-elementary xi
CheckReport comm_comoment_check(const DPAlgebra& A, const MomentDatum& m, const DimVector& dims);
// {tr(xi X(mu)) _l F} = sum_k l^k/k! xi_(k) F on the jets, orders <= cap
CheckReport comm_comoment_jet_check(const DPAlgebra& A, const MomentDatum& m, const DimVector& dims, int cap = 2);

// entries of X(mu_s) - zeta_s P_s; with jets > 0 also their d^k for k <= jets (a finite slice)
IdealBasis reduction_ideal(const QuiverPtr& q, const MomentDatum& m, const DimVector& dims, int jets = 0,
                           int degree_cap = 6);

// bracket of the lifts, then normal form
CommDiffPoly reduced_bracket(const CommPA& P, const CommDiffPoly& F, const CommDiffPoly& G, const IdealBasis& b);
LCPoly reduced_bracket(const CommPVA& W, const CommDiffPoly& F, const CommDiffPoly& G, const IdealBasis& b);

// jet-then-reduce against reduce-then-jet on traces of closed words, plus ideal stability and lift changes
CheckReport hamred_commute_check(const DPAlgebra& A, const MomentDatum& m, const DimVector& dims, int cap = 1,
                                 int degree_cap = 6, int word_len = 3, Exec ex = Exec::Parallel);

// the left/right moment maps of the SympGL example
CheckReport appendix_catalog_check();

}  // namespace dpva
