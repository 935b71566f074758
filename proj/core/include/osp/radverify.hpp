#pragma once

#include "osp/pbw.hpp"
#include "osp/radcrystal.hpp"
#include "osp/verify.hpp"

#include <string>
#include <vector>

namespace osp {

// Algebraic crystal-base check on N: for every F^(c) of degree <= D and each direction,
// the operators built from the string decomposition stay in the lattice and reduce mod q
// to +-F^(f~ c) (or 0). An empty direction list means all of 1..m+n-1.
Report verify_lattice(const PBWAlgebra& A, int max_degree, const std::vector<int>& directions = {});

// Maximal vectors E_{a,c} of the three-root blocks: "b:i=m", "b:i>m", "d:i>m", "b/c:i<m".
const std::vector<std::string>& appendix_cases();
Report verify_appendix(const std::string& which, int max_ac = 4);

}  // namespace osp
