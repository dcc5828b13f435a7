#pragma once

#include "sptree/graphs.hpp"
#include "sptree/mp.hpp"

namespace sptree::graphs {

// log det* of the Laplacian evaluated from the closed-form eigenvalues at the
// current working precision. Throws CapExceeded past `cap` eigenvalues.
mp::Real log_det_star_mp(const GraphSpec& spec, std::size_t cap = kDefaultEnumerationCap);

} // namespace sptree::graphs
