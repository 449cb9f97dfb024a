#pragma once

#include <vector>

#include "fracgreen/poly.hpp"

namespace fracgreen {

struct RootCluster {
  cplx location;
  int order = 1;
};

/// All roots of p (with multiplicity), Aberth-Ehrlich iteration.
/// Throws std::runtime_error if the iteration fails to converge.
std::vector<cplx> find_roots(const Poly& p);

/// Roots grouped into multiplicity clusters, each center re-polished by a
/// Newton iteration on the (m-1)-th derivative. Accuracy ~1e-12 relative for
/// the degrees this pipeline produces (den degree <= 8).
std::vector<RootCluster> find_root_clusters(const Poly& p);

}  // namespace fracgreen
