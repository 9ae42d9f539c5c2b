#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tow/errors.hpp"

namespace tow {

using PointId = std::uint32_t;

/**
 * Finite ground set X with a boundary mask and a per-point ball relation.
 *
 * Points are dense indices in [0, n_points). `is_boundary[x]` marks the
 * boundary part X\Y; every interior point x in Y carries a nonempty list
 * balls[x] of points reachable in one game move. No symmetry is assumed:
 * y in balls[x] does not imply x in balls[y].
 *
 * `diam` is the user-declared diameter: every interior point must reach the
 * boundary through balls in strictly fewer than `diam` steps. It is checked
 * by validate(), never inferred, so a setup with correct chains but a wrong
 * declared diameter fails loudly.
 */
struct AdmissibleSetup {
    std::size_t n_points = 0;
    std::vector<bool> is_boundary;            // true <=> point in X\Y
    std::vector<std::vector<PointId>> balls;  // empty for boundary points
    int diam = 0;

    bool boundary(PointId x) const { return is_boundary[x]; }
    bool interior(PointId x) const { return !is_boundary[x]; }
};

/**
 * Boundary-distance layers: layer_of[x] is the minimal number of ball steps
 * from x to the boundary (0 on the boundary itself). A negative entry marks
 * a point with no chain to the boundary at all.
 */
struct LayerDecomposition {
    std::vector<int> layer_of;
    int max_layer = 0;
};

/**
 * Computes minimal boundary-distance layers by multi-source BFS from the
 * boundary along reversed ball edges. Checks structural well-formedness
 * (indices in range, nonempty boundary/interior, nonempty balls) but not
 * reachability; unreachable points get layer -1.
 */
LayerDecomposition compute_layers(const AdmissibleSetup& setup);

/**
 * Validates admissibility: every interior point reaches the boundary in
 * fewer than `diam` steps. Returns the minimal-chain-length layers.
 *
 * Throws NoBoundaryError, NoInteriorError, EmptyBallError, or
 * NotAdmissibleError.
 */
LayerDecomposition validate(const AdmissibleSetup& setup);

}  // namespace tow
