#include "tow/setup.hpp"

#include <deque>

namespace tow {

namespace {

void check_structure(const AdmissibleSetup& setup) {
    if (setup.n_points == 0 || setup.is_boundary.size() != setup.n_points ||
        setup.balls.size() != setup.n_points) {
        throw Error("setup arrays inconsistent with n_points");
    }
    bool any_boundary = false;
    bool any_interior = false;
    for (PointId x = 0; x < setup.n_points; ++x) {
        if (setup.boundary(x)) {
            any_boundary = true;
        } else {
            any_interior = true;
            if (setup.balls[x].empty()) throw EmptyBallError(x);
        }
        for (PointId y : setup.balls[x]) {
            if (y >= setup.n_points) {
                throw Error("ball of point " + std::to_string(x) + " references out-of-range point");
            }
        }
    }
    if (!any_boundary) throw NoBoundaryError();
    if (!any_interior) throw NoInteriorError();
}

}  // namespace

LayerDecomposition compute_layers(const AdmissibleSetup& setup) {
    check_structure(setup);

    // Reverse edges: y in balls[x] means x can step to y, so BFS from the
    // boundary walks y -> x.
    std::vector<std::vector<PointId>> reverse(setup.n_points);
    for (PointId x = 0; x < setup.n_points; ++x) {
        for (PointId y : setup.balls[x]) reverse[y].push_back(x);
    }

    LayerDecomposition out;
    out.layer_of.assign(setup.n_points, -1);
    std::deque<PointId> queue;
    for (PointId x = 0; x < setup.n_points; ++x) {
        if (setup.boundary(x)) {
            out.layer_of[x] = 0;
            queue.push_back(x);
        }
    }
    while (!queue.empty()) {
        PointId y = queue.front();
        queue.pop_front();
        for (PointId x : reverse[y]) {
            if (out.layer_of[x] < 0 && setup.interior(x)) {
                out.layer_of[x] = out.layer_of[y] + 1;
                queue.push_back(x);
            }
        }
    }
    out.max_layer = 0;
    for (int l : out.layer_of) {
        if (l > out.max_layer) out.max_layer = l;
    }
    return out;
}

LayerDecomposition validate(const AdmissibleSetup& setup) {
    LayerDecomposition layers = compute_layers(setup);
    for (PointId x = 0; x < setup.n_points; ++x) {
        if (layers.layer_of[x] < 0) {
            throw NotAdmissibleError(x, "no chain to the boundary");
        }
        if (layers.layer_of[x] >= setup.diam) {
            throw NotAdmissibleError(x, "shortest chain has length " +
                                            std::to_string(layers.layer_of[x]) +
                                            " >= declared diam " + std::to_string(setup.diam));
        }
    }
    return layers;
}

}  // namespace tow
