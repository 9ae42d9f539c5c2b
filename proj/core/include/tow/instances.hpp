#pragma once

#include <cstdint>
#include <functional>

#include "tow/dpp.hpp"

namespace tow {

struct Instance {
    AdmissibleSetup setup;
    DppProblem problem;
};

struct SolvedInstance {
    AdmissibleSetup setup;
    DppProblem problem;
    ValueFunction solution;
};

/**
 * The five-cell quotient of the line segment game: X = R, Y = (0,2),
 * epsilon = 1, mu = 1/2, boundary values 0 on (-inf,0] and 12 on [2,inf).
 *
 * The open interval (x-1, x+1) meets the same set of cells for every x in a
 * given cell, so the game quotients exactly onto the cells
 *
 *   L = (-inf,0], A = (0,1), M = {1}, B = (1,2), R = [2,inf)
 *
 * (indices 0..4 in that order), with balls B(A) = {L,A,M,B},
 * B(M) = {A,M,B}, B(B) = {A,M,B,R}. The displayed boundary value 12 on the
 * right is the one that makes the shipped value functions exact fixed
 * points: for f == 0 that is (0,4,6,8,12), for f == 1 it is (0,6,9,10,12),
 * both verifiable by one sweep of rational arithmetic.
 *
 * f_const must be 0 or 1.
 */
SolvedInstance example_1_1(int f_const);

/**
 * 1-D grid discretization of the biased infinity-Laplacian equation on
 * (0,1): interior points are the grid points of spacing h in (0,1), padding
 * points in [-eps,0] and [1,1+eps] form the boundary, balls are closed
 * eps-balls intersected with the grid, mu = 1/2 - beta*eps/4 and the
 * per-step cost is (eps^2/2) * f_tilde.
 */
struct GridSpec1D {
    double h = 0.025;
    double eps = 0.1;  // must be an integer multiple of h
    double beta = 0.0;
    std::function<double(double)> f_tilde;          // running cost density
    std::function<double(double)> boundary_values;  // data on the padding
};

struct Grid1D {
    AdmissibleSetup setup;
    DppProblem problem;
    std::vector<double> coords;  // coordinate of each point
};

/// Throws InvalidMuError when beta*eps/4 >= 1/2.
Grid1D grid_1d(const GridSpec1D& spec);

/**
 * Random admissible instance, deterministic in the seed. Interior points
 * get a random rank; each ball contains one point of strictly smaller rank
 * (a boundary point counts as rank 0), which guarantees admissibility by
 * construction, plus up to max_ball - 1 arbitrary extra points. f is
 * uniform in [inf_f, inf_f + 1], F uniform in [-1, 1], mu uniform in
 * [0.2, 0.8].
 */
Instance random_admissible(std::size_t n, std::size_t n_boundary, std::size_t max_ball,
                           double inf_f, std::uint64_t seed);

}  // namespace tow
