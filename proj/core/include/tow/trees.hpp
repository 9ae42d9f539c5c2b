#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "tow/errors.hpp"

namespace tow {

/**
 * Strictly binary tree in an arena: every node has either no children or a
 * left and a right child. The root sits at index 0; construction is
 * append-only. Depth and turn counts are kept per node; the 0/1 bit
 * sequence describing a node (leading 0 for the root, then 0 per left and
 * 1 per right turn) is derived on demand.
 */
struct GameTree {
    struct Node {
        int left = -1;
        int right = -1;
        int parent = -1;
        int depth = 0;
        int lturns = 0;  // left turns from the root
        int rturns = 0;  // right turns from the root
    };

    std::vector<Node> nodes;
    int max_depth = 0;

    std::size_t size() const { return nodes.size(); }
    bool is_leaf(int t) const { return nodes[t].left < 0; }

    /// The node's bit sequence in {0,1}^{depth+1}, first entry 0.
    std::vector<int> bits(int t) const;
    /// Inverse of bits(); throws Error if the sequence names no node.
    int node_at(const std::vector<int>& bits) const;
};

/// Nested two-child description; arity must be 0 or 2 at every level.
struct TreeShape {
    std::vector<TreeShape> children;
};

/// Builds the arena tree, computing depth and turn counts.
/// Throws NotStrictlyBinaryError for any other arity.
GameTree build_tree(const TreeShape& shape);

GameTree single_node();
GameTree full_tree(int depth);
/// Spine of left children of the given depth; every right child is a leaf.
GameTree left_comb(int depth);

/// Splits a leaf into an interior node with two fresh leaves; returns the
/// index of the new left child.
int split_leaf(GameTree& tree, int leaf);

/**
 * Random strictly binary tree by iterative leaf splitting: each leaf above
 * the frontier splits with probability `split_prob` until no leaf splits or
 * the node budget is reached. Biased runs of split_prob near 1 give deep
 * sparse combs, near 0 shallow bushes.
 */
GameTree random_tree(std::mt19937_64& rng, double split_prob, int max_depth,
                     std::size_t max_nodes);

/// mu^{l(t)} * (1-mu)^{r(t)}.
double node_mass(const GameTree& tree, int t, double mu);

/**
 * Layer masses: a[i] sums node masses at depth i, b[i] sums leaf masses at
 * depth i. They satisfy a[0] = 1 and a[i+1] = a[i] - b[i]; the pairing
 * identity is re-checked at 1e-12 during computation.
 */
struct MassProfile {
    std::vector<double> a;
    std::vector<double> b;

    double leaf_mass_total() const;
    double interior_mass_total() const;  // sum over non-leaf nodes
};

MassProfile mass_profile(const GameTree& tree, double mu);

/// K = ceil(2C/delta) + 2.
long long sparsity_threshold(double C, double delta);

/**
 * Interior mass <= C + C * leaf mass. Since total leaf mass is identically
 * 1, this is equivalent to interior mass <= 2C; both forms are evaluated
 * and cross-checked.
 */
bool satisfies_sum_estimate(const GameTree& tree, double mu, double C);

/**
 * The implication d(T) >= K  =>  top-layer mass <= delta, for K =
 * sparsity_threshold(C, delta). Requires the tree to satisfy the sum
 * estimate; throws HypothesisNotSatisfiedError otherwise.
 */
bool check_sparsity_conclusion(const GameTree& tree, double mu, double C, double delta);

}  // namespace tow
