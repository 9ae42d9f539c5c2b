#include "tow/trees.hpp"

#include <algorithm>
#include <cmath>

namespace tow {

std::vector<int> GameTree::bits(int t) const {
    std::vector<int> out;
    for (int cur = t; cur >= 0; cur = nodes[cur].parent) {
        int par = nodes[cur].parent;
        if (par < 0) {
            out.push_back(0);
        } else {
            out.push_back(nodes[par].left == cur ? 0 : 1);
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

int GameTree::node_at(const std::vector<int>& bits) const {
    if (bits.empty() || bits[0] != 0) throw Error("bit sequence must start with 0");
    int cur = 0;
    for (std::size_t i = 1; i < bits.size(); ++i) {
        cur = bits[i] == 0 ? nodes[cur].left : nodes[cur].right;
        if (cur < 0) throw Error("bit sequence names no node");
    }
    return cur;
}

namespace {

int build_rec(GameTree& tree, const TreeShape& shape, int parent, int depth, int l, int r) {
    if (!shape.children.empty() && shape.children.size() != 2) {
        throw NotStrictlyBinaryError(shape.children.size());
    }
    int idx = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back({-1, -1, parent, depth, l, r});
    tree.max_depth = std::max(tree.max_depth, depth);
    if (!shape.children.empty()) {
        tree.nodes[idx].left = build_rec(tree, shape.children[0], idx, depth + 1, l + 1, r);
        tree.nodes[idx].right = build_rec(tree, shape.children[1], idx, depth + 1, l, r + 1);
    }
    return idx;
}

}  // namespace

GameTree build_tree(const TreeShape& shape) {
    GameTree tree;
    build_rec(tree, shape, -1, 0, 0, 0);
    return tree;
}

GameTree single_node() {
    GameTree tree;
    tree.nodes.push_back({});
    return tree;
}

int split_leaf(GameTree& tree, int leaf) {
    if (!tree.is_leaf(leaf)) throw Error("split_leaf called on an interior node");
    const auto n = tree.nodes[leaf];
    int l = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back({-1, -1, leaf, n.depth + 1, n.lturns + 1, n.rturns});
    tree.nodes.push_back({-1, -1, leaf, n.depth + 1, n.lturns, n.rturns + 1});
    tree.nodes[leaf].left = l;
    tree.nodes[leaf].right = l + 1;
    tree.max_depth = std::max(tree.max_depth, n.depth + 1);
    return l;
}

GameTree full_tree(int depth) {
    GameTree tree = single_node();
    std::vector<int> frontier = {0};
    for (int d = 0; d < depth; ++d) {
        std::vector<int> next;
        for (int leaf : frontier) {
            int l = split_leaf(tree, leaf);
            next.push_back(l);
            next.push_back(l + 1);
        }
        frontier = std::move(next);
    }
    return tree;
}

GameTree left_comb(int depth) {
    GameTree tree = single_node();
    int spine = 0;
    for (int d = 0; d < depth; ++d) spine = split_leaf(tree, spine);
    return tree;
}

GameTree random_tree(std::mt19937_64& rng, double split_prob, int max_depth,
                     std::size_t max_nodes) {
    GameTree tree = single_node();
    std::bernoulli_distribution split(split_prob);
    std::vector<int> frontier = {0};
    while (!frontier.empty() && tree.size() + 2 <= max_nodes) {
        std::vector<int> next;
        for (int leaf : frontier) {
            if (tree.nodes[leaf].depth >= max_depth) continue;
            if (tree.size() + 2 > max_nodes) break;
            if (split(rng)) {
                int l = split_leaf(tree, leaf);
                next.push_back(l);
                next.push_back(l + 1);
            }
        }
        frontier = std::move(next);
    }
    return tree;
}

double node_mass(const GameTree& tree, int t, double mu) {
    return std::pow(mu, tree.nodes[t].lturns) * std::pow(1.0 - mu, tree.nodes[t].rturns);
}

double MassProfile::leaf_mass_total() const {
    double s = 0.0;
    for (double v : b) s += v;
    return s;
}

double MassProfile::interior_mass_total() const {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] - b[i];
    return s;
}

MassProfile mass_profile(const GameTree& tree, double mu) {
    if (!(mu > 0.0 && mu < 1.0)) throw InvalidMuError(mu);
    MassProfile p;
    p.a.assign(tree.max_depth + 1, 0.0);
    p.b.assign(tree.max_depth + 1, 0.0);
    for (int t = 0; t < static_cast<int>(tree.size()); ++t) {
        double m = node_mass(tree, t, mu);
        p.a[tree.nodes[t].depth] += m;
        if (tree.is_leaf(t)) p.b[tree.nodes[t].depth] += m;
    }
    for (int i = 0; i < tree.max_depth; ++i) {
        if (std::abs(p.a[i + 1] - (p.a[i] - p.b[i])) > 1e-12) {
            throw Error("layer pairing identity violated beyond 1e-12");
        }
    }
    return p;
}

long long sparsity_threshold(double C, double delta) {
    if (!(C > 0.0) || !(delta > 0.0)) throw Error("C and delta must be positive");
    return static_cast<long long>(std::ceil(2.0 * C / delta)) + 2;
}

bool satisfies_sum_estimate(const GameTree& tree, double mu, double C) {
    if (!(C > 0.0)) throw Error("C must be positive");
    MassProfile p = mass_profile(tree, mu);
    double interior = p.interior_mass_total();
    double leaves = p.leaf_mass_total();
    bool literal = interior <= C + C * leaves;
    bool reduced = interior <= 2.0 * C;
    // leaf mass is 1, so the two forms may only disagree by rounding
    if (literal != reduced && std::abs(interior - 2.0 * C) > 1e-9) {
        throw Error("sum-estimate forms disagree");
    }
    return literal;
}

bool check_sparsity_conclusion(const GameTree& tree, double mu, double C, double delta) {
    if (!satisfies_sum_estimate(tree, mu, C)) throw HypothesisNotSatisfiedError();
    if (tree.max_depth < sparsity_threshold(C, delta)) return true;  // vacuous
    MassProfile p = mass_profile(tree, mu);
    return p.a[tree.max_depth] <= delta;
}

}  // namespace tow
