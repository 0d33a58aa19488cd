#include "blockshift/partition.hpp"

#include <algorithm>
#include <numeric>

namespace blockshift {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t a = 0; a < parts_.size(); ++a) {
        require(parts_[a] > 0, "partition parts must be positive");
        if (a + 1 < parts_.size())
            require(parts_[a] >= parts_[a + 1], "partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int row) const {
    if (row < 0 || row >= height()) return 0;
    return parts_[static_cast<std::size_t>(row)];
}

bool Partition::contains(Node node) const {
    return node.row >= 0 && node.col >= 0 && node.row < height() && node.col < part(node.row);
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t a = 0; a < parts_.size(); ++a) {
        if (a) out += ',';
        out += std::to_string(parts_[a]);
    }
    out += ')';
    return out;
}

int residue(Node node, int e, int shift) {
    require(e >= 2, "residue modulus must be >= 2");
    return mod(node.col - node.row + shift, e);
}

BetaNumber beta_number(const Partition& lambda) {
    BetaNumber beta(lambda.height());
    for (int a = 0; a < lambda.height(); ++a) beta[a] = lambda.part(a) - (a + 1);
    return beta;
}

Partition partition_from_beta(const BetaNumber& beta) {
    for (std::size_t a = 0; a + 1 < beta.size(); ++a)
        require(beta[a] > beta[a + 1], "beta entries must be strictly decreasing");
    std::vector<int> parts;
    for (std::size_t a = 0; a < beta.size(); ++a) {
        int lambda_a = beta[a] + static_cast<int>(a) + 1;
        require(lambda_a >= 0, "beta entry inconsistent with tail convention");
        if (lambda_a > 0) parts.push_back(lambda_a);
        // once a zero part appears, every later entry must be a tail entry
        else
            require(a + 1 == beta.size() || beta[a + 1] + static_cast<int>(a) + 2 <= 0,
                    "beta entry inconsistent with tail convention");
    }
    return Partition(parts);
}

bool beta_contains(const BetaNumber& beta, int value) {
    if (value <= -(static_cast<int>(beta.size()) + 1)) return true;
    return std::binary_search(beta.begin(), beta.end(), value, std::greater<int>());
}

namespace {

// Column height: number of rows with part > col.
int column_height(const Partition& lambda, int col) {
    int h = 0;
    while (h < lambda.height() && lambda.part(h) > col) ++h;
    return h;
}

RimHook hook_at(const Partition& lambda, Node anchor) {
    RimHook hook;
    hook.anchor = anchor;
    int foot_row = column_height(lambda, anchor.col) - 1;
    for (int a = anchor.row; a <= foot_row; ++a) {
        // rim cells of row a: (a+1, b+1) outside the diagram
        int first = std::max(anchor.col, lambda.part(a + 1) - 1);
        for (int b = first; b < lambda.part(a); ++b) hook.cells.push_back({a, b});
    }
    hook.length = static_cast<int>(hook.cells.size());
    hook.hand = {anchor.row, lambda.part(anchor.row) - 1};
    return hook;
}

}  // namespace

std::vector<RimHook> rim_hooks(const Partition& lambda, int length) {
    require(length >= 1, "rim hook length must be >= 1");
    std::vector<RimHook> out;
    for (int a = 0; a < lambda.height(); ++a) {
        for (int b = 0; b < lambda.part(a); ++b) {
            int hook_length = lambda.part(a) - b + column_height(lambda, b) - a - 1;
            if (hook_length == length) out.push_back(hook_at(lambda, {a, b}));
        }
    }
    // anchors were visited row by row; hook lengths are strictly decreasing
    // along a row, so at most one anchor per row matches
    return out;
}

Partition remove_rim_hook(const Partition& lambda, const RimHook& hook) {
    require(lambda.contains(hook.anchor) && hook_at(lambda, hook.anchor) == hook,
            "hook is not a removable rim hook of this partition");
    std::vector<int> parts = lambda.parts();
    for (const Node& cell : hook.cells) {
        int row = cell.row;
        parts[static_cast<std::size_t>(row)] = std::min(parts[static_cast<std::size_t>(row)], cell.col);
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(parts);
}

Partition add_rim_hook_by_beta(const Partition& lambda, int length) {
    require(length >= 1, "rim hook length must be >= 1");
    std::vector<int> parts = lambda.parts();
    if (parts.empty())
        parts.push_back(length);
    else
        parts[0] += length;
    return Partition(parts);
}

std::pair<Partition, int> e_core_and_weight(const Partition& lambda, int e) {
    require(e >= 2, "e must be >= 2");
    BetaNumber beta = beta_number(lambda);
    int weight = 0;
    bool moved = true;
    while (moved) {
        moved = false;
        // largest movable entry first; tail entries are never movable
        for (std::size_t a = 0; a < beta.size(); ++a) {
            if (!beta_contains(beta, beta[a] - e)) {
                beta[a] -= e;
                std::sort(beta.begin(), beta.end(), std::greater<int>());
                ++weight;
                moved = true;
                break;
            }
        }
    }
    return {partition_from_beta(beta), weight};
}

std::vector<int> residue_vector(const Partition& lambda, int e, int shift) {
    require(e >= 2, "e must be >= 2");
    std::vector<int> counts(static_cast<std::size_t>(e), 0);
    for (int a = 0; a < lambda.height(); ++a)
        for (int b = 0; b < lambda.part(a); ++b) ++counts[static_cast<std::size_t>(mod(b - a + shift, e))];
    return counts;
}

}  // namespace blockshift
