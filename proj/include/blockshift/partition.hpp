#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "blockshift/errors.hpp"

namespace blockshift {

struct Node {
    int row = 0;
    int col = 0;

    friend bool operator==(const Node&, const Node&) = default;
    friend auto operator<=>(const Node&, const Node&) = default;
};

/// Integer partition: weakly decreasing positive parts. The empty list is the
/// empty partition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// |lambda|, the sum of the parts.
    int size() const;
    /// h(lambda), the number of parts.
    int height() const { return static_cast<int>(parts_.size()); }
    /// Row length, 0 beyond the last row.
    int part(int row) const;
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    /// Membership of a node in the Young diagram.
    bool contains(Node node) const;

    /// "(3,2,2,1)"; the empty partition prints as "()".
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Beta entries, strictly decreasing. Canonical length is h(lambda): entry a
/// (1-indexed) is lambda_{a-1} - a, and the implicit tail entry is -a for
/// every a beyond the stored length.
using BetaNumber = std::vector<int>;

/// Border strip of the Young diagram. Cells ordered by row, then column;
/// the hand is the cell of the anchor row with maximal column.
struct RimHook {
    Node anchor;
    std::vector<Node> cells;
    int length = 0;
    Node hand;

    friend bool operator==(const RimHook&, const RimHook&) = default;
};

/// Residue (col - row + shift) mod e, representative in {0..e-1}. Requires e >= 2.
int residue(Node node, int e, int shift = 0);

BetaNumber beta_number(const Partition& lambda);

/// Inverse of beta_number after canonicalisation. Accepts a longer-than-canonical
/// list as long as it is strictly decreasing and consistent with the tail
/// convention; rejects anything else.
Partition partition_from_beta(const BetaNumber& beta);

/// Membership in the extended beta set: a stored entry, or the implicit tail
/// (any value <= -(len+1)).
bool beta_contains(const BetaNumber& beta, int value);

/// All removable rim hooks of the given length, ordered by anchor row.
/// For length 1 these are exactly the removable nodes.
std::vector<RimHook> rim_hooks(const Partition& lambda, int length);

Partition remove_rim_hook(const Partition& lambda, const RimHook& hook);

/// Wraps a rim hook of the given length onto the largest beta entry, i.e.
/// grows the first row by `length`. Always legal.
Partition add_rim_hook_by_beta(const Partition& lambda, int length);

/// The unique e-core together with the e-weight (number of e-hooks removed).
/// Removal order: always the hook with the largest beta entry.
std::pair<Partition, int> e_core_and_weight(const Partition& lambda, int e);

/// (n^0(lambda), ..., n^{e-1}(lambda)) with residues shifted by `shift`;
/// entries sum to |lambda|.
std::vector<int> residue_vector(const Partition& lambda, int e, int shift = 0);

}  // namespace blockshift
