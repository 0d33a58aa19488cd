#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "blockshift/errors.hpp"

namespace blockshift {

class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(int rows, int cols);
    static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int at(int row, int col) const;
    void set(int row, int col, int value);
    /// gamma_{row,col}: toggles one entry.
    void flip(int row, int col);

    int row_sum(int row) const;
    int col_sum(int col) const;
    int total() const;
    std::vector<std::vector<int>> to_rows() const;

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::uint8_t> data_;
};

/// Stacked pair M = (M+ / M-); the halves share one shape.
struct PairedBinaryMatrix {
    BinaryMatrix plus;
    BinaryMatrix minus;

    PairedBinaryMatrix() = default;
    PairedBinaryMatrix(BinaryMatrix plus_, BinaryMatrix minus_);

    friend bool operator==(const PairedBinaryMatrix&, const PairedBinaryMatrix&) = default;
};

/// Witness of a compatible submatrix: A+[row,col_a]=1, A-[row,col_a]=0,
/// B+[row,col_b]=0, B-[row,col_b]=1. All indices 0-based.
struct InterchangeTriple {
    int row = 0;
    int col_a = 0;
    int col_b = 0;

    friend bool operator==(const InterchangeTriple&, const InterchangeTriple&) = default;
};

/// Binary vectors eps^0..eps^{p-1} with (1/p) * sum eps^j = w/p exactly:
/// column i carries w_i ones. Deterministic window construction: the i-th
/// window is the half-open run of w_i consecutive integers starting at
/// w_0+..+w_{i-1}, and eps^j marks windows containing a residue-j integer.
/// If |w| is a multiple of p, every |eps^j| equals |w|/p.
std::vector<std::vector<int>> gale_ryser_vectors(const std::vector<int>& w, int p);

/// Lexicographically smallest witnessing triple, if any.
std::optional<InterchangeTriple> find_compatible(const PairedBinaryMatrix& a,
                                                 const PairedBinaryMatrix& b);

std::pair<PairedBinaryMatrix, PairedBinaryMatrix> apply_interchange(
    const PairedBinaryMatrix& a, const PairedBinaryMatrix& b, const InterchangeTriple& triple);

struct ChainStep {
    int from_index = 0;
    int to_index = 0;
    InterchangeTriple triple;
};

/// Chain of compatibilities A_{i_0} |= A_{i_1} |= ... |= A_{i_s} through
/// distinct family members, starting at `start` (which must have a strict
/// plus-surplus) and ending at a member with a strict plus-deficit. Requires
/// the family-wide row sums of the plus and minus halves to agree. Search is
/// breadth-first over the layered reachable sets with lexicographic
/// tie-breaking on (index, row, col_a, col_b).
std::vector<ChainStep> find_chain(const std::vector<PairedBinaryMatrix>& family, int start);

/// Performs the combined interchange of a chain: each member is edited at the
/// columns of its incident steps, middle members once per side.
void apply_chain(std::vector<PairedBinaryMatrix>& family, const std::vector<ChainStep>& chain);

struct RectifyLogEntry {
    int j_plus = 0;   // matrix losing a plus entry
    int j_minus = 0;  // matrix gaining it
    int row = 0;
    int col_from = 0;  // global column indices
    int col_to = 0;
};

struct RectifyResult {
    std::vector<BinaryMatrix> matrices;
    std::vector<RectifyLogEntry> log;
};

/// Rearranges a family of p same-shaped binary matrices by compatible
/// interchanges until every width-`block_width` column block of every matrix
/// has entry total targets[i]. Preserves all row sums and all stacked column
/// sums. Preconditions: row sums equal across the family, and
/// sum_j |E^j[i]| = p * targets[i] for every block i. Terminates by strict
/// descent of the (Delta, N) measure, which is asserted every round.
RectifyResult rectify_block_sums(std::vector<BinaryMatrix> matrices, int block_width,
                                 const std::vector<int>& targets);

}  // namespace blockshift
