#include "blockshift/binmat.hpp"

#include <algorithm>
#include <limits>

namespace blockshift {

BinaryMatrix::BinaryMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    require(rows >= 0 && cols >= 0, "matrix dimensions must be non-negative");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    const int m = static_cast<int>(rows.size());
    const int n = m > 0 ? static_cast<int>(rows[0].size()) : 0;
    BinaryMatrix out(m, n);
    for (int l = 0; l < m; ++l) {
        require(static_cast<int>(rows[static_cast<std::size_t>(l)].size()) == n,
                "ragged rows in binary matrix");
        for (int k = 0; k < n; ++k) out.set(l, k, rows[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)]);
    }
    return out;
}

int BinaryMatrix::at(int row, int col) const {
    return data_[static_cast<std::size_t>(row) * static_cast<std::size_t>(cols_) +
                 static_cast<std::size_t>(col)];
}

void BinaryMatrix::set(int row, int col, int value) {
    require(value == 0 || value == 1, "matrix entries must be 0 or 1");
    data_[static_cast<std::size_t>(row) * static_cast<std::size_t>(cols_) +
          static_cast<std::size_t>(col)] = static_cast<std::uint8_t>(value);
}

void BinaryMatrix::flip(int row, int col) { set(row, col, 1 - at(row, col)); }

int BinaryMatrix::row_sum(int row) const {
    int sum = 0;
    for (int k = 0; k < cols_; ++k) sum += at(row, k);
    return sum;
}

int BinaryMatrix::col_sum(int col) const {
    int sum = 0;
    for (int l = 0; l < rows_; ++l) sum += at(l, col);
    return sum;
}

int BinaryMatrix::total() const {
    int sum = 0;
    for (std::uint8_t v : data_) sum += v;
    return sum;
}

std::vector<std::vector<int>> BinaryMatrix::to_rows() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(rows_));
    for (int l = 0; l < rows_; ++l) {
        out[static_cast<std::size_t>(l)].resize(static_cast<std::size_t>(cols_));
        for (int k = 0; k < cols_; ++k) out[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)] = at(l, k);
    }
    return out;
}

PairedBinaryMatrix::PairedBinaryMatrix(BinaryMatrix plus_, BinaryMatrix minus_)
    : plus(std::move(plus_)), minus(std::move(minus_)) {
    require(plus.rows() == minus.rows() && plus.cols() == minus.cols(),
            "paired halves must share one shape");
}

std::vector<std::vector<int>> gale_ryser_vectors(const std::vector<int>& w, int p) {
    require(p >= 1, "p must be >= 1");
    for (int wi : w) require(wi >= 0 && wi <= p, "entry out of range {0..p}");
    const int n = static_cast<int>(w.size());
    std::vector<std::vector<int>> eps(static_cast<std::size_t>(p),
                                      std::vector<int>(static_cast<std::size_t>(n), 0));
    long long start = 0;
    for (int i = 0; i < n; ++i) {
        for (long long t = start; t < start + w[static_cast<std::size_t>(i)]; ++t)
            eps[static_cast<std::size_t>(t % p)][static_cast<std::size_t>(i)] = 1;
        start += w[static_cast<std::size_t>(i)];
    }
    return eps;
}

std::optional<InterchangeTriple> find_compatible(const PairedBinaryMatrix& a,
                                                 const PairedBinaryMatrix& b) {
    require(a.plus.rows() == b.plus.rows(), "pairs must have the same row count");
    for (int l = 0; l < a.plus.rows(); ++l)
        for (int k = 0; k < a.plus.cols(); ++k) {
            if (a.plus.at(l, k) != 1 || a.minus.at(l, k) != 0) continue;
            for (int kp = 0; kp < b.plus.cols(); ++kp)
                if (b.plus.at(l, kp) == 0 && b.minus.at(l, kp) == 1)
                    return InterchangeTriple{l, k, kp};
            break;  // a witness column in A exists on this row; no B column matches
        }
    return std::nullopt;
}

namespace {

bool witnesses(const PairedBinaryMatrix& a, const PairedBinaryMatrix& b,
               const InterchangeTriple& t) {
    return a.plus.at(t.row, t.col_a) == 1 && a.minus.at(t.row, t.col_a) == 0 &&
           b.plus.at(t.row, t.col_b) == 0 && b.minus.at(t.row, t.col_b) == 1;
}

}  // namespace

std::pair<PairedBinaryMatrix, PairedBinaryMatrix> apply_interchange(
    const PairedBinaryMatrix& a, const PairedBinaryMatrix& b, const InterchangeTriple& triple) {
    require(witnesses(a, b, triple), "triple does not witness a compatible submatrix");
    PairedBinaryMatrix a2 = a;
    PairedBinaryMatrix b2 = b;
    a2.plus.flip(triple.row, triple.col_a);
    a2.minus.flip(triple.row, triple.col_a);
    b2.plus.flip(triple.row, triple.col_b);
    b2.minus.flip(triple.row, triple.col_b);
    return {a2, b2};
}

std::vector<ChainStep> find_chain(const std::vector<PairedBinaryMatrix>& family, int start) {
    const int count = static_cast<int>(family.size());
    require(count >= 2, "need at least two family members");
    require(start >= 0 && start < count, "start index out of range");
    const int rows = family[0].plus.rows();
    for (const auto& member : family)
        require(member.plus.rows() == rows, "family members must share a row count");
    for (int l = 0; l < rows; ++l) {
        int plus_sum = 0;
        int minus_sum = 0;
        for (const auto& member : family) {
            plus_sum += member.plus.row_sum(l);
            minus_sum += member.minus.row_sum(l);
        }
        require(plus_sum == minus_sum, "family row sums are not balanced");
    }
    require(family[static_cast<std::size_t>(start)].plus.total() >
                family[static_cast<std::size_t>(start)].minus.total(),
            "start member has no plus-surplus");

    auto deficient = [&](int i) {
        return family[static_cast<std::size_t>(i)].plus.total() <
               family[static_cast<std::size_t>(i)].minus.total();
    };

    std::vector<int> parent(static_cast<std::size_t>(count), -1);
    std::vector<InterchangeTriple> via(static_cast<std::size_t>(count));
    std::vector<bool> reached(static_cast<std::size_t>(count), false);
    reached[static_cast<std::size_t>(start)] = true;
    std::vector<int> layer = {start};

    int goal = -1;
    while (goal < 0) {
        std::vector<int> next;
        for (int i = 0; i < count; ++i) {
            if (reached[static_cast<std::size_t>(i)]) continue;
            for (int source : layer) {
                auto triple =
                    find_compatible(family[static_cast<std::size_t>(source)], family[static_cast<std::size_t>(i)]);
                if (triple) {
                    parent[static_cast<std::size_t>(i)] = source;
                    via[static_cast<std::size_t>(i)] = *triple;
                    next.push_back(i);
                    break;
                }
            }
        }
        ensure(!next.empty(), "chain search stalled despite balanced row sums");
        for (int i : next) reached[static_cast<std::size_t>(i)] = true;
        for (int i : next)
            if (deficient(i)) {
                goal = i;
                break;
            }
        layer = std::move(next);
    }

    std::vector<ChainStep> chain;
    for (int i = goal; i != start; i = parent[static_cast<std::size_t>(i)])
        chain.push_back({parent[static_cast<std::size_t>(i)], i, via[static_cast<std::size_t>(i)]});
    std::reverse(chain.begin(), chain.end());
    return chain;
}

void apply_chain(std::vector<PairedBinaryMatrix>& family, const std::vector<ChainStep>& chain) {
    for (const ChainStep& step : chain) {
        auto& from = family[static_cast<std::size_t>(step.from_index)];
        auto& to = family[static_cast<std::size_t>(step.to_index)];
        require(witnesses(from, to, step.triple), "chain step does not witness a compatibility");
        from.plus.flip(step.triple.row, step.triple.col_a);
        from.minus.flip(step.triple.row, step.triple.col_a);
        to.plus.flip(step.triple.row, step.triple.col_b);
        to.minus.flip(step.triple.row, step.triple.col_b);
    }
}

namespace {

struct Measure {
    long long delta = 0;
    long long count = 1;

    friend auto operator<=>(const Measure&, const Measure&) = default;
};

std::vector<std::vector<int>> block_sums(const std::vector<BinaryMatrix>& matrices,
                                         int block_width, int block_count) {
    std::vector<std::vector<int>> sums(matrices.size(),
                                       std::vector<int>(static_cast<std::size_t>(block_count), 0));
    for (std::size_t j = 0; j < matrices.size(); ++j)
        for (int l = 0; l < matrices[j].rows(); ++l)
            for (int k = 0; k < matrices[j].cols(); ++k)
                sums[j][static_cast<std::size_t>(k / block_width)] += matrices[j].at(l, k);
    return sums;
}

Measure measure_of(const std::vector<std::vector<int>>& sums, int block_count) {
    Measure m;
    const int p = static_cast<int>(sums.size());
    for (int i = 0; i < block_count; ++i)
        for (int j = 0; j < p; ++j)
            for (int jp = 0; jp < p; ++jp)
                m.delta = std::max(m.delta, static_cast<long long>(sums[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] -
                                                                   sums[static_cast<std::size_t>(jp)][static_cast<std::size_t>(i)]));
    m.count = 0;
    for (int i = 0; i < block_count; ++i)
        for (int j = 0; j < p; ++j)
            for (int jp = 0; jp < p; ++jp)
                if (sums[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] -
                        sums[static_cast<std::size_t>(jp)][static_cast<std::size_t>(i)] ==
                    m.delta)
                    ++m.count;
    return m;
}

PairedBinaryMatrix block_pair(const BinaryMatrix& plus_side, const BinaryMatrix& minus_side,
                              int block, int block_width) {
    BinaryMatrix plus(plus_side.rows(), block_width);
    BinaryMatrix minus(minus_side.rows(), block_width);
    for (int l = 0; l < plus_side.rows(); ++l)
        for (int k = 0; k < block_width; ++k) {
            plus.set(l, k, plus_side.at(l, block * block_width + k));
            minus.set(l, k, minus_side.at(l, block * block_width + k));
        }
    return {plus, minus};
}

}  // namespace

RectifyResult rectify_block_sums(std::vector<BinaryMatrix> matrices, int block_width,
                                 const std::vector<int>& targets) {
    const int p = static_cast<int>(matrices.size());
    require(p >= 1, "need at least one matrix");
    require(block_width >= 1, "block width must be >= 1");
    const int rows = matrices[0].rows();
    const int cols = matrices[0].cols();
    for (const auto& m : matrices)
        require(m.rows() == rows && m.cols() == cols, "matrices must share one shape");
    require(cols % block_width == 0, "columns must split into whole blocks");
    const int block_count = cols / block_width;
    require(static_cast<int>(targets.size()) == block_count, "one target per block expected");
    for (int l = 0; l < rows; ++l)
        for (int j = 1; j < p; ++j)
            require(matrices[static_cast<std::size_t>(j)].row_sum(l) == matrices[0].row_sum(l),
                    "row sums must agree across the family");

    auto sums = block_sums(matrices, block_width, block_count);
    for (int i = 0; i < block_count; ++i) {
        long long total = 0;
        for (int j = 0; j < p; ++j) total += sums[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        require(total == static_cast<long long>(p) * targets[static_cast<std::size_t>(i)],
                "block targets are not the family averages");
    }

    // preserved-quantity snapshot for the closing invariants
    std::vector<int> row_snapshot(static_cast<std::size_t>(rows));
    for (int l = 0; l < rows; ++l) row_snapshot[static_cast<std::size_t>(l)] = matrices[0].row_sum(l);
    std::vector<int> col_snapshot(static_cast<std::size_t>(cols), 0);
    for (int k = 0; k < cols; ++k)
        for (int j = 0; j < p; ++j) col_snapshot[static_cast<std::size_t>(k)] += matrices[static_cast<std::size_t>(j)].col_sum(k);

    RectifyResult result;
    Measure current = measure_of(sums, block_count);
    while (current.delta > 0) {
        // lexicographically smallest (i0, j0, j0') achieving Delta
        int i0 = -1, j0 = -1, j0p = -1;
        for (int i = 0; i < block_count && i0 < 0; ++i)
            for (int j = 0; j < p && i0 < 0; ++j)
                for (int jp = 0; jp < p; ++jp)
                    if (sums[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] -
                            sums[static_cast<std::size_t>(jp)][static_cast<std::size_t>(i)] ==
                        current.delta) {
                        i0 = i;
                        j0 = j;
                        j0p = jp;
                        break;
                    }

        std::vector<PairedBinaryMatrix> family;
        family.reserve(static_cast<std::size_t>(block_count));
        for (int i = 0; i < block_count; ++i)
            family.push_back(block_pair(matrices[static_cast<std::size_t>(j0)],
                                        matrices[static_cast<std::size_t>(j0p)], i, block_width));

        const std::vector<ChainStep> chain = find_chain(family, i0);
        for (const ChainStep& step : chain) {
            const int from_col = step.from_index * block_width + step.triple.col_a;
            const int to_col = step.to_index * block_width + step.triple.col_b;
            matrices[static_cast<std::size_t>(j0)].flip(step.triple.row, from_col);
            matrices[static_cast<std::size_t>(j0p)].flip(step.triple.row, from_col);
            matrices[static_cast<std::size_t>(j0)].flip(step.triple.row, to_col);
            matrices[static_cast<std::size_t>(j0p)].flip(step.triple.row, to_col);
            result.log.push_back({j0, j0p, step.triple.row, from_col, to_col});
        }

        sums = block_sums(matrices, block_width, block_count);
        const Measure next = measure_of(sums, block_count);
        ensure(next < current, "(Delta, N) measure failed to decrease");
        current = next;
    }

    for (int j = 0; j < p; ++j)
        for (int i = 0; i < block_count; ++i)
            ensure(sums[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] == targets[static_cast<std::size_t>(i)],
                   "block sums missed their targets");
    for (int j = 0; j < p; ++j)
        for (int l = 0; l < rows; ++l)
            ensure(matrices[static_cast<std::size_t>(j)].row_sum(l) == row_snapshot[static_cast<std::size_t>(l)],
                   "row sums changed during rectification");
    for (int k = 0; k < cols; ++k) {
        int total = 0;
        for (int j = 0; j < p; ++j) total += matrices[static_cast<std::size_t>(j)].col_sum(k);
        ensure(total == col_snapshot[static_cast<std::size_t>(k)], "column sums changed during rectification");
    }

    result.matrices = std::move(matrices);
    return result;
}

}  // namespace blockshift
