#pragma once

#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace klr {

using Scalar = mpq_class;
// strictly increasing column indices, nonzero entries
using SparseVec = std::vector<std::pair<int, Scalar>>;
using DenseMatrix = std::vector<std::vector<Scalar>>;

// Row echelon form over Q. The pivot of a row is its smallest column;
// stored rows are scaled to a leading 1.
class Echelon {
public:
    // Eliminates every pivot column from v.
    SparseVec reduce(const SparseVec& v) const;
    // Stores the reduction of v if it is nonzero and returns it.
    SparseVec insert(const SparseVec& v);
    // Stores a row exactly as given; it must lead with 1 in an unused pivot column.
    void adopt(const SparseVec& row);
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    int rank() const { return static_cast<int>(rows_.size()); }
    bool is_pivot(int col) const { return rows_.count(col) > 0; }
    const std::map<int, SparseVec>& rows() const { return rows_; }
    // Back-substitution: afterwards no row has a nonzero entry in another pivot column.
    void make_reduced();

private:
    std::map<int, SparseVec> rows_;
};

int sparse_rank(const std::vector<SparseVec>& rows);

int dense_rank(DenseMatrix m);
// basis of {v : m v = 0}
DenseMatrix nullspace(const DenseMatrix& m, int cols);
// reduced row echelon form in place; returns the pivot columns
std::vector<int> rref(DenseMatrix& m);

}  // namespace klr
