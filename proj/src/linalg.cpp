#include "klr/linalg.hpp"

#include <stdexcept>

namespace klr {

SparseVec Echelon::reduce(const SparseVec& v) const {
    if (rows_.empty()) return v;
    std::map<int, Scalar> work(v.begin(), v.end());
    auto it = work.begin();
    while (it != work.end()) {
        auto piv = rows_.find(it->first);
        if (piv == rows_.end()) {
            ++it;
            continue;
        }
        Scalar f = it->second;
        int col = it->first;
        for (auto& [c, x] : piv->second) {
            if (c == col) continue;
            auto [slot, fresh] = work.try_emplace(c, 0);
            slot->second -= f * x;
            if (slot->second == 0) work.erase(slot);
        }
        it = work.erase(it);
    }
    return SparseVec(work.begin(), work.end());
}

SparseVec Echelon::insert(const SparseVec& v) {
    SparseVec r = reduce(v);
    if (r.empty()) return r;
    Scalar lead = r.front().second;
    if (lead != 1)
        for (auto& [c, x] : r) x /= lead;
    rows_.emplace(r.front().first, r);
    return r;
}

void Echelon::make_reduced() {
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        int col = it->first;
        SparseVec tail(it->second.begin() + 1, it->second.end());
        SparseVec red = reduce(tail);
        SparseVec row{{col, Scalar(1)}};
        row.insert(row.end(), red.begin(), red.end());
        it->second = std::move(row);
    }
}

void Echelon::adopt(const SparseVec& row) {
    if (row.empty() || row.front().second != 1) throw std::invalid_argument("row must lead with 1");
    if (!rows_.emplace(row.front().first, row).second) throw std::invalid_argument("pivot column already used");
}

int sparse_rank(const std::vector<SparseVec>& rows) {
    Echelon e;
    for (auto& r : rows) e.insert(r);
    return e.rank();
}

std::vector<int> rref(DenseMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Scalar inv = 1 / m[r][c];
        for (int k = c; k < cols; ++k) m[r][k] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Scalar f = m[i][c];
            for (int k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int dense_rank(DenseMatrix m) { return static_cast<int>(rref(m).size()); }

DenseMatrix nullspace(const DenseMatrix& m, int cols) {
    DenseMatrix a = m;
    for (auto& row : a) row.resize(cols, 0);
    std::vector<int> piv = rref(a);
    std::vector<bool> is_piv(cols, false);
    for (int c : piv) is_piv[c] = true;
    DenseMatrix out;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Scalar> v(cols, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace klr
