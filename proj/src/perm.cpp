#include "klr/perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <memory>
#include <stdexcept>

namespace klr {

namespace {

std::uint64_t encode(const OneLine& p, int n) {
    std::uint64_t key = 0;
    for (int k = 0; k < n; ++k) key = key * 16 + p[k];
    return key;
}

}  // namespace

const PermTable& PermTable::get(int n) {
    if (n < 0 || n > kMaxStrands) throw std::out_of_range("strand count out of range");
    static std::mutex mu;
    static std::unique_ptr<PermTable> tables[kMaxStrands + 1];
    std::lock_guard<std::mutex> lock(mu);
    if (!tables[n]) tables[n].reset(new PermTable(n));
    return *tables[n];
}

PermTable::PermTable(int n) : n_(n) {
    OneLine p{};
    for (int k = 0; k < n; ++k) p[k] = static_cast<std::uint8_t>(k);
    std::vector<OneLine> all;
    do {
        all.push_back(p);
    } while (std::next_permutation(p.begin(), p.begin() + n));

    auto lexmin = [n](OneLine q) {
        Word w;
        for (;;) {
            std::array<int, kMaxStrands> pos{};
            for (int k = 0; k < n; ++k) pos[q[k]] = k;
            int l = 0;
            while (l + 1 < n && pos[l] < pos[l + 1]) ++l;
            if (l + 1 >= n) break;
            w.push_back(static_cast<std::uint8_t>(l));
            for (int k = 0; k < n; ++k) {
                if (q[k] == l)
                    q[k] = static_cast<std::uint8_t>(l + 1);
                else if (q[k] == l + 1)
                    q[k] = static_cast<std::uint8_t>(l);
            }
        }
        return w;
    };

    std::vector<std::pair<Word, OneLine>> rows;
    for (auto& q : all) rows.emplace_back(lexmin(q), q);
    std::sort(rows.begin(), rows.end(), [](auto& x, auto& y) {
        if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
        return x.first < y.first;
    });
    for (auto& [w, q] : rows) {
        index_[encode(q, n)] = static_cast<int>(perms_.size());
        perms_.push_back(q);
        words_.push_back(w);
    }

    const int m = size();
    const int stride = n > 1 ? n - 1 : 1;
    inverse_.assign(m, 0);
    left_.assign(static_cast<std::size_t>(m) * stride, 0);
    right_.assign(static_cast<std::size_t>(m) * stride, 0);
    tail_.assign(m, 0);
    for (int w = 0; w < m; ++w) {
        OneLine inv{};
        for (int k = 0; k < n; ++k) inv[perms_[w][k]] = static_cast<std::uint8_t>(k);
        inverse_[w] = index_of(inv);
        for (int l = 0; l + 1 < n; ++l) {
            OneLine a = perms_[w];
            for (int k = 0; k < n; ++k) {
                if (a[k] == l)
                    a[k] = static_cast<std::uint8_t>(l + 1);
                else if (a[k] == l + 1)
                    a[k] = static_cast<std::uint8_t>(l);
            }
            left_[w * stride + l] = index_of(a);
            OneLine b = perms_[w];
            std::swap(b[l], b[l + 1]);
            right_[w * stride + l] = index_of(b);
        }
    }
    for (int w = 0; w < m; ++w) tail_[w] = words_[w].empty() ? 0 : left_[w * stride + words_[w][0]];
}

int PermTable::index_of(const OneLine& p) const {
    auto it = index_.find(encode(p, n_));
    if (it == index_.end()) throw std::invalid_argument("not a permutation");
    return it->second;
}

int PermTable::from_word(const Word& word) const {
    int w = 0;
    for (auto l : word) {
        if (l + 1 >= n_) throw std::out_of_range("letter out of range");
        w = right_mul(w, l);
    }
    return w;
}

int PermTable::compose(int u, int v) const {
    OneLine r{};
    for (int k = 0; k < n_; ++k) r[k] = perms_[u][perms_[v][k]];
    return index_of(r);
}

const std::vector<PermTable::Move>& PermTable::path(const Word& from, const Word& to) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(from, to);
    auto found = paths_.find(key);
    if (found != paths_.end()) return found->second;

    std::map<Word, std::pair<Word, Move>> parent;
    std::deque<Word> queue{from};
    parent.emplace(from, std::make_pair(from, Move{-1, false}));
    while (!queue.empty() && !parent.count(to)) {
        Word cur = queue.front();
        queue.pop_front();
        for (int p = 0; p + 1 < static_cast<int>(cur.size()); ++p) {
            int a = cur[p], b = cur[p + 1];
            if (std::abs(a - b) >= 2) {
                Word nxt = cur;
                std::swap(nxt[p], nxt[p + 1]);
                if (parent.emplace(nxt, std::make_pair(cur, Move{p, false})).second) queue.push_back(nxt);
            }
            if (p + 2 < static_cast<int>(cur.size()) && cur[p + 2] == a && std::abs(a - b) == 1) {
                Word nxt = cur;
                nxt[p] = nxt[p + 2] = static_cast<std::uint8_t>(b);
                nxt[p + 1] = static_cast<std::uint8_t>(a);
                if (parent.emplace(nxt, std::make_pair(cur, Move{p, true})).second) queue.push_back(nxt);
            }
        }
    }
    if (!parent.count(to)) throw std::logic_error("words are not reduced words of one permutation");
    std::vector<Move> moves;
    for (Word cur = to; cur != from;) {
        auto& [prev, mv] = parent.at(cur);
        moves.push_back(mv);
        cur = prev;
    }
    std::reverse(moves.begin(), moves.end());
    return paths_.emplace(key, std::move(moves)).first->second;
}

}  // namespace klr
