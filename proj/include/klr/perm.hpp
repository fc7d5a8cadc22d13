#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace klr {

constexpr int kMaxStrands = 8;

using Word = std::vector<std::uint8_t>;
using OneLine = std::array<std::uint8_t, kMaxStrands>;

// All permutations of n strands, indexed in canonical order: by length,
// then by lexicographically smallest reduced word. Index 0 is the identity.
// Letters and positions are 0-based; letter l swaps positions l and l+1.
class PermTable {
public:
    static const PermTable& get(int n);

    int n() const { return n_; }
    int size() const { return static_cast<int>(perms_.size()); }
    const OneLine& one_line(int w) const { return perms_[w]; }
    const Word& word(int w) const { return words_[w]; }
    int length(int w) const { return static_cast<int>(words_[w].size()); }
    int inverse(int w) const { return inverse_[w]; }
    // s_l * w and w * s_l
    int left_mul(int l, int w) const { return left_[w * (n_ > 1 ? n_ - 1 : 1) + l]; }
    int right_mul(int w, int l) const { return right_[w * (n_ > 1 ? n_ - 1 : 1) + l]; }
    int first_letter(int w) const { return words_[w].empty() ? -1 : words_[w][0]; }
    // the permutation w' with w = s_{first} w'
    int tail(int w) const { return tail_[w]; }
    int index_of(const OneLine& p) const;
    int from_word(const Word& word) const;
    int compose(int u, int v) const;
    bool is_left_descent(int l, int w) const { return length(left_mul(l, w)) < length(w); }

    // (w . nu)_{w(k)} = nu_k
    template <class Seq>
    Seq act(int w, const Seq& nu) const {
        Seq out = nu;
        const OneLine& p = perms_[w];
        for (int k = 0; k < n_; ++k) out[p[k]] = nu[k];
        return out;
    }

    // moves connecting two reduced words of one permutation
    struct Move {
        int pos;
        bool braid;  // false: commutation of two far letters
    };
    const std::vector<Move>& path(const Word& from, const Word& to) const;

private:
    explicit PermTable(int n);

    int n_;
    std::vector<OneLine> perms_;
    std::vector<Word> words_;
    std::vector<int> inverse_, left_, right_, tail_;
    std::unordered_map<std::uint64_t, int> index_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<Word, Word>, std::vector<Move>> paths_;
};

}  // namespace klr
