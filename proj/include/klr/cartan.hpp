#pragma once

#include <string>
#include <vector>

#include "klr/laurent.hpp"

namespace klr {

using Matrix = std::vector<std::vector<int>>;

// Levels <h_i, Lambda>, indexed like the Cartan labels.
struct DominantWeight {
    std::vector<int> levels;
};

// Nonnegative combination sum k_i alpha_i.
struct RootCombo {
    std::vector<int> coeffs;

    int height() const;
    bool nonnegative() const;
    RootCombo plus(int i, int times = 1) const;
    friend bool operator==(const RootCombo&, const RootCombo&) = default;
    friend auto operator<=>(const RootCombo&, const RootCombo&) = default;
};

class CartanDatum {
public:
    // Validates the GCM axioms and computes minimal symmetrizers.
    static CartanDatum build(const Matrix& a, std::vector<std::string> labels = {});

    int rank() const { return static_cast<int>(a_.size()); }
    int a(int i, int j) const { return a_[i][j]; }
    int d(int i) const { return d_[i]; }
    const Matrix& matrix() const { return a_; }
    const std::vector<int>& symmetrizers() const { return d_; }
    const std::vector<std::string>& labels() const { return labels_; }
    int label_index(const std::string& name) const;

    // (alpha_i | alpha_j)
    int sym(int i, int j) const { return d_[i] * a_[i][j]; }
    int sym_form(const RootCombo& b1, const RootCombo& b2) const;
    // <h_i, Lambda - beta>
    int coroot_pair(int i, const DominantWeight& lam, const RootCombo& beta) const;
    // (alpha_i | Lambda - beta)
    int root_pair(int i, const DominantWeight& lam, const RootCombo& beta) const;
    // (Lambda | beta)
    int weight_root_pair(const DominantWeight& lam, const RootCombo& beta) const;

    RootCombo zero_root() const { return RootCombo{std::vector<int>(a_.size(), 0)}; }
    RootCombo simple_root(int i) const;
    void check_weight(const DominantWeight& lam) const;
    void check_root(const RootCombo& beta) const;

private:
    Matrix a_;
    std::vector<int> d_;
    std::vector<std::string> labels_;
};

// Symmetric quantum integer [n]_i with q_i = q^{d}.
LaurentPoly qint(int n, int d = 1);
LaurentPoly qfact(int n, int d = 1);
LaurentPoly qbinom(int n, int k, int d = 1);

}  // namespace klr
