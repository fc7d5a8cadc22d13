#pragma once

#include <optional>
#include <string>
#include <vector>

#include "klr/context.hpp"
#include "klr/report.hpp"

namespace klr {

// graded dimension of R(beta) from the iterated free-module decomposition, through degree `through`
LaurentPoly pbw_series(const CartanDatum& D, const RootCombo& beta, int through);

Report check_pbw(const Context& ctx, const RootCombo& beta, int dcap);
Report check_convolution(const Context& ctx, const RootCombo& beta, int i, int j, int dcap);
Report check_exact(const Context& ctx, const DominantWeight& lam, const RootCombo& beta, int i,
                   std::optional<int> window = std::nullopt);
Report check_taug(const Context& ctx, const DominantWeight& lam, const RootCombo& beta, int i);
Report check_sl2(const Context& ctx, const DominantWeight& lam, const RootCombo& beta, int i);
Report check_mixed(const Context& ctx, const DominantWeight& lam, const RootCombo& beta, int i, int j);
Report check_phi(const Context& ctx, const DominantWeight& lam, const RootCombo& beta, int i, int kmax);
Report check_categorification(const Context& ctx, const DominantWeight& lam, int nmax);

const std::vector<std::string>& check_names();

struct SuiteSpec {
    DominantWeight lam;
    // every beta with |beta| <= nmax, unless `beta` is set
    int nmax = 2;
    std::optional<RootCombo> beta;
    // "all" or check names
    std::vector<std::string> checks{"all"};
    int dcap = 10;
    std::optional<int> window;
    int kmax = 4;
    int taug_max_height = 2;
    int jobs = 1;
};

// Runs every requested check; failures and exceptions are recorded, never thrown.
std::vector<Report> run_checks(const Context& ctx, const SuiteSpec& spec);

// all beta >= 0 with |beta| <= n, in lexicographic order of coefficients
std::vector<RootCombo> roots_up_to(const CartanDatum& D, int n);

}  // namespace klr
