#include "klr/context.hpp"

namespace klr {

Context::Context(CartanDatum datum, QSpec qspec) : datum_(std::move(datum)), qspec_(std::move(qspec)) {
    qspec_.validate(datum_);
}

std::shared_ptr<const KLRAlgebra> Context::klr(int n) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = klr_[n];
    if (!slot) slot = std::make_shared<const KLRAlgebra>(datum_, qspec_, n);
    return slot;
}

std::shared_ptr<const CycAlgebra> Context::cyc(const DominantWeight& lam, const RootCombo& beta) const {
    datum_.check_weight(lam);
    datum_.check_root(beta);
    auto R = klr(beta.height());
    auto key = std::make_pair(lam.levels, beta.coeffs);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cyc_.find(key);
        if (it != cyc_.end()) return it->second;
    }
    std::shared_ptr<const CycAlgebra> built;
    if (store_) built = store_->load(R, lam, beta);
    if (!built) {
        built = std::make_shared<const CycAlgebra>(R, lam, beta);
        if (store_) store_->save(*built);
    }
    std::lock_guard<std::mutex> lock(mu_);
    return cyc_.emplace(key, built).first->second;
}

}  // namespace klr
