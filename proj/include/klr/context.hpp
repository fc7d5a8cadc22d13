#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "klr/cyclotomic.hpp"
#include "klr/klr.hpp"

namespace klr {

// Persistent storage for cyclotomic quotients.
class CycStore {
public:
    virtual ~CycStore() = default;
    virtual std::shared_ptr<const CycAlgebra> load(std::shared_ptr<const KLRAlgebra> R, const DominantWeight& lam,
                                                   const RootCombo& beta) = 0;
    virtual void save(const CycAlgebra& A) = 0;
};

// Shares KLR algebras per strand count and cyclotomic quotients per (Lambda, beta).
class Context {
public:
    Context(CartanDatum datum, QSpec qspec);

    const CartanDatum& datum() const { return datum_; }
    const QSpec& qspec() const { return qspec_; }
    std::shared_ptr<const KLRAlgebra> klr(int n) const;
    std::shared_ptr<const CycAlgebra> cyc(const DominantWeight& lam, const RootCombo& beta) const;
    void set_store(std::shared_ptr<CycStore> store) { store_ = std::move(store); }

private:
    CartanDatum datum_;
    QSpec qspec_;
    std::shared_ptr<CycStore> store_;
    mutable std::mutex mu_;
    mutable std::map<int, std::shared_ptr<const KLRAlgebra>> klr_;
    mutable std::map<std::pair<std::vector<int>, std::vector<int>>, std::shared_ptr<const CycAlgebra>> cyc_;
};

}  // namespace klr
