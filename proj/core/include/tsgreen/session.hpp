#pragma once

#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "tsgreen/config.hpp"
#include "tsgreen/decompose.hpp"
#include "tsgreen/group_spec.hpp"
#include "tsgreen/perm_group.hpp"
#include "tsgreen/ts_basis.hpp"

namespace tsgreen {

// Holds the run configuration and the memoized expensive objects (subgroup
// lattices, permutation-module decompositions, bases, tables). Caches are
// safe under concurrent readers with single-writer initialization.
class Session {
 public:
  explicit Session(RunConfig cfg = {});

  const RunConfig& config() const { return cfg_; }

  std::shared_ptr<const PermGroup> group(const std::string& spec);
  std::shared_ptr<const SubgroupLattice> lattice(const PermGroup& g);
  std::shared_ptr<const SubgroupGroup> subgroup(const PermGroup& g, int cls);
  std::shared_ptr<const Decomposition> perm_decomposition(std::shared_ptr<const PermGroup> g,
                                                          const FqPtr& k, int cls);
  std::shared_ptr<const TSBasis> basis(std::shared_ptr<const PermGroup> g, const FqPtr& k);
  std::shared_ptr<const MultTable> mult(std::shared_ptr<const PermGroup> g, const FqPtr& k);

  // Deterministic per-purpose PRNG seed derived from the configured seed.
  std::uint64_t derive_seed(const std::string& purpose) const;

 private:
  template <typename V>
  class KeyedCache {
   public:
    std::shared_ptr<const V> get(const std::string& key,
                                 const std::function<std::shared_ptr<const V>()>& build) {
      std::promise<std::shared_ptr<const V>> prom;
      std::shared_future<std::shared_ptr<const V>> fut;
      bool is_builder = false;
      {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = map_.find(key);
        if (it != map_.end()) {
          fut = it->second;
        } else {
          fut = prom.get_future().share();
          map_.emplace(key, fut);
          is_builder = true;
        }
      }
      if (is_builder) {
        try {
          prom.set_value(build());
        } catch (...) {
          prom.set_exception(std::current_exception());
        }
      }
      return fut.get();
    }

   private:
    std::mutex mu_;
    std::map<std::string, std::shared_future<std::shared_ptr<const V>>> map_;
  };

  RunConfig cfg_;
  KeyedCache<PermGroup> groups_;
  KeyedCache<SubgroupLattice> lattices_;
  KeyedCache<SubgroupGroup> subgroups_;
  KeyedCache<Decomposition> perm_decomps_;
  KeyedCache<TSBasis> bases_;
  KeyedCache<MultTable> mults_;
};

}  // namespace tsgreen
