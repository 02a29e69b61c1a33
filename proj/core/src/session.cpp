#include "tsgreen/session.hpp"

#include "tsgreen/errors.hpp"
#include "tsgreen/vertex.hpp"

namespace tsgreen {

namespace {

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t len) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

// Cache key for a field: the name alone cannot tell apart two copies of
// GF(p^d) with different defining moduli.
std::string field_key(const FqPtr& k) {
  std::string s = k->name();
  for (int c : k->modulus()) s += "," + std::to_string(c);
  return s;
}

}  // namespace

Session::Session(RunConfig cfg) : cfg_(std::move(cfg)) {}

std::uint64_t Session::derive_seed(const std::string& purpose) const {
  std::uint64_t h = 14695981039346656037ULL;
  std::uint64_t seed = cfg_.seed;
  h = fnv1a(h, &seed, sizeof seed);
  h = fnv1a(h, purpose.data(), purpose.size());
  return h;
}

std::shared_ptr<const PermGroup> Session::group(const std::string& spec) {
  return groups_.get(spec, [&] { return build_group(spec, cfg_.order_cap); });
}

std::shared_ptr<const SubgroupLattice> Session::lattice(const PermGroup& g) {
  return lattices_.get(g.key(), [&] {
    return std::make_shared<const SubgroupLattice>(build_subgroup_lattice(g));
  });
}

std::shared_ptr<const SubgroupGroup> Session::subgroup(const PermGroup& g, int cls) {
  return subgroups_.get(g.key() + "#" + std::to_string(cls), [&] {
    auto lat = lattice(g);
    const auto& c = lat->classes.at(cls);
    return std::make_shared<const SubgroupGroup>(
        make_subgroup_group(g, c.rep, g.name() + "#" + std::to_string(cls)));
  });
}

std::shared_ptr<const Decomposition> Session::perm_decomposition(
    std::shared_ptr<const PermGroup> g, const FqPtr& k, int cls) {
  return perm_decomps_.get(g->key() + "|" + field_key(k) + "#" + std::to_string(cls), [&] {
    auto lat = lattice(*g);
    Representation m = perm_module(*this, g, k, lat->classes.at(cls).rep,
                                   "k[" + g->name() + "/P" + std::to_string(cls) + "]");
    return std::make_shared<const Decomposition>(decompose(*this, m));
  });
}

std::shared_ptr<const TSBasis> Session::basis(std::shared_ptr<const PermGroup> g,
                                              const FqPtr& k) {
  return bases_.get(g->key() + "|" + field_key(k), [&] {
    return std::make_shared<const TSBasis>(build_ts_basis(*this, g, k));
  });
}

std::shared_ptr<const MultTable> Session::mult(std::shared_ptr<const PermGroup> g,
                                               const FqPtr& k) {
  return mults_.get(g->key() + "|" + field_key(k), [&] {
    auto b = basis(g, k);
    return std::make_shared<const MultTable>(build_mult_table(*this, *b));
  });
}

}  // namespace tsgreen
