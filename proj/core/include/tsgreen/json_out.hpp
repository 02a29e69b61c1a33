#pragma once

#include <string>
#include <vector>

#include "tsgreen/classify.hpp"
#include "tsgreen/config.hpp"
#include "tsgreen/decompose.hpp"
#include "tsgreen/primordial.hpp"
#include "tsgreen/ts_basis.hpp"

namespace tsgreen {

class Session;

// Deterministic JSON documents (byte-identical for identical inputs and seed).
// Every document carries the tool/version/seed/caps envelope; timing never
// appears in a document, so goldens stay stable.

std::string classify_json(const RunConfig& cfg, const PermGroup& g, const FqPtr& k,
                          const DressReport& dress, const std::vector<int>& dress_qs);
std::string imset_json(const RunConfig& cfg, const FqPtr& k, int m,
                       const std::vector<int>& iset);
std::string ts_basis_json(Session& s, const TSBasis& b, bool emit_matrices);
std::string decompose_json(Session& s, const FqPtr& k, const std::string& module_desc,
                           const Decomposition& d, bool emit_matrices);
std::string primordial_json(Session& s, const std::shared_ptr<const PermGroup>& g,
                            const FqPtr& k, const PrimordialVerdict& v);
std::string certificate_json(const RunConfig& cfg, const FqPtr& k, const Prop35Certificate& c);
std::string theorem_json(const RunConfig& cfg, const TheoremReport& r);
std::string theorem_csv(const TheoremReport& r);
std::string error_json(const std::string& code, const std::string& message);

}  // namespace tsgreen
