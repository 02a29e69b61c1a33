#include "tsgreen/primordial.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <string>
#include <thread>

#include "tsgreen/errors.hpp"
#include "tsgreen/session.hpp"

namespace tsgreen {

InductionLattice induction_lattice(Session& s, std::shared_ptr<const PermGroup> g,
                                   const FqPtr& k) {
  auto bg = s.basis(g, k);
  auto lat = s.lattice(*g);
  InductionLattice out;
  std::vector<IntMatrix> blocks;
  int total_cols = 0;
  for (int cls = 0; cls < lat->full_class(); ++cls) {
    auto sub = s.subgroup(*g, cls);
    auto bk = s.basis(sub->grp, k);
    blocks.push_back(induction_matrix(s, *bk, *bg, *sub));
    for (int j = 0; j < bk->size(); ++j) out.provenance.push_back({cls, j});
    total_cols += bk->size();
  }
  out.matrix = IntMatrix(bg->size(), total_cols);
  int col = 0;
  for (const auto& blk : blocks)
    for (int j = 0; j < blk.cols(); ++j, ++col)
      for (int i = 0; i < blk.rows(); ++i) out.matrix.at(i, col) = blk.at(i, j);
  return out;
}

PrimordialVerdict is_primordial(Session& s, std::shared_ptr<const PermGroup> g,
                                const FqPtr& k) {
  PrimordialVerdict v;
  v.lattice = induction_lattice(s, g, k);
  v.basis_size = v.lattice.matrix.rows();
  std::vector<Int> e0(v.basis_size, 0);
  e0[0] = 1;
  auto query = lattice_contains(v.lattice.matrix, e0);
  v.identity_in_t = query.contains;
  v.lattice_full = lattice_equals_zn(v.lattice.matrix);
  v.snf_divisors = int_snf(v.lattice.matrix).divisors;
  // T(G) is an ideal, so containing the ring identity and being everything
  // are the same statement; disagreement means a computation bug.
  if (v.identity_in_t != v.lattice_full)
    throw Error("inconsistent_ideal_check",
                "Hermite membership and Smith fullness disagree for " + g->name());
  v.is_primordial = !v.identity_in_t;
  if (query.contains) {
    v.witness = query.witness;
    std::vector<Int> check = v.lattice.matrix.apply(v.witness);
    if (check != e0)
      throw InternalCheckFailed("lattice witness does not reproduce the identity class");
  }
  return v;
}

TheoremReport verify_theorem(const RunConfig& cfg, const std::vector<CatalogEntry>& entries) {
  auto t0 = std::chrono::steady_clock::now();
  TheoremReport report;
  report.rows.resize(entries.size());
  std::vector<std::exception_ptr> errors(entries.size());

  auto run_entry = [&](std::size_t i) {
    try {
      Session s(cfg);
      auto g = s.group(entries[i].group_spec);
      FqPtr k = Fq::parse(entries[i].field_spec);
      DressReport dress = dress_report(*g, k);
      PrimordialVerdict verdict = is_primordial(s, g, k);
      auto qs = dress_primes(*g, k->p());
      TheoremRow row;
      row.group = entries[i].group_spec;
      row.field = k->name();
      row.order = g->order();
      row.p = k->p();
      row.k_dress = dress.k_dress;
      row.primordial = verdict.is_primordial;
      row.agree = dress.k_dress == verdict.is_primordial;
      row.dress_q = qs.empty() ? 0 : qs.front();
      report.rows[i] = std::move(row);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };

  int jobs = cfg.jobs > 1 ? cfg.jobs : 1;
  if (jobs == 1) {
    for (std::size_t i = 0; i < entries.size(); ++i) run_entry(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < entries.size(); i = next.fetch_add(1))
          run_entry(i);
      });
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  report.all_agree = true;
  for (const auto& row : report.rows) report.all_agree = report.all_agree && row.agree;
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

Prop35Certificate prop35_certificate(Session& s, int r, int q, int n, int a, const FqPtr& k) {
  if (!int_is_prime(r) || !int_is_prime(q)) throw BadInput("r and q must be prime");
  if (r == q) throw BadInput("r and q must be distinct");
  if (r == k->p()) throw BadInput("r must differ from the field characteristic");
  if (n < 1) throw BadInput("the complement exponent n must be positive");
  if (a <= 0 || a >= r) throw BadInput("the action exponent must lie in (0, r)");
  long long qn = 1;
  for (int i = 0; i < n; ++i) {
    qn *= q;
    if (qn > 100000) throw BadInput("complement order is too large");
  }
  // The action must be faithful: a has multiplicative order exactly q^n mod r.
  long long ord = 1, acc = a % r;
  while (acc != 1) {
    acc = (acc * a) % r;
    if (++ord > r) throw BadInput("the action exponent is not invertible mod r");
  }
  if (ord != qn) throw BadInput("the action exponent does not have order q^n mod r");
  auto iset = galois_index_set(r, k);
  if (std::find(iset.begin(), iset.end(), a % r) != iset.end())
    throw BadInput("the action exponent lies in the Galois index set, so the group is k-Dress");

  std::string spec =
      "C" + std::to_string(r) + ":C" + std::to_string(qn) + "@" + std::to_string(a);
  auto h = s.group(spec);
  auto lat = s.lattice(*h);
  auto bh = s.basis(h, k);
  int qcls = sylow_class(*h, *lat, q);
  auto dq = s.perm_decomposition(h, k, qcls);
  ClassVector vq = classify_decomposition(s, *bh, *dq);

  Prop35Certificate cert;
  cert.r = r;
  cert.q = q;
  cert.n = n;
  cert.a = a;
  cert.trivial_multiplicity = static_cast<int>(vq[0]);
  if (cert.trivial_multiplicity != 1)
    throw Error("certificate_failed",
                "trivial multiplicity in k[H/Q] is " + std::to_string(cert.trivial_multiplicity));
  Int dims = 1;
  for (int i = 1; i < bh->size(); ++i) dims += vq[i] * bh->elems[i].rep.dim();
  if (dims != r)
    throw Error("certificate_failed", "summand dimensions do not add up to r");

  InductionLattice ilat = induction_lattice(s, h, k);
  Hnf hnf = int_hnf(ilat.matrix);

  // The permutation module itself is induced from the Sylow complement; find
  // its lattice column (provenance: trivial element of basis(Q)).
  int perm_col = -1;
  for (std::size_t c = 0; c < ilat.provenance.size(); ++c)
    if (ilat.provenance[c].subgroup_class == qcls && ilat.provenance[c].basis_index == 0) {
      perm_col = static_cast<int>(c);
      break;
    }
  if (perm_col < 0) throw InternalCheckFailed("missing induction column for k[H/Q]");
  for (int i = 0; i < bh->size(); ++i)
    if (ilat.matrix.at(i, perm_col) != vq[i])
      throw InternalCheckFailed("induction column for k[H/Q] disagrees with its decomposition");

  // Each non-trivial summand class must itself lie in T(H); collect a covering
  // induction column and a membership witness per class.
  std::vector<Int> total(ilat.provenance.size(), 0);
  total[perm_col] = 1;
  for (int i = 1; i < bh->size(); ++i) {
    if (vq[i] == 0) continue;
    int cover = -1;
    for (std::size_t c = 0; c < ilat.provenance.size() && cover < 0; ++c)
      if (ilat.matrix.at(i, static_cast<int>(c)) >= 1) cover = static_cast<int>(c);
    std::vector<Int> ei(bh->size(), 0);
    ei[i] = 1;
    auto query = lattice_contains(hnf, ilat.matrix, ei);
    if (cover < 0 || !query.contains)
      throw Error("certificate_failed",
                  "summand of dim " + std::to_string(bh->elems[i].rep.dim()) +
                      " is not induced from a proper subgroup");
    for (long long copy = 0; copy < static_cast<long long>(vq[i]); ++copy) {
      cert.summand_dims.push_back(bh->elems[i].rep.dim());
      cert.cover_subgroup.push_back(ilat.provenance[cover].subgroup_class);
      cert.cover_basis_index.push_back(ilat.provenance[cover].basis_index);
    }
    for (std::size_t c = 0; c < total.size(); ++c) total[c] -= vq[i] * query.witness[c];
  }

  // e_0 = [k[H/Q]] - sum of the non-trivial summands, all inside T(H).
  std::vector<Int> e0(bh->size(), 0);
  e0[0] = 1;
  if (ilat.matrix.apply(total) != e0)
    throw Error("certificate_failed", "assembled witness does not reproduce the identity class");
  cert.witness = std::move(total);

  // Cross-check against the direct primordiality test.
  PrimordialVerdict pv = is_primordial(s, h, k);
  if (!pv.identity_in_t || pv.is_primordial)
    throw Error("inconsistent_ideal_check",
                "certificate found the identity in T(H) but is_primordial disagrees");
  return cert;
}

}  // namespace tsgreen
