#include "tsgreen/decompose.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <string>
#include <utility>

#include "tsgreen/errors.hpp"
#include "tsgreen/session.hpp"
#include "tsgreen/vertex.hpp"

namespace tsgreen {

namespace {

constexpr int kSpinEndCap = 64;        // spin a full End basis up to this dim
constexpr int kPairCap = 256;          // exhaustive composite pairs per subgroup
constexpr int kCompositeSamples = 64;  // random composites when pairs overflow
constexpr int kProductCap = 512;       // pairwise End-basis products tried
constexpr int kRandomCombos = 128;
constexpr int kQuotientBudget = 512;   // idempotent hunt in End/J
constexpr long long kExhaustiveCap = 65536;
constexpr int kIdealPairCap = 8192;    // composite pairs in end_basis

std::vector<FqEl> vec_mat(const FFMatrix& m) { return m.data(); }

FqEl random_el(std::mt19937_64& rng, int q) { return static_cast<FqEl>(rng() % q); }

bool is_scalar(const FFMatrix& m) {
  const Fq& F = *m.field();
  FqEl c = m.at(0, 0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != (i == j ? c : F.from_int(0))) return false;
  return true;
}

FFMatrix random_combo(const std::vector<FFMatrix>& pool, std::mt19937_64& rng) {
  const FqPtr& k = pool.front().field();
  FFMatrix c(k, pool.front().rows(), pool.front().cols());
  for (const auto& m : pool) {
    FqEl a = random_el(rng, k->q());
    if (a) c = c + m.scale(a);
  }
  return c;
}

// One piece of the module being split; embedding columns live in the
// original parent's coordinates.
struct Part {
  Representation rep;
  FFMatrix embedding;
};

// ---------------------------------------------------------------------------
// Candidate endomorphism streams.

// Images of the conjugacy class sums: central, valid for every module.
std::vector<FFMatrix> class_sum_candidates(const Representation& m) {
  std::vector<FFMatrix> out;
  const PermGroup& g = m.group();
  for (const auto& cls : g.conjugacy_classes()) {
    if (cls.size() == 1 && cls[0] == 0) continue;  // identity class: scalar
    FFMatrix sum(m.field(), m.dim(), m.dim());
    for (int x : cls) sum = sum + m.image(x);
    out.push_back(std::move(sum));
  }
  return out;
}

// Composites g∘f through k[G/P] over the p-subgroup classes. All pairs when
// cheap, otherwise seeded random combinations on each side.
std::vector<FFMatrix> composite_candidates(Session& s, const Representation& m,
                                           std::mt19937_64& rng) {
  std::vector<FFMatrix> out;
  auto g = m.group_ptr();
  const FqPtr& k = m.field();
  auto pcls = p_subgroup_classes(s, *g, k->p());
  auto lat = s.lattice(*g);
  for (int cls : pcls) {
    Representation xp = perm_module(s, g, k, lat->classes[cls].rep,
                                    "k[G/P" + std::to_string(cls) + "]");
    auto fs = hom_into_perm(m, xp);
    auto gs = hom_from_perm(xp, m);
    if (fs.empty() || gs.empty()) continue;
    if (fs.size() * gs.size() <= kPairCap) {
      for (const auto& gm : gs)
        for (const auto& fm : fs) out.push_back(gm * fm);
    } else {
      for (int t = 0; t < kCompositeSamples; ++t)
        out.push_back(random_combo(gs, rng) * random_combo(fs, rng));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fitting split: a candidate endomorphism with a min poly that factors into
// at least two coprime primary parts splits the module into their kernels.

std::optional<std::vector<FFMatrix>> primary_split(const Representation& m, const FFMatrix& phi,
                                                   std::uint64_t factor_seed) {
  const FqPtr& k = m.field();
  if (is_scalar(phi)) return std::nullopt;
  FqPoly mu = ff_min_poly(phi);
  auto fac = poly_factor(*k, mu, factor_seed);
  if (fac.size() < 2) return std::nullopt;
  std::vector<FFMatrix> spaces;
  int total = 0;
  for (const auto& [f, e] : fac) {
    FqPoly power{1};
    for (int i = 0; i < e; ++i) power = poly_mul(*k, power, f);
    FFMatrix kern = ff_kernel(ff_poly_eval(phi, power));
    if (kern.cols() == 0)
      throw InternalCheckFailed("primary component of a min poly factor is zero");
    total += kern.cols();
    spaces.push_back(std::move(kern));
  }
  if (total != m.dim())
    throw InternalCheckFailed("primary components do not fill the module");
  return spaces;
}

// ---------------------------------------------------------------------------
// Quotient algebra E/J machinery for certification and idempotent lifting.

struct EndAlgebra {
  FqPtr k;
  int dim_m = 0;
  std::vector<FFMatrix> basis;  // complete basis of End(M)
  EchelonSolver span;           // vec space of the basis, coordinate-tracked
  std::vector<std::vector<FqEl>> jrows;  // radical basis, coords over `basis`
  EchelonSolver jspan;                   // row space of jrows
  std::vector<std::vector<FqEl>> qbasis; // normal forms spanning E/J
  std::vector<FqEl> qone;

  EndAlgebra(const FqPtr& field, int dm, std::vector<FFMatrix> b)
      : k(field), dim_m(dm), basis(std::move(b)),
        span(field, dm * dm, true), jspan(field, static_cast<int>(basis.size())) {
    for (const auto& mat : basis)
      if (!span.insert(vec_mat(mat)))
        throw InternalCheckFailed("endomorphism basis is linearly dependent");
    jrows = algebra_radical(k, basis);
    for (const auto& r : jrows) jspan.insert(r);
    EchelonSolver probe = jspan;
    for (std::size_t l = 0; l < basis.size(); ++l) {
      std::vector<FqEl> unit(basis.size(), 0);
      unit[l] = 1;
      if (probe.insert(unit)) qbasis.push_back(jspan.reduce(unit).residual);
    }
    qone = normal_form(coords_of(FFMatrix::identity(k, dim_m)));
  }

  int n() const { return static_cast<int>(basis.size()); }
  int t() const { return static_cast<int>(qbasis.size()); }

  std::vector<FqEl> coords_of(const FFMatrix& m) const {
    auto red = span.reduce(vec_mat(m));
    if (!red.in_span)
      throw InternalCheckFailed("product left the endomorphism algebra span");
    return red.coords;
  }
  FFMatrix mat_of(const std::vector<FqEl>& c) const {
    FFMatrix m(k, dim_m, dim_m);
    for (int l = 0; l < n(); ++l)
      if (c[l]) m = m + basis[l].scale(c[l]);
    return m;
  }
  std::vector<FqEl> normal_form(const std::vector<FqEl>& c) const {
    return jspan.reduce(c).residual;
  }
  std::vector<FqEl> qmul(const std::vector<FqEl>& a, const std::vector<FqEl>& b) const {
    return normal_form(coords_of(mat_of(a) * mat_of(b)));
  }
  std::vector<FqEl> qadd(const std::vector<FqEl>& a, const std::vector<FqEl>& b) const {
    std::vector<FqEl> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = k->add(a[i], b[i]);
    return c;
  }
  std::vector<FqEl> qscale(const std::vector<FqEl>& a, FqEl s) const {
    std::vector<FqEl> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = k->mul(a[i], s);
    return c;
  }
  bool qzero(const std::vector<FqEl>& a) const {
    return std::all_of(a.begin(), a.end(), [](FqEl x) { return x == 0; });
  }
  bool qinvertible(const std::vector<FqEl>& a) const {
    // Invertible in E/J iff the normal-form representative is an invertible
    // matrix: units lift along a nilpotent ideal, and a matrix inverse of an
    // algebra element lies in the algebra by Cayley-Hamilton.
    return ff_rank(mat_of(a)) == dim_m;
  }

  FqPoly qminpoly(const std::vector<FqEl>& x) const {
    EchelonSolver pow(k, n(), true);
    std::vector<FqEl> cur = qone;
    for (int j = 0; j <= t(); ++j) {
      auto red = pow.reduce(cur);
      if (red.in_span) {
        FqPoly mu(j + 1, 0);
        for (int i = 0; i < j; ++i) mu[i] = k->neg(red.coords[i]);
        mu[j] = 1;
        return mu;
      }
      pow.insert(cur);
      cur = qmul(cur, x);
    }
    throw InternalCheckFailed("quotient min poly exceeded the quotient dimension");
  }

  std::vector<FqEl> qpolyeval(const FqPoly& f, const std::vector<FqEl>& x) const {
    std::vector<FqEl> acc(n(), 0);
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
      acc = qmul(acc, x);
      if (f[i]) acc = qadd(acc, qscale(qone, f[i]));
    }
    return acc;
  }
};

// CRT idempotent from a split min poly, lifted to an exact idempotent of E.
FFMatrix lift_idempotent(const EndAlgebra& ea, const std::vector<FqEl>& x, const FqPoly& mu,
                         const std::vector<std::pair<FqPoly, int>>& fac) {
  const Fq& F = *ea.k;
  FqPoly a{1};
  for (int i = 0; i < fac[0].second; ++i) a = poly_mul(F, a, fac[0].first);
  FqPoly b = poly_divmod(F, mu, a).first;
  auto ext = poly_ext_gcd(F, a, b);
  if (poly_deg(ext.g) != 0)
    throw InternalCheckFailed("primary parts of a quotient min poly are not coprime");
  FqPoly epoly = poly_mod(F, poly_mul(F, ext.u, a), mu);
  std::vector<FqEl> e = ea.qpolyeval(epoly, x);
  if (ea.qzero(e) || ea.qmul(e, e) != e)
    throw InternalCheckFailed("CRT element is not a quotient idempotent");
  FFMatrix u = ea.mat_of(e);
  FFMatrix id = FFMatrix::identity(ea.k, ea.dim_m);
  FFMatrix three = id.scale(F.from_int(3));
  FFMatrix two = id.scale(F.from_int(2));
  for (int iter = 0; iter < 64; ++iter) {
    FFMatrix uu = u * u;
    if (uu == u) {
      if (u.is_zero() || u == id)
        throw InternalCheckFailed("lifted idempotent is trivial");
      return u;
    }
    u = uu * (three - two * u);  // precision doubles along the nilpotent J
  }
  throw InternalCheckFailed("idempotent lifting did not converge");
}

std::vector<FFMatrix> idempotent_spaces(const Representation& m, const FFMatrix& e) {
  std::vector<std::vector<FqEl>> im_cols;
  EchelonSolver span(m.field(), m.dim());
  for (int j = 0; j < e.cols(); ++j) {
    auto c = e.col(j);
    if (span.insert(c)) im_cols.push_back(c);
  }
  FFMatrix im = FFMatrix::from_cols(m.field(), m.dim(), im_cols);
  FFMatrix ker = ff_kernel(e);
  if (im.cols() + ker.cols() != m.dim() || im.cols() == 0 || ker.cols() == 0)
    throw InternalCheckFailed("idempotent does not split the module");
  return {im, ker};
}

// Either a certificate of indecomposability or subspaces that split the part.
struct CertifyOutcome {
  std::optional<IndecCertificate> cert;
  std::vector<FFMatrix> spaces;
};

CertifyOutcome certify_or_split(Session& s, const Representation& m,
                                std::mt19937_64& rng, std::uint64_t factor_seed) {
  EndBasis eb = end_basis(s, m);
  if (!eb.complete)
    throw DecompositionFailed("no complete endomorphism basis for '" + m.label() +
                              "' of dim " + std::to_string(m.dim()));
  EndAlgebra ea(m.field(), m.dim(), std::move(eb.basis));
  IndecCertificate cert;
  cert.end_dim = ea.n();
  cert.radical_dim = static_cast<int>(ea.jrows.size());
  cert.quotient_dim = ea.t();
  if (ea.t() == 1) {
    cert.absolutely_indecomposable = true;
    return {cert, {}};
  }

  // Hunt for a quotient element whose min poly has two coprime parts; its CRT
  // idempotent lifts and splits the module.
  auto try_element = [&](const std::vector<FqEl>& x) -> std::optional<std::vector<FFMatrix>> {
    if (ea.qzero(x)) return std::nullopt;
    FqPoly mu = ea.qminpoly(x);
    auto fac = poly_factor(*ea.k, mu, factor_seed);
    if (fac.size() < 2) return std::nullopt;
    FFMatrix e = lift_idempotent(ea, x, mu, fac);
    for (const auto& gi : m.gen_images())
      if (!(gi * e == e * gi))
        throw InternalCheckFailed("lifted idempotent is not equivariant");
    return idempotent_spaces(m, e);
  };
  int budget = kQuotientBudget;
  for (const auto& x : ea.qbasis) {
    if (budget-- <= 0) break;
    if (auto sp = try_element(x)) return {std::nullopt, std::move(*sp)};
  }
  for (const auto& x : ea.qbasis) {
    for (const auto& y : ea.qbasis) {
      if (budget-- <= 0) break;
      if (auto sp = try_element(ea.qmul(x, y))) return {std::nullopt, std::move(*sp)};
    }
    if (budget <= 0) break;
  }
  while (budget-- > 0) {
    std::vector<FqEl> x(ea.n(), 0);
    for (const auto& b : ea.qbasis) {
      FqEl c = random_el(rng, ea.k->q());
      if (c) x = ea.qadd(x, ea.qscale(b, c));
    }
    if (auto sp = try_element(x)) return {std::nullopt, std::move(*sp)};
  }

  // No idempotent found: certify E/J as a division ring when we can.
  bool commutative = true;
  for (std::size_t i = 0; i < ea.qbasis.size() && commutative; ++i)
    for (std::size_t j = i + 1; j < ea.qbasis.size(); ++j)
      if (ea.qmul(ea.qbasis[i], ea.qbasis[j]) != ea.qmul(ea.qbasis[j], ea.qbasis[i])) {
        commutative = false;
        break;
      }
  if (commutative) {
    // A primitive element of full degree makes E/J a field.
    auto is_field_witness = [&](const std::vector<FqEl>& x) {
      FqPoly mu = ea.qminpoly(x);
      return poly_deg(mu) == ea.t() && poly_is_irreducible(*ea.k, mu);
    };
    bool field = false;
    for (const auto& x : ea.qbasis)
      if (is_field_witness(x)) {
        field = true;
        break;
      }
    for (int tr = 0; tr < 64 && !field; ++tr) {
      std::vector<FqEl> x(ea.n(), 0);
      for (const auto& b : ea.qbasis) {
        FqEl c = random_el(rng, ea.k->q());
        if (c) x = ea.qadd(x, ea.qscale(b, c));
      }
      if (!ea.qzero(x) && is_field_witness(x)) field = true;
    }
    if (field) {
      cert.absolutely_indecomposable = false;
      return {cert, {}};
    }
  }
  long long sz = 1;
  bool small = true;
  for (int i = 0; i < ea.t(); ++i) {
    sz *= ea.k->q();
    if (sz > kExhaustiveCap) {
      small = false;
      break;
    }
  }
  if (small) {
    // Every nonzero element invertible => division ring => no idempotents.
    std::vector<FqEl> idx(ea.t(), 0);
    bool division = true;
    while (division) {
      int pos = 0;
      while (pos < ea.t() && idx[pos] == ea.k->q() - 1) idx[pos++] = 0;
      if (pos == ea.t()) break;
      idx[pos]++;
      std::vector<FqEl> x(ea.n(), 0);
      for (int i = 0; i < ea.t(); ++i)
        if (idx[i]) x = ea.qadd(x, ea.qscale(ea.qbasis[i], idx[i]));
      if (!ea.qinvertible(x)) division = false;
    }
    if (division) {
      cert.absolutely_indecomposable = false;
      return {cert, {}};
    }
  }
  throw DecompositionFailed("could not certify or split '" + m.label() + "': quotient dim " +
                            std::to_string(ea.t()));
}

}  // namespace

std::vector<std::vector<FqEl>> algebra_radical(const FqPtr& k, const std::vector<FFMatrix>& basis) {
  if (basis.empty()) return {};
  const int n = static_cast<int>(basis.size());
  const int dm = basis.front().rows();
  EchelonSolver span(k, dm * dm, true);
  for (const auto& b : basis)
    if (!span.insert(vec_mat(b)))
      throw InternalCheckFailed("algebra basis is linearly dependent");
  auto coords_of = [&](const FFMatrix& m) {
    auto red = span.reduce(vec_mat(m));
    if (!red.in_span)
      throw InternalCheckFailed("algebra is not closed under multiplication");
    return red.coords;
  };
  auto mat_of = [&](const std::vector<FqEl>& c) {
    FFMatrix m(k, dm, dm);
    for (int l = 0; l < n; ++l)
      if (c[l]) m = m + basis[l].scale(c[l]);
    return m;
  };

  // Chain of ideals cut out by the characteristic-polynomial coefficient
  // forms at t^(dm - p^i); the trace form alone degenerates in char p.
  std::vector<std::vector<FqEl>> chain;
  for (int l = 0; l < n; ++l) {
    std::vector<FqEl> unit(n, 0);
    unit[l] = 1;
    chain.push_back(std::move(unit));
  }
  const int p = k->p();
  const int d = k->d();
  long long pi = 1;
  for (int i = 0; pi <= dm; ++i, pi *= p) {
    if (chain.empty()) break;
    const int cur = static_cast<int>(chain.size());
    std::vector<FFMatrix> mats;
    mats.reserve(cur);
    for (const auto& c : chain) mats.push_back(mat_of(c));
    // System over eta = xi^(p^i): sum_l eta_l * coeff(B_l * B_j) = 0 for all j.
    FFMatrix sys(k, cur, cur);
    for (int l = 0; l < cur; ++l)
      for (int j = 0; j < cur; ++j) {
        FqPoly cp = ff_charpoly(mats[l] * mats[j]);
        sys.set(j, l, cp[dm - static_cast<int>(pi)]);
      }
    FFMatrix eta_kernel = ff_kernel(sys);
    // Pull back through the Frobenius power and respan over k.
    int back = (d - (i % d)) % d;
    EchelonSolver next_span(k, n);
    std::vector<std::vector<FqEl>> next;
    // k-basis scalars: powers of the generator t (encoding p) span k over GF(p).
    std::vector<FqEl> kbasis;
    {
      FqEl t = d == 1 ? 1 : static_cast<FqEl>(p);
      FqEl cur_el = 1;
      for (int s = 0; s < d; ++s) {
        kbasis.push_back(cur_el);
        cur_el = k->mul(cur_el, t);
      }
    }
    for (int c = 0; c < eta_kernel.cols(); ++c) {
      for (FqEl scal : kbasis) {
        std::vector<FqEl> xi(cur);
        for (int l = 0; l < cur; ++l)
          xi[l] = k->frob_iter(k->mul(scal, eta_kernel.at(l, c)), back);
        std::vector<FqEl> row(n, 0);
        for (int l = 0; l < cur; ++l)
          if (xi[l])
            for (int b = 0; b < n; ++b) row[b] = k->add(row[b], k->mul(xi[l], chain[l][b]));
        if (next_span.insert(row)) next.push_back(std::move(row));
      }
    }
    chain = std::move(next);
  }

  // Verify: a two-sided ideal whose power chain reaches zero.
  EchelonSolver jspan(k, n);
  for (const auto& r : chain)
    if (!jspan.insert(r)) throw InternalCheckFailed("radical rows are dependent");
  for (const auto& r : chain) {
    FFMatrix rm = mat_of(r);
    for (const auto& b : basis) {
      if (!jspan.reduce(coords_of(rm * b)).in_span ||
          !jspan.reduce(coords_of(b * rm)).in_span)
        throw InternalCheckFailed("computed radical is not a two-sided ideal");
    }
  }
  std::vector<FFMatrix> power;
  for (const auto& r : chain) power.push_back(mat_of(r));
  std::vector<FFMatrix> gens = power;
  for (int it = 0; it <= n && !power.empty(); ++it) {
    EchelonSolver pspan(k, dm * dm);
    std::vector<FFMatrix> next;
    for (const auto& a : power)
      for (const auto& b : gens) {
        FFMatrix prod = a * b;
        if (!prod.is_zero() && pspan.insert(vec_mat(prod))) next.push_back(std::move(prod));
      }
    power = std::move(next);
  }
  if (!power.empty()) throw InternalCheckFailed("computed radical is not nilpotent");
  return chain;
}

EndBasis end_basis(Session& s, const Representation& m) {
  if (m.perm_origin()) return {hecke_end_basis(m), true};
  if (m.dim() <= kSpinEndCap) return {hom_space(m, m), true};
  // Ideal of composites through the p-subgroup permutation modules; spans all
  // of End(M) exactly when the identity lies in it (trivial-source case).
  auto g = m.group_ptr();
  const FqPtr& k = m.field();
  EchelonSolver span(k, m.dim() * m.dim());
  std::vector<FFMatrix> basis;
  bool overflow = false;
  auto lat = s.lattice(*g);
  for (int cls : p_subgroup_classes(s, *g, k->p())) {
    Representation xp = perm_module(s, g, k, lat->classes[cls].rep,
                                    "k[G/P" + std::to_string(cls) + "]");
    auto fs = hom_into_perm(m, xp);
    auto gs = hom_from_perm(xp, m);
    if (static_cast<long long>(fs.size()) * static_cast<long long>(gs.size()) >
        kIdealPairCap) {
      overflow = true;
      continue;
    }
    for (const auto& gm : gs)
      for (const auto& fm : fs) {
        FFMatrix c = gm * fm;
        if (span.insert(vec_mat(c))) basis.push_back(std::move(c));
      }
  }
  bool complete =
      !overflow && span.reduce(vec_mat(FFMatrix::identity(k, m.dim()))).in_span;
  if (!complete) {
    for (auto& c : class_sum_candidates(m))
      if (span.insert(vec_mat(c))) basis.push_back(std::move(c));
    FFMatrix id = FFMatrix::identity(k, m.dim());
    if (span.insert(vec_mat(id))) basis.push_back(std::move(id));
  }
  return {std::move(basis), complete};
}

bool iso_indec(const Representation& a, const Representation& b) {
  if (a.dim() != b.dim()) return false;
  if (!a.field()->same(*b.field())) return false;
  if (a.group().key() != b.group().key())
    throw BadInput("isomorphism test across different groups");
  auto h1 = hom_space(a, b);
  auto h2 = hom_space(b, a);
  for (const auto& gm : h2)
    for (const auto& fm : h1)
      if (ff_rank(gm * fm) == a.dim()) return true;
  return false;
}

std::optional<int> find_class(const Decomposition& d, const Representation& v,
                              const std::vector<FqEl>& v_fingerprint) {
  for (std::size_t i = 0; i < d.classes.size(); ++i) {
    const Summand& c = d.classes[i];
    if (c.rep.dim() != v.dim() || c.fingerprint != v_fingerprint) continue;
    if (iso_indec(c.rep, v)) return static_cast<int>(i);
  }
  return std::nullopt;
}

Decomposition decompose(Session& s, const Representation& m) {
  if (m.dim() > s.config().dim_cap)
    throw CapExceeded("module dim " + std::to_string(m.dim()) + " exceeds cap " +
                      std::to_string(s.config().dim_cap));
  Decomposition out;
  out.parent_dim = m.dim();
  out.change_of_basis = FFMatrix::identity(m.field(), m.dim());
  if (m.dim() == 0) return out;

  std::mt19937_64 rng(s.derive_seed("decompose:" + m.group().key() + ":" +
                                    m.field()->name() + ":" + m.label()));
  std::uint64_t factor_seed = s.derive_seed("decompose-factor:" + m.label());

  std::deque<Part> work;
  work.push_back({m, FFMatrix::identity(m.field(), m.dim())});
  std::vector<Part> leaves;
  std::vector<IndecCertificate> leaf_certs;
  int child_counter = 0;

  auto push_children = [&](const Part& parent, const std::vector<FFMatrix>& spaces) {
    for (const auto& cols : spaces) {
      std::string label = m.label() + "." + std::to_string(child_counter++);
      Representation child = sub_rep(parent.rep, cols, label);
      work.push_back({std::move(child), parent.embedding * cols});
    }
  };

  while (!work.empty()) {
    Part part = std::move(work.front());
    work.pop_front();
    if (part.rep.dim() == 1) {
      leaves.push_back(std::move(part));
      leaf_certs.push_back({1, 0, 1, true});
      continue;
    }
    bool split = false;
    auto try_stage = [&](const std::vector<FFMatrix>& candidates) {
      for (const auto& phi : candidates) {
        if (auto spaces = primary_split(part.rep, phi, factor_seed)) {
          push_children(part, *spaces);
          split = true;
          return;
        }
      }
    };
    std::vector<FFMatrix> pool;
    auto stash = [&](std::vector<FFMatrix> v) {
      for (auto& c : v) pool.push_back(std::move(c));
    };

    auto cls_sums = class_sum_candidates(part.rep);
    try_stage(cls_sums);
    if (!split) stash(std::move(cls_sums));
    if (!split && part.rep.perm_origin()) {
      auto hecke = hecke_end_basis(part.rep);
      try_stage(hecke);
      if (!split) stash(std::move(hecke));
    }
    if (!split) {
      auto comp = composite_candidates(s, part.rep, rng);
      try_stage(comp);
      if (!split) stash(std::move(comp));
    }
    if (!split && part.rep.dim() <= kSpinEndCap && !part.rep.perm_origin()) {
      auto endb = hom_space(part.rep, part.rep);
      try_stage(endb);
      if (!split) {
        std::vector<FFMatrix> prods;
        int count = 0;
        for (const auto& a : endb) {
          for (const auto& b : endb) {
            if (count++ >= kProductCap) break;
            prods.push_back(a * b);
          }
          if (count >= kProductCap) break;
        }
        try_stage(prods);
      }
      if (!split) stash(std::move(endb));
    }
    if (!split && !pool.empty()) {
      std::vector<FFMatrix> combos;
      for (int t = 0; t < kRandomCombos; ++t) combos.push_back(random_combo(pool, rng));
      try_stage(combos);
    }
    if (split) continue;

    auto outcome = certify_or_split(s, part.rep, rng, factor_seed);
    if (outcome.cert) {
      leaf_certs.push_back(*outcome.cert);
      leaves.push_back(std::move(part));
    } else {
      push_children(part, outcome.spaces);
    }
  }

  // Group leaves into iso classes; order classes by (dim, fingerprint,
  // discovery) and keep same-class blocks adjacent.
  std::vector<std::vector<FqEl>> fps;
  std::vector<int> leaf_class(leaves.size(), -1);
  std::vector<int> class_first;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    auto fp = leaves[i].rep.fingerprint();
    int found = -1;
    for (std::size_t c = 0; c < class_first.size(); ++c) {
      const auto& rep = leaves[class_first[c]].rep;
      if (rep.dim() != leaves[i].rep.dim() || fps[c] != fp) continue;
      if (iso_indec(rep, leaves[i].rep)) {
        found = static_cast<int>(c);
        break;
      }
    }
    if (found < 0) {
      found = static_cast<int>(class_first.size());
      class_first.push_back(static_cast<int>(i));
      fps.push_back(fp);
    }
    leaf_class[i] = found;
  }
  std::vector<int> order(class_first.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int da = leaves[class_first[a]].rep.dim(), db = leaves[class_first[b]].rep.dim();
    if (da != db) return da < db;
    if (fps[a] != fps[b]) return fps[a] < fps[b];
    return a < b;
  });
  std::vector<int> new_id(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) new_id[order[i]] = static_cast<int>(i);

  out.multiplicities.assign(order.size(), 0);
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    leaf_class[i] = new_id[leaf_class[i]];
    out.multiplicities[leaf_class[i]]++;
  }
  std::vector<int> leaf_order(leaves.size());
  for (std::size_t i = 0; i < leaf_order.size(); ++i) leaf_order[i] = static_cast<int>(i);
  std::stable_sort(leaf_order.begin(), leaf_order.end(),
                   [&](int a, int b) { return leaf_class[a] < leaf_class[b]; });

  FFMatrix cob(m.field(), m.dim(), m.dim());
  int col = 0;
  for (int li : leaf_order) {
    out.block_classes.push_back(leaf_class[li]);
    const FFMatrix& emb = leaves[li].embedding;
    for (int j = 0; j < emb.cols(); ++j, ++col)
      for (int i = 0; i < m.dim(); ++i) cob.set(i, col, emb.at(i, j));
  }
  if (col != m.dim()) throw InternalCheckFailed("summand dimensions do not fill the module");
  out.change_of_basis = cob;

  // Verify the conjugated generators are block diagonal with the leaf blocks.
  FFMatrix cinv = ff_inverse(cob);
  for (std::size_t gi = 0; gi < m.gen_images().size(); ++gi) {
    FFMatrix t = cinv * (m.gen_images()[gi] * cob);
    int r0 = 0;
    for (int li : leaf_order) {
      const Representation& lr = leaves[li].rep;
      const FFMatrix& blk = lr.gen_images()[gi];
      for (int i = 0; i < lr.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) {
          FqEl want = (j >= r0 && j < r0 + lr.dim()) ? blk.at(i, j - r0) : 0;
          if (t.at(r0 + i, j) != want)
            throw InternalCheckFailed("decomposition is not block diagonal");
        }
      r0 += lr.dim();
    }
  }

  // First leaf of each class (in block order) becomes the class representative.
  out.classes.reserve(order.size());
  std::vector<int> done(order.size(), 0);
  for (int li : leaf_order) {
    int c = leaf_class[li];
    if (done[c]) continue;
    done[c] = 1;
    Summand sm{std::move(leaves[li].rep), std::move(leaves[li].embedding),
               leaf_certs[li], {}};
    sm.fingerprint = sm.rep.fingerprint();
    out.classes.push_back(std::move(sm));
  }
  return out;
}

}  // namespace tsgreen
