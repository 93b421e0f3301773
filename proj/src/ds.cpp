#include "coxds/ds.hpp"

#include <numeric>
#include <random>

namespace coxds {

void DSInstance::validate() const {
  formal_type.validate();
  if (orbit.rank() != formal_type.n)
    throw std::invalid_argument("instance: orbit rank differs from formal type rank");
  if (!nonresonant(orbit.eigenvalues()))
    throw std::invalid_argument("instance: orbit eigenvalues are resonant");
}

DSResult ds_decide(const DSInstance& inst) {
  inst.validate();
  const auto& ft = inst.formal_type;
  if (Rational(ft.n) * ft.p0() != -inst.orbit.trace())
    return DSResult::NoTraceMismatch;
  Cmp c = closure_compare(inst.orbit, generator_orbit(ft.r, inst.orbit.char_data()));
  if (c == Cmp::Greater || c == Cmp::Equal) return DSResult::Yes;
  return DSResult::NoOrbitTooSmall;
}

std::vector<OrbitType> ds_enumerate(const CoxeterFormalType& ft, const CharData& q,
                                    int cap) {
  ft.validate();
  Rational target_trace = 0;
  for (const auto& [a, m] : q) target_trace += a * m;
  if (Rational(ft.n) * ft.p0() != -target_trace) return {};
  return enumerate_filter(ft.r, q, cap);
}

namespace {

std::vector<std::pair<int, int>> upper_positions(int n) {
  std::vector<std::pair<int, int>> pos;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pos.emplace_back(i, j);
  return pos;
}

bool completion_hits(const ConstMatrix& cand, const OrbitType& target) {
  try {
    return in_orbit(cand, target);
  } catch (const std::exception&) {
    return false;  // candidate wandered off the split locus
  }
}

}  // namespace

ConstMatrix krupnik_completion(const ConstMatrix& y0, const OrbitType& target,
                               std::uint64_t seed) {
  const int n = y0.rank_size();
  if (completion_hits(y0, target)) return ConstMatrix(n);

  auto pos = upper_positions(n);
  const int npos = static_cast<int>(pos.size());

  // Deterministic pre-pass: sparse 0/1-style completions cover most of the
  // poset at desk scale.
  for (int k1 = 0; k1 < npos; ++k1)
    for (int v1 : {1, -1}) {
      ConstMatrix z(n);
      z.at(pos[k1].first, pos[k1].second) = v1;
      if (completion_hits(y0 + z, target)) return z;
    }
  for (int k1 = 0; k1 < npos; ++k1)
    for (int k2 = k1 + 1; k2 < npos; ++k2)
      for (int v1 : {1, -1})
        for (int v2 : {1, -1}) {
          ConstMatrix z(n);
          z.at(pos[k1].first, pos[k1].second) = v1;
          z.at(pos[k2].first, pos[k2].second) = v2;
          if (completion_hits(y0 + z, target)) return z;
        }

  // Randomized search under an expanding entry/support budget.
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  for (int level = 1; level <= 10; ++level) {
    std::uniform_int_distribution<int> entry(-level, level);
    std::uniform_int_distribution<int> support(1, std::min(npos, level + 2));
    for (int trial = 0; trial < 600 * level; ++trial) {
      ConstMatrix z(n);
      int k = support(rng);
      for (int t = 0; t < k; ++t) {
        auto [i, j] = pos[rng() % npos];
        z.at(i, j) = entry(rng);
      }
      if (completion_hits(y0 + z, target)) return z;
    }
  }
  throw limit_error("krupnik_completion: search budget exhausted");
}

Witness witness_build(const DSInstance& inst, std::uint64_t seed) {
  if (ds_decide(inst) != DSResult::Yes)
    throw std::invalid_argument("witness_build: instance is not a yes-instance");

  const auto& ft = inst.formal_type;
  const int n = ft.n, r = ft.r;
  CharData q = inst.orbit.char_data();

  // Grouped diagonal of eigenvalues, the D_q shape that puts -a N_r + D_q
  // inside O^r_q.
  Diagonal dq;
  for (const auto& [a, m] : q)
    for (int i = 0; i < m; ++i) dq.push_back(a);

  Diagonal d(n);
  for (int i = 0; i < n; ++i) d[i] = -dq[i];

  LaurentMatrix a_mat = ft.matrix();
  GaugeElement h = adjust_residue(a_mat, r, n, d);
  LaurentMatrix alpha = truncate_nonpositive(apply_gauge(h, a_mat, GaugeMode::Adjoint));
  ConstMatrix y0 = residue_form(alpha).scaled(-1);

  ConstMatrix z = krupnik_completion(y0, inst.orbit, seed);
  if (!z.is_zero()) alpha -= z.laurent();
  return {std::move(alpha), y0 + z};
}

Verdict witness_verify(const Witness& w, const DSInstance& inst) {
  const auto& ft = inst.formal_type;
  const int n = ft.n, r = ft.r;
  if (w.alpha.n != n || w.y.rank_size() != n) return {false, "rank-mismatch"};

  // (i) depth and leading term
  auto deg = iwahori_degree(w.alpha);
  if (!deg || *deg < -r) return {false, "depth"};
  GradedComponent lead = graded_project(w.alpha, -r);
  for (const auto& v : lead.delta)
    if (v != ft.leading()) return {false, "leading-term"};

  // (ii) canonical invariants match the formal type: equal normal forms mean
  // alpha and p(omega^{-1}) lie in the same coadjoint I^1-orbit.
  NormalForm want = canonical_invariants(ft.matrix(), r, n);
  NormalForm got;
  try {
    got = canonical_invariants(w.alpha, r, n);
  } catch (const std::exception&) {
    return {false, "invariant-mismatch"};
  }
  if (!(got == want)) return {false, "invariant-mismatch"};

  // (iii) residue pairing
  if (!(residue_form(w.alpha) + w.y).is_zero()) return {false, "residue"};

  // (iv) orbit membership
  try {
    if (!in_orbit(w.y, inst.orbit)) return {false, "orbit"};
  } catch (const std::exception&) {
    return {false, "orbit"};
  }

  // (v) no positive z-powers
  for (const auto& e : w.alpha.entries)
    for (const auto& [k, c] : e.coeffs)
      if (k > 0) return {false, "positive-powers"};

  return {true, ""};
}

}  // namespace coxds
