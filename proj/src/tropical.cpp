#include "qpres/tropical.hpp"

#include "qpres/candecomp.hpp"
#include "qpres/errors.hpp"

namespace qpres {

namespace {

int dot(const std::vector<int>& a, const std::vector<int>& b) {
  int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<int> scaled(const std::vector<int>& v, int n) {
  std::vector<int> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = n * v[i];
  return out;
}

std::vector<int> negated(const std::vector<int>& v) { return scaled(v, -1); }

}  // namespace

int trop_eval(const DimSet& subdims, const std::vector<int>& delta) {
  int best = 0;  // the zero submodule scores 0
  for (const auto& v : subdims) best = std::max(best, dot(v, delta));
  return best;
}

int trop_eval_dual(const DimSet& subdims, const std::vector<int>& total,
                   const std::vector<int>& delta) {
  int best = 0;  // the zero quotient scores 0
  for (const auto& v : subdims) {
    int s = 0;
    for (size_t i = 0; i < v.size(); ++i) s += (total[i] - v[i]) * delta[i];
    best = std::max(best, s);
  }
  return best;
}

int trop_f(const Representation& m, const std::vector<int>& delta) {
  return trop_eval(submodule_dimvectors(m), delta);
}

int trop_f_dual(const Representation& m, const std::vector<int>& delta) {
  return trop_eval_dual(submodule_dimvectors(m), m.dims, delta);
}

StabilizationReport stabilization_n(AlgebraPtr alg, const Representation& m_small,
                                    const std::vector<int>& delta, int n_max,
                                    int samples, uint64_t seed,
                                    const std::string& tag_hint) {
  const Representation big =
      m_small.alg->spec == alg->spec ? m_small : lift_representation(m_small, alg);
  return stabilization_n(alg, big, submodule_dimvectors(m_small), m_small.dims, delta,
                         n_max, samples, seed, tag_hint);
}

StabilizationReport stabilization_n(AlgebraPtr alg, const Representation& m_big,
                                    const DimSet& subdims,
                                    const std::vector<int>& dims_small,
                                    const std::vector<int>& delta, int n_max,
                                    int samples, uint64_t seed,
                                    const std::string& tag_hint) {
  StabilizationReport report;
  report.wildness_note =
      tag_hint.empty()
          ? to_string(weight_tag(alg, delta, samples, derive_seed(seed, "tag")))
          : tag_hint;

  auto equal_at = [&](int n) {
    std::vector<int> nd = scaled(delta, n);
    int tf = trop_eval(subdims, nd);
    int tfd = trop_eval_dual(subdims, dims_small, negated(nd));
    HomEPair he = hom_e_generic(alg, nd, m_big, samples, derive_seed(seed, "stab", n));
    return tf == he.hom && tfd == he.e;
  };

  for (int n = 1; n <= n_max; ++n)
    if (equal_at(n)) {
      report.n_found = n;
      break;
    }
  if (report.n_found == 0) return report;

  // re-verify the found level together with every multiple inside the range
  for (int k = 1; k * report.n_found <= n_max; ++k) {
    int n = k * report.n_found;
    report.checked_multiples.emplace_back(n, equal_at(n));
  }
  return report;
}

}  // namespace qpres
