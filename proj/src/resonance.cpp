#include <algorithm>
#include <cstdio>
#include <tuple>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "kg/lattice.hpp"
#include "kg/resonance.hpp"

namespace kg {

namespace {

using Float50 = boost::multiprecision::cpp_bin_float_50;
using Float100 = boost::multiprecision::cpp_bin_float_100;

template <class F>
std::vector<F> spectrum(int n, double a) {
  const F pi = boost::math::constants::pi<F>();
  std::vector<F> w(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) {
    const int m = std::min(k % n, n - k % n);
    const F s = sin(pi * m / n);
    w[k] = sqrt(F(a) + 4 * s * s);
  }
  return w;
}

template <class F>
F signed_residual(RelationKind kind, const std::vector<int>& i, const std::vector<F>& w) {
  switch (kind) {
    case RelationKind::one_to_one: return w[i[0]] - w[i[1]];
    case RelationKind::two_to_one: return w[i[0]] - 2 * w[i[1]];
    case RelationKind::type1: return w[i[0]] - 3 * w[i[1]];
    case RelationKind::type2: return w[i[0]] - w[i[1]] - w[i[2]] - w[i[3]];
    case RelationKind::type3: return w[i[0]] + w[i[1]] - 2 * w[i[2]];
    case RelationKind::type4: return w[i[0]] + w[i[1]] - w[i[2]] - w[i[3]];
  }
  return F(0);
}

struct Sum {
  Float50 value;
  std::vector<int> idx;
};

void sort_sums(std::vector<Sum>& s) {
  std::sort(s.begin(), s.end(), [](const Sum& x, const Sum& y) { return x.value < y.value; });
}

}  // namespace

std::string to_string(RelationKind k) {
  switch (k) {
    case RelationKind::one_to_one: return "one_to_one";
    case RelationKind::two_to_one: return "two_to_one";
    case RelationKind::type1: return "type1";
    case RelationKind::type2: return "type2";
    case RelationKind::type3: return "type3";
    case RelationKind::type4: return "type4";
  }
  return "?";
}

int relation_order(RelationKind k) {
  switch (k) {
    case RelationKind::one_to_one: return 2;
    case RelationKind::two_to_one: return 3;
    default: return 4;
  }
}

int pairing_class(int j, int n_sites) {
  if (j < 1 || j > n_sites) throw InvalidInput("mode index out of range");
  return j == n_sites ? n_sites : std::min(j, n_sites - j);
}

bool is_trivial_tuple(int k, int k1, int k2, int k3, int n_sites) {
  int lhs[2] = {pairing_class(k, n_sites), pairing_class(k1, n_sites)};
  int rhs[2] = {pairing_class(k2, n_sites), pairing_class(k3, n_sites)};
  std::sort(lhs, lhs + 2);
  std::sort(rhs, rhs + 2);
  return lhs[0] == rhs[0] && lhs[1] == rhs[1];
}

std::vector<ResonanceTuple> find_resonances(const ResonanceSearch& cfg) {
  const int n = cfg.n_sites;
  if (n < 2) throw InvalidInput("resonance search needs N >= 2");
  if (!(cfg.a > 0.0)) throw InvalidInput("a must be positive");
  if (!(cfg.tol > 0.0)) throw InvalidInput("tolerance must be positive");
  if (cfg.max_order < 2 || cfg.max_order > 4) throw InvalidInput("max_order must be 2, 3 or 4");
  if (n > cfg.budget && !cfg.allow_large)
    throw BudgetExceeded("N = " + std::to_string(n) + " exceeds the exhaustive search budget N <= " +
                         std::to_string(cfg.budget));

  const auto w = spectrum<Float50>(n, cfg.a);
  const Float50 tol(cfg.tol);
  std::vector<ResonanceTuple> out;
  auto add = [&](RelationKind kind, std::vector<int> idx, bool trivial) {
    ResonanceTuple t;
    t.kind = kind;
    t.indices = std::move(idx);
    t.trivial = trivial;
    out.push_back(std::move(t));
  };
  auto close = [&](const Float50& x) { return abs(x) < tol; };

  for (int k = 1; k <= n; ++k) {
    for (int l = 1; l <= n; ++l) {
      if (l > k && close(w[k] - w[l]))
        add(RelationKind::one_to_one, {k, l}, pairing_class(k, n) == pairing_class(l, n));
      if (cfg.max_order >= 3 && close(w[k] - 2 * w[l])) add(RelationKind::two_to_one, {k, l}, false);
      if (cfg.max_order >= 4 && close(w[k] - 3 * w[l])) add(RelationKind::type1, {k, l}, false);
    }
  }

  if (cfg.max_order >= 4) {
    // type2: omega_k against all sorted triple sums.
    std::vector<Sum> triples;
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        for (int l = j; l <= n; ++l) triples.push_back({w[i] + w[j] + w[l], {i, j, l}});
    sort_sums(triples);
    for (int k = 1; k <= n; ++k) {
      auto it = std::lower_bound(triples.begin(), triples.end(), w[k] - tol,
                                 [](const Sum& s, const Float50& v) { return s.value < v; });
      for (; it != triples.end() && it->value < w[k] + tol; ++it)
        if (close(w[k] - it->value)) add(RelationKind::type2, {k, it->idx[0], it->idx[1], it->idx[2]}, false);
    }

    // type3/type4: equal pair sums in a sliding window.
    std::vector<Sum> pairs;
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) pairs.push_back({w[i] + w[j], {i, j}});
    sort_sums(pairs);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (std::size_t j = i + 1; j < pairs.size() && pairs[j].value - pairs[i].value < tol; ++j) {
        std::vector<int> lhs = pairs[i].idx, rhs = pairs[j].idx;
        if (rhs < lhs) std::swap(lhs, rhs);
        const bool lhs_double = lhs[0] == lhs[1], rhs_double = rhs[0] == rhs[1];
        if (lhs_double && !rhs_double) std::swap(lhs, rhs);
        const bool trivial = is_trivial_tuple(lhs[0], lhs[1], rhs[0], rhs[1], n);
        if (lhs_double || rhs_double)
          add(RelationKind::type3, {lhs[0], lhs[1], rhs[0]}, trivial);
        else
          add(RelationKind::type4, {lhs[0], lhs[1], rhs[0], rhs[1]}, trivial);
      }
    }
  }

  const auto w100 = spectrum<Float100>(n, cfg.a);
  for (auto& t : out) {
    t.residual = static_cast<double>(abs(signed_residual(t.kind, t.indices, w)));
    t.residual_check = static_cast<double>(abs(signed_residual(t.kind, t.indices, w100)));
  }
  std::sort(out.begin(), out.end(), [](const ResonanceTuple& x, const ResonanceTuple& y) {
    return std::tie(x.kind, x.indices) < std::tie(y.kind, y.indices);
  });
  return out;
}

AssertionReport verify_assertion(const ResonanceSearch& cfg) {
  ResonanceSearch c = cfg;
  c.max_order = 4;
  AssertionReport r;
  r.search = c;
  for (auto& t : find_resonances(c)) {
    if (relation_order(t.kind) != 4) continue;
    r.max_recheck_delta = std::max(r.max_recheck_delta, std::abs(t.residual - t.residual_check));
    if (!t.trivial) ++r.nontrivial;
    if (t.kind == RelationKind::type4) {
      ++r.type4_count;
      const int s = t.indices[0] + t.indices[1] + t.indices[2] + t.indices[3];
      if (s % c.n_sites == 0) ++r.sum_filter_hits;
    }
    r.tuples.push_back(std::move(t));
  }
  r.pass = r.nontrivial == 0;
  char tol[32];
  std::snprintf(tol, sizeof tol, "%g", c.tol);
  r.note = std::string("finite-precision evidence: 50-digit search rechecked at 100 digits with tolerance ") +
           tol + "; not a proof";
  return r;
}

}  // namespace kg
