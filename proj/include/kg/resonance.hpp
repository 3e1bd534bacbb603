#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace kg {

/// Raised when an exhaustive search would exceed its configured size.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Frequency relations among omega_1..omega_N. Indices are stored so that
/// the relation reads lhs = rhs:
///   one_to_one  omega_k = omega_k'                      (k, k')
///   two_to_one  omega_k = 2 omega_k'                    (k, k')
///   type1       omega_k = 3 omega_k'                    (k, k')
///   type2       omega_k = omega_k' + omega_k'' + omega_k'''
///   type3       omega_k + omega_k' = 2 omega_k''        (k, k', k'')
///   type4       omega_k + omega_k' = omega_k'' + omega_k'''
enum class RelationKind { one_to_one, two_to_one, type1, type2, type3, type4 };

std::string to_string(RelationKind k);
int relation_order(RelationKind k);

struct ResonanceTuple {
  RelationKind kind = RelationKind::type4;
  std::vector<int> indices;
  double residual = 0.0;       // |lhs - rhs| at working precision
  double residual_check = 0.0; // the same at doubled precision
  bool trivial = false;
};

struct ResonanceSearch {
  int n_sites = 0;
  double a = 1.0;
  double tol = 1e-20;
  int max_order = 4;
  /// Largest N searched unless allow_large is set.
  int budget = 64;
  bool allow_large = false;
};

/// Partner class of a mode under omega_j = omega_{N-j}: min(j, N - j) for
/// j < N, and N itself for the uniform mode.
int pairing_class(int j, int n_sites);

/// True when the two sides of omega_k + omega_k' = omega_k'' + omega_k'''
/// agree as multisets of pairing classes, i.e. the tuple comes from
/// (k, k', N-k, N-k') by permutations and the map j -> N - j.
bool is_trivial_tuple(int k, int k1, int k2, int k3, int n_sites);

/// Exhaustive search of all relations up to max_order with residual < tol,
/// in 50-digit arithmetic and rechecked at 100 digits. Results are sorted
/// by kind, then indices. Relations whose two sides are the same index
/// multiset are identities and are not reported.
std::vector<ResonanceTuple> find_resonances(const ResonanceSearch& cfg);

struct AssertionReport {
  ResonanceSearch search;
  /// Order-4 relations (types 1-4).
  std::vector<ResonanceTuple> tuples;
  int nontrivial = 0;
  /// Type-4 tuples with k + k' + k'' + k''' = 0 mod N.
  int sum_filter_hits = 0;
  int type4_count = 0;
  bool pass = false;
  double max_recheck_delta = 0.0;
  std::string note;
};

AssertionReport verify_assertion(const ResonanceSearch& cfg);

}  // namespace kg
