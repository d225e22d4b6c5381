#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgmirror/correlator_engine.hpp"

namespace lgm {

// Multiset of standard-basis indices, sorted.
using Key = std::vector<std::size_t>;
using KeyCombination = std::map<Key, Q>;

Key make_key(std::vector<std::size_t> idx);

// Multilinear expansion of a correlator of state elements.
KeyCombination expand(const std::vector<StateElement>& insertions);

struct KVector {
  IVec ell, P, Q;
  QVec b, K;
  bool integral = false;
  IVec a;  // exponents a_i, for the equality clauses
};

// b = E^{-1}(ell + P + Q + 2), K = ell - b + 1.
KVector k_vector(const InvertiblePolynomial& w, const Invariants& inv, const IVec& ell, const IVec& P,
                 const IVec& Qv);
// The K-vector lemmas for chains; on failure `why` names the violated clause.
bool key_corollary_holds(const KVector& kv, std::string* why = nullptr);
bool loop_condition_shape(const IVec& K);

class ReductionError : public std::runtime_error {
 public:
  ReductionError(const std::string& msg, Key key) : std::runtime_error(msg), key_(std::move(key)) {}
  const Key& key() const { return key_; }

 private:
  Key key_;
};

struct SolveReport {
  std::size_t k = 0;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t rank = 0;
  bool consistent = true;
  std::vector<Key> undetermined;
  std::vector<std::string> notes;
  bool unique() const { return consistent && rank == unknowns; }
};

// One coefficient-form WDVV instance: top-splitting terms as a combination of
// (|S|+3)-point keys, the remaining splittings evaluated to a constant.
struct WdvvInstance {
  KeyCombination top;
  Q lower = 0;
};

class Reconstructor {
 public:
  // Solves the four-point sector of an atomic polynomial.
  explicit Reconstructor(const StateSpace& s);

  const StateSpace& space() const { return s_; }
  const SolveReport& four_point_report() const { return report4_; }
  const std::map<Key, Q>& four_point_table() const { return table4_; }

  // k = 3 directly, k = 4 from the solved table, k >= 5 by WDVV rewriting.
  Q value(const Key& key) const;
  Q correlator(const std::vector<StateElement>& insertions) const;
  bool key_nonvanishing(const Key& key) const;
  std::vector<IVec> exponents(const Key& key) const;

  // <a,b,S,c.d> + <a.b,c,d,S> - <a,c,S,b.d> - <a.c,b,d,S> + (S1,S2 splittings).
  WdvvInstance wdvv(const StateElement& a, const StateElement& b, const StateElement& c, const StateElement& d,
                    const std::vector<StateElement>& S) const;
  // Right-hand side of the rewrite <a,b,S,eps.phi> = ...
  KeyCombination wdvv_rewrite(const StateElement& a, const StateElement& b, const StateElement& eps,
                              const StateElement& phi, const std::vector<StateElement>& S, Q* lower) const;

  // Rewrites with a measure-increasing WDVV relation when one exists,
  // otherwise reads the value off the k-point linear solve.
  Q reduce(const Key& key) const;
  // One rewrite step; nullopt when no measure-increasing relation applies.
  std::optional<Q> rewrite_value(const Key& key) const;
  std::size_t solve_fallbacks() const { return fallbacks_; }
  std::size_t max_points() const { return 6; }

  // Every instance over basis a,b,c,d and spectator multisets of size |S|;
  // returns the number of nonzero residuals.
  std::size_t wdvv_residual_failures(std::size_t spectators, std::size_t* checked = nullptr) const;

  // Independent k-point solve from all WDVV instances with |S| = k - 3.
  std::map<Key, Q> solve_points(std::size_t k, SolveReport* report) const;

  // Four-point solve with every non-unit key unknown and no degree filter.
  std::map<Key, std::optional<Q>> solve_four_point_unfiltered(SolveReport* report) const;

 private:
  void solve_four_point();
  std::vector<Key> keys_of_size(std::size_t k, bool nonvanishing_only) const;

  const StateSpace& s_;
  SolveReport report4_;
  std::map<Key, Q> table4_;
  mutable std::map<Key, Q> memo_;
  mutable std::set<Key> active_;
  mutable std::map<std::size_t, std::map<Key, Q>> solved_;
  mutable std::size_t fallbacks_ = 0;
};

struct PrepotentialEntry {
  Key key;
  Q value;     // correlator
  Q scaled;    // value / prod r_b!
};

std::vector<PrepotentialEntry> prepotential(const Reconstructor& r, std::size_t max_k);

}  // namespace lgm
