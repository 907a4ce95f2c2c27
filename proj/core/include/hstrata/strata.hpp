#pragma once

#include <utility>
#include <vector>

#include "hstrata/hilbert.hpp"
#include "hstrata/partition.hpp"

namespace hstrata {

/// Direct admissibility test for a tail at (j, d): h_j = j+1-d, the
/// difference sequence (e_{j+1}, e_{j+2}, ...) is nonnegative and weakly
/// decreasing, and 1 <= tau <= min(d, j+2-d).
bool is_admissible_tail(const HilbertTail& tail, int j, int d);

/// All admissible tails of (j, d): one per pair (c, lambda) with
/// 0 <= c <= j+1-d and lambda a partition of j+1-d-c into at most
/// min(d, j+2-d) - 1 parts, the empty lambda occurring only at c = j+1-d.
/// Every constructed tail is re-checked against is_admissible_tail.
std::vector<HilbertTail> admissible_tails(int j, int d);

/// dim G_H for a full Hilbert function given as values h_0, h_1, ...,
/// constant from the last entry on: c + sum_{i >= rho} (e_i + 1) * e_{i+1}.
int dim_gh_full(const std::vector<int>& h);

/// dim G_H for a stratum tail, with the (1, 2, ..., j) prefix implied.
/// Equals the stratum dimension: the stratum is open dense in G_H.
int dim_GH(const HilbertTail& tail);

/// Codimension of the stratum with relation degrees D (D has d-1 parts,
/// partitioning j-c) inside Grass(R_j, d).
int cod_in_G(const Partition& D, int c, int d);

/// Codimension of the tau stratum: (d - tau)(j + 2 - d - tau).
/// Throws for tau outside [1, min(d, j+2-d)]: the stratum is empty.
int cod_tau(int j, int d, int tau);

/// One Hilbert-function stratum of Grass(R_j, d) with all derived data.
struct StratumDescriptor {
  int j = 0;
  int d = 0;
  int c = 0;
  int tau = 0;
  Partition lambda;
  Partition D;
  HilbertTail tail;
  int dim_stratum = 0;
  int cod_in_G = 0;
  int cod_in_tau = 0;
};

StratumDescriptor make_stratum(int j, int d, const Partition& lambda, int c);

/// The full stratification poset of Grass(R_j, d) under the termwise order
/// on tails.  Strata are listed by c ascending, then lambda lexicographically
/// ascending (a linear extension of the closure order).
struct StrataPoset {
  int j = 0;
  int d = 0;
  std::vector<StratumDescriptor> strata;
  std::vector<std::vector<bool>> leq;           // leq[a][b]: tail_a <= tail_b
  std::vector<std::pair<int, int>> hasse;       // covers, from a stratum into its closure

  std::vector<int> closure_set(int idx) const;  // indices u with tail_u >= tail_idx
  int index_of(const HilbertTail& tail) const;  // -1 if absent

  /// All maximal chains from stratum `lo` up to stratum `hi` in the
  /// termwise order, as index sequences.
  std::vector<std::vector<int>> maximal_chains(int lo, int hi) const;
};

StrataPoset build_poset(int j, int d);

/// One nose (scroll) stratum, determined by a partition A of d into tau
/// parts.  Dimensions live inside the tau stratum: dim = dim Grass_tau - ell(A).
struct NoseStratumDescriptor {
  int j = 0;
  int d = 0;
  int tau = 0;
  int c = 0;
  Partition A;
  std::vector<int> N;              // degrees 0..j
  std::vector<int> ancestor_dims;  // degrees 0..j
  int dim_stratum = 0;
  int cod_in_tau = 0;
};

/// All nose strata of (j, d), listed by A lexicographically ascending.
/// The closure order is termwise on N, equivalently reverse Bruhat on A.
std::vector<NoseStratumDescriptor> nose_strata(int j, int d);

}  // namespace hstrata
