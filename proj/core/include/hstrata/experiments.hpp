#pragma once

#include <cstdint>
#include <vector>

#include "hstrata/form_space.hpp"
#include "hstrata/hilbert.hpp"
#include "hstrata/invariants.hpp"
#include "hstrata/partition.hpp"

namespace hstrata {

/// A reproducible random point of the relation-degree-D stratum: a random
/// d x (d-1) matrix with column degrees D over F_p, V = g * span of its
/// signed minors with g a split random factor of degree c.  Degenerate draws
/// (rank drop, wrong tail) are resampled with a derived seed.
struct HBSample {
  std::uint64_t seed = 0;
  int j = 0;
  int d = 0;
  Partition target_D;
  int target_c = 0;
  std::vector<std::vector<BinaryForm<GF>>> matrix;  // d rows, d-1 columns
  BinaryForm<GF> g;
  FormSpace<GF> V;
  int resamples = 0;
};

/// Throws std::runtime_error after 25 resamples: the requested stratum is
/// empty or the prime too small.
HBSample sample_hilbert_burch(const GF& k, int j, int d, const Partition& D, int c,
                              std::uint64_t seed);

/// Rank over F_p of the Jacobian of the signed-minors map (matrix
/// coefficients -> d*(j+1) minor coefficients) at a random sample point,
/// computed with dual-number arithmetic.  With probability 1 - O(1/p) this
/// equals the dimension d(j+1) - ell(D) of the coefficient family.
int jacobian_rank_dim(const GF& k, int j, int d, const Partition& D, std::uint64_t seed);

/// Tails along the pencil spanned by rows(V0) + t * rows(V1).
struct PencilReport {
  std::vector<GF::Elem> t_samples;
  HilbertTail h_generic;  // termwise minimum over the sampled t
  HilbertTail h_special;  // tail at t = 0
  bool semicontinuous = false;  // h_special >= h_generic termwise
};

PencilReport pencil_limit(const FormSpace<GF>& v0, const FormSpace<GF>& v1,
                          std::uint64_t seed, int n_samples = 5);

enum class CertifyOutcome { success, overflow, retries_exhausted };

/// Outcome of the greedy graded-ideal construction above V_special.
/// On success the assembled ideal has Hilbert function (1, 2, ..., j, H) with
/// degree-j piece exactly V_special.  `overflow` before any random choice is
/// a genuine dimension-count certificate of non-membership; overflow after
/// random additions only ends one attempt.
struct ClosureCertificate {
  CertifyOutcome outcome = CertifyOutcome::retries_exhausted;
  int overflow_degree = -1;           // first overflowing degree of the last attempt
  std::vector<int> added_per_degree;  // generators added at degrees j+1, j+2, ... (last attempt)
  int attempts = 0;
};

ClosureCertificate certify_closure_membership(const FormSpace<GF>& v_special,
                                              const HilbertTail& h_target,
                                              std::uint64_t seed, int retries = 10);

/// Dimension table of the families of d = 3 coefficient tuples with relation
/// degrees (n - mu, mu): the codimension route N - ell(D) against the closed
/// form (3n+3 at mu = floor(n/2), else 2n + 2mu + 4).
struct MuFamilyRow {
  int n = 0;
  int mu = 0;
  int dim_from_codim = 0;  // 3(n+1) - ell(n - mu, mu)
  int dim_closed_form = 0;
};

std::vector<MuFamilyRow> mu_family_dims(int n);

/// { f in R_{j - deg g} : g * f in V }; the quotient space V : g.
FormSpace<GF> colon_by_form(const FormSpace<GF>& v, const BinaryForm<GF>& g);

}  // namespace hstrata
