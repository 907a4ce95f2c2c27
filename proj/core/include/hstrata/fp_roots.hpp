#pragma once

#include <utility>
#include <vector>

#include "hstrata/binary_form.hpp"
#include "hstrata/rng.hpp"

namespace hstrata {

/// Linear factorization data of a binary form over F_p.  The form splits as
///   x^x_power * prod (y - r x)^mult * (a cofactor with no linear factor).
struct LinearFactors {
  int x_power = 0;
  std::vector<std::pair<GF::Elem, int>> roots;  // (r, multiplicity), r ascending
  int unsplit_degree = 0;
};

/// Extract all linear factors of f over F_p (equal-degree splitting with
/// randomization from rng; deterministic given the stream).
LinearFactors linear_factors(const BinaryForm<GF>& f, Rng& rng);

/// Rebuild x^x_power * prod (y - r x) over the listed factors, taking the
/// first `degree` linear factors in the order x-powers first, then roots
/// ascending with multiplicity.  Returns nullopt if fewer than `degree`
/// linear factors are available.  `rotate` cycles which factors are taken,
/// so retries can try a different divisor.
std::optional<BinaryForm<GF>> divisor_from_factors(const GF& k, const LinearFactors& lf,
                                                   int degree, int rotate = 0);

}  // namespace hstrata
