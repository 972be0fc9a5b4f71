#pragma once

#include <cstdint>
#include <random>

#include "ncfree/series.hpp"

namespace ncfree {

// All suite randomness flows through one engine type so that a recorded
// seed reproduces a run exactly.
using Rng = std::mt19937_64;

// Uniform in [lo, hi]; raw engine output reduced by hand (the standard
// distributions are not byte-stable across library implementations).
int rand_int(Rng& rng, int lo, int hi);

// Small exact rational: numerator in [-3,3], denominator in {1,2,3}.
Rat random_small_rational(Rng& rng);
GaussRat random_small_gauss(Rng& rng, bool allow_imag = false);

// Sparse random series with about `terms` nonzero coefficients.
NCSeries random_series(Rng& rng, int nvars, int degree_cap, int terms);

// One coefficient drawn per necklace (cyclic class of words) and copied
// around the class, so the result is cyclically invariant.  Cumulants
// beyond support_cap (0 = degree_cap) stay zero, which keeps deep
// moment recursions cheap without losing exactness.
NCSeries random_tracial_series(Rng& rng, int nvars, int degree_cap, int support_cap = 0);

// Random alpha_1..alpha_{cap/2} placed on the alternating words.
NCSeries random_r_diagonal_pair_r(Rng& rng, int pair_cap);

// Tracial two-variable series with every odd alternating necklace
// zeroed.
NCSeries random_diagonally_balanced_pair_r(Rng& rng, int pair_cap, int support_cap = 0);

} // namespace ncfree
