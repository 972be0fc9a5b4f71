#pragma once

#include <vector>

#include "ncfree/freespace.hpp"
#include "ncfree/series.hpp"

namespace ncfree {

// Alternating words (1,2,1,2,...) / (2,1,2,1,...) of the given length.
Word alternating_word(int first_letter, int length);

// A pair (a_1,a_2) is R-diagonal when its joint R-series is supported on
// the even alternating words, with equal coefficients on the two words
// of each length.
bool is_r_diagonal(const NCSeries& pair_r);

// The one-variable shadow f(z) = sum alpha_k z^k, where alpha_k is the
// coefficient of (z_1 z_2)^k.  Cap is floor(pair cap / 2): each alpha_k
// spends a length-2k word.
NCSeries determining_series(const NCSeries& pair_r);

// Inverse construction: alpha_k on both alternating words of length 2k.
NCSeries pair_series_from_determining(const NCSeries& f, int pair_cap);

// All odd alternating moments phi(a1 a2 ... a1), phi(a2 a1 ... a2)
// vanish up to degree_budget.
bool is_diagonally_balanced_moments(const FreeSpace& space, const std::string& a1,
                                    const std::string& a2, int degree_budget);

// The cumulant-side description: coefficients of the odd alternating
// words vanish.
bool is_diagonally_balanced_cumulants(const NCSeries& pair_r);

// f = R(mu_{a1 a2}) * Moeb for a diagonally balanced pair in a tracial
// space.  One-variable output, cap floor(D/2) for the space cap D unless
// a smaller cap is requested.
NCSeries determining_from_product(const FreeSpace& space, const std::string& a1,
                                  const std::string& a2, int out_cap = 0);

// g = f * Rp in one variable (the absorption formula for the nested
// product of free pairs).
NCSeries absorb(const NCSeries& f, const NCSeries& rp);

// The two canonical R-diagonal pairs: determining series Moeb and z.
NCSeries haar_pair_r(int pair_cap);
NCSeries circular_pair_r(int pair_cap);

// Semicircular moments m_1..m_D (odd zero, even Catalan), produced by
// the moment-cumulant machinery from R(z) = z^2.
std::vector<Rat> semicircular_moments(int degree);
// Even quarter-circular moments m_2, m_4, ... (they coincide with the
// semicircular ones).  Odd quarter-circular moments are not rational and
// are refused.
std::vector<Rat> quartercircular_even_moments(int degree);
Rat quartercircular_moment(int n);

// True iff Moeb * Rp = z, i.e. absorbing Rp into a Haar pair yields the
// circular determining series; equivalently the real and imaginary
// parts of the nested product are free.
bool free_re_im_condition(const NCSeries& rp);

} // namespace ncfree
