#pragma once

#include <map>
#include <vector>

#include "ncfree/partition.hpp"
#include "ncfree/rational.hpp"

namespace ncfree {

// Index tuple (i_1,...,i_k) of a monomial z_{i_1}...z_{i_k}; letters are
// 1-based variable indices.
using Word = std::vector<int>;

struct ShortlexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// Truncated formal power series in nvars non-commuting variables over
// Gaussian rationals.  No constant term; no word longer than the degree
// cap; an absent word is coefficient zero.  The cap is part of the value:
// combining series with different caps is a domain error, never a silent
// truncation.
class NCSeries {
public:
    using TermMap = std::map<Word, GaussRat, ShortlexLess>;

    NCSeries(int nvars, int degree_cap);

    int nvars() const { return nvars_; }
    int degree_cap() const { return cap_; }

    const GaussRat& coef(const Word& w) const;
    void set_coef(const Word& w, GaussRat value); // erases on zero
    void add_coef(const Word& w, const GaussRat& value);

    // Coefficient of the subword of w at positions B (1-based, ascending
    // order of position).  B must be a non-empty subset of {1..len(w)}.
    GaussRat coef_restricted(const Word& w, const std::vector<int>& positions) const;

    // Product over the blocks of pi of coef_restricted; pi partitions
    // {1..len(w)}.
    GaussRat coef_partition(const Word& w, const Partition& pi) const;

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const NCSeries& o) const {
        return nvars_ == o.nvars_ && cap_ == o.cap_ && terms_ == o.terms_;
    }
    bool operator!=(const NCSeries& o) const { return !(*this == o); }

private:
    void check_word(const Word& w, bool enforce_cap) const;

    int nvars_;
    int cap_;
    TermMap terms_;
};

// The combinatorial convolution: the coefficient of a word w of length k
// in f*g is  sum over pi in NC(k) of [coef w; pi](f) [coef w; K(pi)](g).
// Associative; commutative exactly in one variable.
NCSeries boxstar(const NCSeries& f, const NCSeries& g);

// All coefficients 1.
NCSeries zeta_series(int nvars, int degree_cap);
// Coefficient of any word of length k is (-1)^{k+1} (2k-2)!/((k-1)! k!),
// the signed Catalan numbers 1, -1, 2, -5, 14, ...
NCSeries moeb_series(int nvars, int degree_cap);
// z_1 + ... + z_n, the unit for boxstar.
NCSeries sum_series(int nvars, int degree_cap);

Rat moeb_coefficient(int k);

// Substitutes z_i -> sum_j C[i][j] z_j and expands.  C is nvars x nvars.
NCSeries linear_substitute(const NCSeries& f, const std::vector<std::vector<GaussRat>>& C);

// Explicit truncation to a smaller cap (words above it are dropped).
NCSeries truncated(const NCSeries& f, int new_cap);

} // namespace ncfree
