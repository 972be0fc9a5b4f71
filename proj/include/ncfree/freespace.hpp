#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ncfree/series.hpp"

namespace ncfree {

// M(mu): the moment series of a normalized functional.  The moment of
// the empty word is 1 by convention and stored implicitly.
struct MomentFunctional {
    NCSeries series;
    explicit MomentFunctional(NCSeries s) : series(std::move(s)) {}
};

// R(mu) = M(mu) * Moeb.
NCSeries r_from_m(const MomentFunctional& m);

// The moment-cumulant sum  sum over pi in NC(k) of [coef w; pi](R),
// evaluated literally by enumerating NC(k).  Serves as the independent
// oracle for the boxstar route below.
GaussRat moment_cumulant_sum(const NCSeries& r, const Word& w);

// M(mu) = R(mu) * Zeta, and every coefficient is re-derived through the
// literal moment-cumulant sum; the two routes must agree.
MomentFunctional m_from_r(const NCSeries& r);

struct WordHash {
    std::size_t operator()(const Word& w) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : w) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// A symbolic non-commutative probability space: named variables grouped
// into mutually free families, each family carrying its joint R-series
// truncated at one shared degree cap.  Freeness between families is
// built in: a cumulant across families is zero by construction.
class FreeSpace {
public:
    // A formal product of variables (length >= 1).  Products are not
    // simplified; their moments come out of the cumulants.
    using Product = std::vector<std::string>;

    FreeSpace(std::vector<std::string> variables,
              std::vector<std::vector<std::string>> families,
              std::vector<NCSeries> family_r, int degree_cap, bool tracial);

    int degree_cap() const { return degree_cap_; }
    bool tracial() const { return tracial_; }
    const std::vector<std::string>& variables() const { return variables_; }
    const std::vector<std::vector<std::string>>& families() const { return family_names_; }
    const std::vector<NCSeries>& family_series() const { return family_r_; }

    int var_index(const std::string& name) const; // 1-based
    int family_of_var(int var_index) const;

    // Joint free cumulant of the variables named by a word over global
    // 1-based variable indices; zero when the word touches two families.
    GaussRat cumulant(const Word& global_word) const;

    // Mixed moment: sum over pi in NC(k) of the block cumulant products.
    // Empty word gives 1.
    GaussRat moment(const Word& global_word) const;
    GaussRat moment(const std::vector<std::string>& word_of_names) const;

    Word expand(const std::vector<Product>& elems, const Word& composite_word) const;

    // Joint moment / R-series of the listed elements, indexed by words
    // over the element alphabet.  A composite word consumes one degree
    // per underlying variable occurrence; composite_cap = 0 picks the
    // largest cap whose worst word still fits under the space's cap.
    NCSeries joint_m(const std::vector<Product>& elems, int composite_cap = 0) const;
    NCSeries joint_r(const std::vector<Product>& elems, int composite_cap = 0) const;

    // Single joint cumulant of composite elements, computed by inverting
    // the moment-cumulant recursion; agrees with coefficients of
    // joint_r (unit-tested) but only evaluates the words it needs.
    GaussRat composite_cumulant(const std::vector<Product>& elems, const Word& composite_word) const;

    struct MixedCumulantWitness {
        std::vector<Product> elems;
        Word word;
        GaussRat value;
    };

    // True iff every cumulant mixing at least two of the groups
    // vanishes, over all composite words of total expanded degree
    // <= max_total_degree (default: the space's cap).
    bool check_freeness(const std::vector<std::vector<Product>>& groups,
                        int max_total_degree = 0) const;
    std::optional<MixedCumulantWitness> first_mixed_cumulant(
        const std::vector<std::vector<Product>>& groups, int max_total_degree = 0) const;

    // Cyclic invariance of every family R-series, plus cyclic invariance
    // of mixed moments on all words up to a small sampled length.
    bool check_trace() const;

    // Freeness criterion via phi(c1 x1 ... cm xm) =
    // [coef (1..m)](R(mu_c) * M(mu_x)), exhausted over tuples of the
    // given length with entries from the supplied generators.
    bool freeness_criterion_46(const std::vector<std::string>& c_gens,
                               const std::vector<Product>& x_elems, int tuple_len) const;

private:
    GaussRat moment_nolock(const Word& w) const;

    std::vector<std::string> variables_;
    std::vector<std::vector<std::string>> family_names_;
    std::vector<NCSeries> family_r_;
    int degree_cap_;
    bool tracial_;

    std::unordered_map<std::string, int> index_of_;
    std::vector<int> family_of_;   // per var (0-based storage)
    std::vector<int> local_index_; // 1-based index within the family

    mutable std::mutex memo_mu_;
    mutable std::unordered_map<Word, GaussRat, WordHash> moment_memo_;
};

bool word_is_cyclic_invariant(const NCSeries& s);

} // namespace ncfree
