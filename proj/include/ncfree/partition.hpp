#pragma once

#include <gmpxx.h>

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace ncfree {

// Largest ground set accepted by the combinatorial layer.  Catalan growth
// makes exhaustive work above this size pointless at desk scale.  Can be
// lowered (never raised) through the NCFREE_NC_CAP environment variable.
int ground_set_cap();

class Permutation {
public:
    explicit Permutation(int n); // identity
    explicit Permutation(std::vector<int> images); // images[i-1] = image of i, validated

    int n() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }

    Permutation inverse() const;
    // (a.then(b))(i) == b(a(i))
    Permutation then(const Permutation& b) const;

    bool operator==(const Permutation& o) const { return images_ == o.images_; }

private:
    std::vector<int> images_;
};

// A non-crossing partition of {1..n}.  Canonical form: elements ascend
// within blocks, blocks ascend by minimum.  Construction validates the
// partition property and the non-crossing condition, so a Partition
// value is always a member of NC(n).
class Partition {
public:
    Partition(int n, std::vector<std::vector<int>> blocks);

    int n() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    // 0-based index of the block containing element i.
    int block_index_of(int i) const { return block_of_[i - 1]; }
    bool same_block(int i, int j) const { return block_of_[i - 1] == block_of_[j - 1]; }

    std::vector<int> sorted_block_sizes() const;

    bool operator==(const Partition& o) const { return n_ == o.n_ && blocks_ == o.blocks_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const; // lexicographic on canonical blocks

private:
    int n_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);
std::string to_string(const Partition& p);

Partition singletons_partition(int n);
Partition full_block_partition(int n);

// Is `blocks` (a partition of {1..n}; anything else is a domain error)
// free of crossings?
bool is_noncrossing(const std::vector<std::vector<int>>& blocks, int n);

// Every element of NC(n), each exactly once, in a fixed documented order:
// recursion on the block containing the smallest element, that block's
// remaining members chosen in increasing lexicographic order.
std::vector<Partition> enumerate_nc(int n);
// Same order, without materializing the list.
void for_each_nc(int n, const std::function<void(const Partition&)>& fn);

// pi <= rho in the refinement order (every block of rho is a union of
// blocks of pi).
bool refinement_leq(const Partition& pi, const Partition& rho);

// The permutation whose cycles are the blocks, each block {i1<...<im}
// cycling i1->i2->...->im->i1.
Permutation perm_of(const Partition& pi);
// Cycle structure of p read back as a partition; the caller asserts
// non-crossingness (construction re-validates it).
Partition partition_of_perm(const Permutation& p);

// Relabels elements by i -> i+shift (mod n).
Partition rotate(const Partition& pi, int shift);

// Kreweras complement, computed through the permutation encoding:
// Perm(K(pi)) = Perm(pi)^{-1} compose the full cycle 1->2->...->n->1.
Partition kreweras(const Partition& pi);
Partition kreweras_inverse(const Partition& pi);

// Relative complement K_rho(pi) for pi <= rho, computed blockwise.
Partition relative_kreweras(const Partition& pi, const Partition& rho);
Partition relative_kreweras_inverse(const Partition& pi, const Partition& rho);

// Places pi on {2,4,...,2n} and rho on {1,3,...,2n-1}; true iff the
// combined partition of {1..2n} is non-crossing.  Equals
// refinement_leq(pi, kreweras(rho)).
bool interlace_noncrossing(const Partition& pi, const Partition& rho);

// Parity classes of NC(2n): i - Perm(sigma)(i) odd (alternating) or even
// (preserving) for all i.  Each predicate also evaluates its block-level
// description and insists the two agree.
bool is_parity_alternating(const Partition& sigma);
bool is_parity_preserving(const Partition& sigma);

struct IntervalPair {
    Partition lower;
    Partition upper;
    IntervalPair(Partition lo, Partition hi); // validates lower <= upper
};

// The canonical bijection between {(pi,rho) : pi <= rho in NC(n)} and
// the parity-preserving partitions of NC(2n): pi transported to the even
// positions, K^{-1}(rho) to the odd ones.
Partition interval_to_pprsv(const IntervalPair& pair);
IntervalPair pprsv_to_interval(const Partition& sigma);

// K_rho(pi) computed by the 2n-point route: build sigma as above, take
// the Kreweras complement in NC(2n), halve the even elements.
Partition relative_complement_via_2n(const IntervalPair& pair);

// Some block has odd size.
bool has_odd_block(const Partition& pi);
// Some block is a singleton, or has odd size >= 3 with all consecutive
// element differences odd.  Equivalent to has_odd_block.
bool has_odd_gap_block(const Partition& pi);

mpz_class catalan(int k);
// (3n)! / (n! (2n+1)!)
mpz_class count_intervals_formula(int n);
// |{(pi,rho) : pi <= rho}| by enumeration.
mpz_class count_intervals(int n);

} // namespace ncfree
