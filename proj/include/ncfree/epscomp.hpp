#pragma once

#include <string>
#include <vector>

#include "ncfree/freespace.hpp"
#include "ncfree/partition.hpp"
#include "ncfree/rational.hpp"

namespace ncfree {

// A word over {1,2} starting with 1; n counts the occurrences of 1.
class EpsString {
public:
    explicit EpsString(std::vector<int> letters);
    explicit EpsString(const std::string& digits); // e.g. "1212"

    int m() const { return static_cast<int>(letters_.size()); }
    int n() const { return ones_; }
    int letter(int i) const { return letters_[i - 1]; } // 1-based
    const std::vector<int>& letters() const { return letters_; }
    bool balanced() const { return m() == 2 * n(); }
    std::string str() const;

private:
    std::vector<int> letters_;
    int ones_;
};

// All strings of length m with l_1 = 1; the balanced ones have n = m/2.
std::vector<EpsString> all_eps_strings(int m);
std::vector<EpsString> balanced_eps_strings(int m);

// Markers on a circle of 3m ordinal slots: P_i at slot 3(i-1); Q_i one
// third of an arc after P_i when l_i = 1 (red), one third before P_i
// when l_i = 2 (blue).  Red Q's carry second names R_1..R_n clockwise
// from Q_1.
struct CircularLayout {
    int m;
    int n;
    std::vector<int> p_slot;        // size m
    std::vector<int> q_slot;        // size m
    std::vector<int> red_q_indices; // size n; red_q_indices[j-1] = i with R_j = Q_i
    std::vector<std::string> clockwise_markers; // labels in slot order, for listings
};

CircularLayout build_layout(const EpsString& eps);

// The complementation maps of the layout: i ~ j when no chord P_h P_k
// with h,k in one sigma block separates Q_i from Q_j (respectively R_i
// from R_j).  The pairwise relation is checked for transitivity before
// the partition is formed.
Partition cq(const Partition& sigma, const EpsString& eps);
Partition cr(const Partition& sigma, const EpsString& eps);

// Every block's letter tuple alternates cyclically between 1 and 2;
// equivalently each restricted tuple is (1,2,...,1,2) or (2,1,...,2,1).
// Both forms are evaluated and must agree.
bool is_eps_alternating(const Partition& sigma, const EpsString& eps);

// sigma placed on the P slots and tau on the Q slots stays non-crossing.
// Equivalent to tau <= cq(sigma) (the compatibility behind Eq of the
// boxstar expansion over the layout).
bool overlay_noncrossing(const Partition& sigma, const Partition& tau, const EpsString& eps);

// Three-way characterization of eps-alternation for balanced eps: no
// singleton block, no odd cyclically-alternating block, every block of
// cq(sigma) even.  Returns whether the characterization matches the
// direct predicate for this sigma.
bool verify_prop_811(const Partition& sigma, const EpsString& eps);

// Both sides of the two layout moment identities for x_1 = a1 p1,
// x_2 = p2 a2, y_1 = a1 p1 p2, y_2 = a2.
struct LayoutMomentCheck {
    GaussRat lhs_x, rhs_x; // phi(x_{l_1} ... x_{l_m}) vs the C_Q sum
    GaussRat lhs_y, rhs_y; // phi(y_{l_1} ... y_{l_m}) vs the C_R sum
    bool ok() const { return lhs_x == rhs_x && lhs_y == rhs_y; }
};

LayoutMomentCheck verify_eq72_73(const EpsString& eps, const FreeSpace& space,
                                 const std::string& a1, const std::string& a2,
                                 const std::string& p1, const std::string& p2);

} // namespace ncfree
