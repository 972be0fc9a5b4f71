#include "ncfree/epscomp.hpp"

#include <algorithm>

#include "ncfree/errors.hpp"

namespace ncfree {

EpsString::EpsString(std::vector<int> letters) : letters_(std::move(letters)), ones_(0) {
    if (letters_.empty()) throw domain_error("EpsString: empty string");
    if (letters_.front() != 1) throw domain_error("EpsString: must start with 1");
    for (int l : letters_) {
        if (l != 1 && l != 2) throw domain_error("EpsString: letters are 1 or 2");
        if (l == 1) ++ones_;
    }
}

static std::vector<int> parse_digits(const std::string& digits) {
    std::vector<int> out;
    out.reserve(digits.size());
    for (char c : digits) {
        if (c != '1' && c != '2') throw domain_error("EpsString: expected digits 1/2, got '" +
                                                     std::string(1, c) + "'");
        out.push_back(c - '0');
    }
    return out;
}

EpsString::EpsString(const std::string& digits) : EpsString(parse_digits(digits)) {}

std::string EpsString::str() const {
    std::string s;
    for (int l : letters_) s += static_cast<char>('0' + l);
    return s;
}

std::vector<EpsString> all_eps_strings(int m) {
    if (m < 1) throw domain_error("all_eps_strings: m >= 1");
    std::vector<EpsString> out;
    for (int mask = 0; mask < (1 << (m - 1)); ++mask) {
        std::vector<int> letters(m, 1);
        for (int i = 1; i < m; ++i)
            if (mask & (1 << (i - 1))) letters[i] = 2;
        out.emplace_back(std::move(letters));
    }
    return out;
}

std::vector<EpsString> balanced_eps_strings(int m) {
    std::vector<EpsString> out;
    for (auto& e : all_eps_strings(m))
        if (e.balanced()) out.push_back(std::move(e));
    return out;
}

CircularLayout build_layout(const EpsString& eps) {
    const int m = eps.m();
    const int slots = 3 * m;
    CircularLayout lay;
    lay.m = m;
    lay.n = eps.n();
    lay.p_slot.resize(m);
    lay.q_slot.resize(m);
    for (int i = 1; i <= m; ++i) {
        lay.p_slot[i - 1] = 3 * (i - 1);
        lay.q_slot[i - 1] =
            eps.letter(i) == 1 ? 3 * (i - 1) + 1 : (3 * (i - 1) - 1 + slots) % slots;
    }
    for (int i = 1; i <= m; ++i)
        if (eps.letter(i) == 1) lay.red_q_indices.push_back(i);

    std::vector<std::pair<int, std::string>> order;
    for (int i = 1; i <= m; ++i) {
        order.emplace_back(lay.p_slot[i - 1], "P" + std::to_string(i));
        std::string q = "Q" + std::to_string(i);
        if (eps.letter(i) == 1) {
            const int r = static_cast<int>(std::lower_bound(lay.red_q_indices.begin(),
                                                            lay.red_q_indices.end(), i) -
                                           lay.red_q_indices.begin()) +
                          1;
            q += "=R" + std::to_string(r);
        }
        order.emplace_back(lay.q_slot[i - 1], q);
    }
    std::sort(order.begin(), order.end());
    for (auto& [slot, label] : order) lay.clockwise_markers.push_back(label);
    return lay;
}

namespace {

// Strict cyclic separation on the slot circle: exactly one of c,d lies in
// the open arc (a -> b).  All four slots are distinct by construction.
bool chord_separates(int a, int b, int c, int d, int slots) {
    auto inside = [&](int x) {
        const int span = ((b - a) % slots + slots) % slots;
        const int off = ((x - a) % slots + slots) % slots;
        return off > 0 && off < span;
    };
    return inside(c) != inside(d);
}

// Connected components of the marker set under "no sigma chord between
// us", with the claimed transitivity asserted.
Partition components(const Partition& sigma, const CircularLayout& lay,
                     const std::vector<int>& marker_slots, const char* who) {
    const int count = static_cast<int>(marker_slots.size());
    const int slots = 3 * lay.m;

    std::vector<std::pair<int, int>> chords; // P slot pairs of same-block elements
    for (const auto& block : sigma.blocks())
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j)
                chords.emplace_back(lay.p_slot[block[i] - 1], lay.p_slot[block[j] - 1]);

    std::vector<std::vector<char>> related(count, std::vector<char>(count, 1));
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j) {
            for (const auto& [a, b] : chords)
                if (chord_separates(a, b, marker_slots[i], marker_slots[j], slots)) {
                    related[i][j] = related[j][i] = 0;
                    break;
                }
        }
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j)
            for (int k = 0; k < count; ++k)
                if (related[i][j] && related[j][k] && !related[i][k])
                    throw std::logic_error(std::string(who) +
                                           ": separation relation is not transitive on " +
                                           to_string(sigma));

    std::vector<std::vector<int>> blocks;
    std::vector<char> used(count, 0);
    for (int i = 0; i < count; ++i) {
        if (used[i]) continue;
        std::vector<int> b;
        for (int j = i; j < count; ++j)
            if (related[i][j]) {
                used[j] = 1;
                b.push_back(j + 1);
            }
        blocks.push_back(std::move(b));
    }
    return Partition(count, std::move(blocks));
}

} // namespace

Partition cq(const Partition& sigma, const EpsString& eps) {
    if (sigma.n() != eps.m()) throw domain_error("cq: sigma must partition {1..m}");
    const CircularLayout lay = build_layout(eps);
    return components(sigma, lay, lay.q_slot, "cq");
}

Partition cr(const Partition& sigma, const EpsString& eps) {
    if (sigma.n() != eps.m()) throw domain_error("cr: sigma must partition {1..m}");
    const CircularLayout lay = build_layout(eps);
    std::vector<int> red_slots;
    red_slots.reserve(lay.red_q_indices.size());
    for (int i : lay.red_q_indices) red_slots.push_back(lay.q_slot[i - 1]);
    return components(sigma, lay, red_slots, "cr");
}

bool is_eps_alternating(const Partition& sigma, const EpsString& eps) {
    if (sigma.n() != eps.m()) throw domain_error("is_eps_alternating: sigma must partition {1..m}");
    bool cyclic_form = true;
    for (const auto& block : sigma.blocks()) {
        const std::size_t k = block.size();
        for (std::size_t t = 0; t < k && cyclic_form; ++t)
            if (eps.letter(block[t]) == eps.letter(block[(t + 1) % k])) cyclic_form = false;
        if (!cyclic_form) break;
    }
    bool tuple_form = true;
    for (const auto& block : sigma.blocks()) {
        if (block.size() % 2 != 0) {
            tuple_form = false;
            break;
        }
        const int first = eps.letter(block.front());
        for (std::size_t t = 0; t < block.size(); ++t)
            if (eps.letter(block[t]) != (t % 2 == 0 ? first : 3 - first)) {
                tuple_form = false;
                break;
            }
        if (!tuple_form) break;
    }
    if (cyclic_form != tuple_form)
        throw std::logic_error("eps-alternating descriptions disagree on " + to_string(sigma));
    return cyclic_form;
}

bool overlay_noncrossing(const Partition& sigma, const Partition& tau, const EpsString& eps) {
    if (sigma.n() != eps.m() || tau.n() != eps.m())
        throw domain_error("overlay_noncrossing: partitions must live on {1..m}");
    const CircularLayout lay = build_layout(eps);
    // Rank the 2m markers by slot; relabel both partitions into 1..2m.
    std::vector<int> all_slots;
    for (int s : lay.p_slot) all_slots.push_back(s);
    for (int s : lay.q_slot) all_slots.push_back(s);
    std::vector<int> sorted = all_slots;
    std::sort(sorted.begin(), sorted.end());
    auto rank = [&](int slot) {
        return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), slot) -
                                sorted.begin()) +
               1;
    };
    std::vector<std::vector<int>> blocks;
    for (const auto& b : sigma.blocks()) {
        std::vector<int> nb;
        for (int e : b) nb.push_back(rank(lay.p_slot[e - 1]));
        blocks.push_back(std::move(nb));
    }
    for (const auto& b : tau.blocks()) {
        std::vector<int> nb;
        for (int e : b) nb.push_back(rank(lay.q_slot[e - 1]));
        blocks.push_back(std::move(nb));
    }
    return is_noncrossing(blocks, 2 * eps.m());
}

bool verify_prop_811(const Partition& sigma, const EpsString& eps) {
    if (!eps.balanced()) throw domain_error("verify_prop_811: eps must be balanced");
    if (sigma.n() != eps.m()) throw domain_error("verify_prop_811: sigma must partition {1..m}");

    const bool direct = is_eps_alternating(sigma, eps);

    bool no_singleton = true;
    for (const auto& b : sigma.blocks())
        if (b.size() == 1) no_singleton = false;

    // No block of odd size whose letter tuple is a cyclic permutation of
    // an odd alternating pattern.
    bool no_odd_alternating = true;
    for (const auto& b : sigma.blocks()) {
        const std::size_t k = b.size();
        if (k % 2 == 0) continue;
        std::vector<int> tuple;
        tuple.reserve(k);
        for (int e : b) tuple.push_back(eps.letter(e));
        for (std::size_t shift = 0; shift < k && no_odd_alternating; ++shift) {
            bool alt = true;
            for (std::size_t t = 0; t < k; ++t) {
                const int expected = (t % 2 == 0) ? tuple[shift] : 3 - tuple[shift];
                if (tuple[(shift + t) % k] != expected) {
                    alt = false;
                    break;
                }
            }
            if (alt) no_odd_alternating = false;
        }
        if (!no_odd_alternating) break;
    }

    bool cq_even = true;
    for (const auto& b : cq(sigma, eps).blocks())
        if (b.size() % 2 != 0) cq_even = false;

    const bool characterization = no_singleton && no_odd_alternating && cq_even;
    return direct == characterization;
}

LayoutMomentCheck verify_eq72_73(const EpsString& eps, const FreeSpace& space,
                                 const std::string& a1, const std::string& a2,
                                 const std::string& p1, const std::string& p2) {
    if (!space.tracial()) throw domain_error("verify_eq72_73 requires a tracial space");
    const int m = eps.m();
    const std::vector<FreeSpace::Product> x{{a1, p1}, {p2, a2}};
    const std::vector<FreeSpace::Product> y{{a1, p1, p2}, {a2}};

    LayoutMomentCheck out;
    Word cw;
    cw.reserve(m);
    for (int i = 1; i <= m; ++i) cw.push_back(eps.letter(i));
    out.lhs_x = space.moment(space.expand(x, cw));
    out.lhs_y = space.moment(space.expand(y, cw));

    const int ia1 = space.var_index(a1), ia2 = space.var_index(a2);
    const int ip1 = space.var_index(p1), ip2 = space.var_index(p2);

    // Coefficient helpers over the eps word.
    auto a_cumulant = [&](const std::vector<int>& positions) {
        Word w;
        for (int pos : positions) w.push_back(eps.letter(pos) == 1 ? ia1 : ia2);
        return space.cumulant(w);
    };
    auto p_moment = [&](const std::vector<int>& positions) {
        Word w;
        for (int pos : positions) w.push_back(eps.letter(pos) == 1 ? ip1 : ip2);
        return space.moment(w);
    };
    auto p1p2_power_moment = [&](int k) {
        Word w;
        for (int t = 0; t < k; ++t) {
            w.push_back(ip1);
            w.push_back(ip2);
        }
        return space.moment(w);
    };

    for_each_nc(m, [&](const Partition& sigma) {
        GaussRat weight(1);
        for (const auto& b : sigma.blocks()) {
            weight *= a_cumulant(b);
            if (weight.is_zero()) break;
        }
        if (weight.is_zero()) return;

        GaussRat qprod(1);
        for (const auto& b : cq(sigma, eps).blocks()) {
            qprod *= p_moment(b);
            if (qprod.is_zero()) break;
        }
        out.rhs_x += weight * qprod;

        GaussRat rprod(1);
        for (const auto& b : cr(sigma, eps).blocks()) {
            rprod *= p1p2_power_moment(static_cast<int>(b.size()));
            if (rprod.is_zero()) break;
        }
        out.rhs_y += weight * rprod;
    });
    return out;
}

} // namespace ncfree
