#include "ncfree/freespace.hpp"

#include <algorithm>
#include <functional>

#include "ncfree/errors.hpp"

namespace ncfree {

NCSeries r_from_m(const MomentFunctional& m) {
    return boxstar(m.series, moeb_series(m.series.nvars(), m.series.degree_cap()));
}

GaussRat moment_cumulant_sum(const NCSeries& r, const Word& w) {
    GaussRat acc;
    for_each_nc(static_cast<int>(w.size()),
                [&](const Partition& pi) { acc += r.coef_partition(w, pi); });
    return acc;
}

MomentFunctional m_from_r(const NCSeries& r) {
    NCSeries via_star = boxstar(r, zeta_series(r.nvars(), r.degree_cap()));
    // Independent route: the literal sum over NC(k) for every word with a
    // nonzero coefficient on either side.
    NCSeries direct(r.nvars(), r.degree_cap());
    for (const auto& [w, c] : via_star.terms()) direct.set_coef(w, moment_cumulant_sum(r, w));
    if (!(direct == via_star))
        throw std::logic_error("m_from_r: star route and moment-cumulant sum disagree");
    // Words absent from the star route must also vanish directly; check
    // r's own support words as a representative set.
    for (const auto& [w, c] : r.terms())
        if (via_star.coef(w).is_zero() && !moment_cumulant_sum(r, w).is_zero())
            throw std::logic_error("m_from_r: star route dropped a nonzero moment");
    return MomentFunctional(std::move(via_star));
}

bool word_is_cyclic_invariant(const NCSeries& s) {
    for (const auto& [w, c] : s.terms()) {
        Word rot(w.begin() + 1, w.end());
        rot.push_back(w.front());
        if (s.coef(rot) != c) return false;
    }
    return true;
}

FreeSpace::FreeSpace(std::vector<std::string> variables,
                     std::vector<std::vector<std::string>> families,
                     std::vector<NCSeries> family_r, int degree_cap, bool tracial)
    : variables_(std::move(variables)),
      family_names_(std::move(families)),
      family_r_(std::move(family_r)),
      degree_cap_(degree_cap),
      tracial_(tracial) {
    if (degree_cap_ < 1) throw domain_error("FreeSpace: degree cap must be positive");
    if (variables_.empty()) throw domain_error("FreeSpace: no variables");
    for (int i = 0; i < static_cast<int>(variables_.size()); ++i) {
        if (variables_[i].empty()) throw domain_error("FreeSpace: empty variable name");
        if (!index_of_.emplace(variables_[i], i + 1).second)
            throw domain_error("FreeSpace: duplicate variable '" + variables_[i] + "'");
    }
    if (family_names_.size() != family_r_.size())
        throw domain_error("FreeSpace: family/series count mismatch");
    family_of_.assign(variables_.size(), -1);
    local_index_.assign(variables_.size(), 0);
    for (int f = 0; f < static_cast<int>(family_names_.size()); ++f) {
        const auto& fam = family_names_[f];
        if (fam.empty()) throw domain_error("FreeSpace: empty family");
        if (family_r_[f].nvars() != static_cast<int>(fam.size()))
            throw domain_error("FreeSpace: family series has wrong variable count");
        if (family_r_[f].degree_cap() != degree_cap_)
            throw domain_error("FreeSpace: family series cap differs from the space cap");
        for (int j = 0; j < static_cast<int>(fam.size()); ++j) {
            const int v = var_index(fam[j]);
            if (family_of_[v - 1] != -1)
                throw domain_error("FreeSpace: variable '" + fam[j] + "' in two families");
            family_of_[v - 1] = f;
            local_index_[v - 1] = j + 1;
        }
    }
    for (std::size_t v = 0; v < variables_.size(); ++v)
        if (family_of_[v] == -1)
            throw domain_error("FreeSpace: variable '" + variables_[v] + "' belongs to no family");
    if (tracial_)
        for (const auto& s : family_r_)
            if (!word_is_cyclic_invariant(s))
                throw domain_error("FreeSpace: tracial flag set but a family series is not "
                                   "cyclically invariant");
}

int FreeSpace::var_index(const std::string& name) const {
    auto it = index_of_.find(name);
    if (it == index_of_.end()) throw domain_error("unknown variable '" + name + "'");
    return it->second;
}

int FreeSpace::family_of_var(int var_index) const { return family_of_[var_index - 1]; }

GaussRat FreeSpace::cumulant(const Word& global_word) const {
    if (global_word.empty()) throw domain_error("cumulant of the empty word is undefined");
    const int fam = family_of_[global_word.front() - 1];
    Word local;
    local.reserve(global_word.size());
    for (int v : global_word) {
        if (family_of_[v - 1] != fam) return GaussRat(); // mixed families
        local.push_back(local_index_[v - 1]);
    }
    return family_r_[fam].coef(local);
}

GaussRat FreeSpace::moment(const Word& global_word) const {
    for (int v : global_word)
        if (v < 1 || v > static_cast<int>(variables_.size()))
            throw domain_error("moment: variable index out of range");
    if (static_cast<int>(global_word.size()) > degree_cap_)
        throw domain_error("moment: word of length " + std::to_string(global_word.size()) +
                           " exceeds degree cap " + std::to_string(degree_cap_));
    std::lock_guard<std::mutex> lock(memo_mu_);
    return moment_nolock(global_word);
}

GaussRat FreeSpace::moment(const std::vector<std::string>& word_of_names) const {
    Word w;
    w.reserve(word_of_names.size());
    for (const auto& name : word_of_names) w.push_back(var_index(name));
    return moment(w);
}

// Sum over NC(k) via the block of position 1: that block slices the rest
// into independent gaps, each a contiguous subword.
GaussRat FreeSpace::moment_nolock(const Word& w) const {
    if (w.empty()) return GaussRat(1);
    if (auto it = moment_memo_.find(w); it != moment_memo_.end()) return it->second;

    const int k = static_cast<int>(w.size());
    GaussRat total;
    Word block{w[0]};
    // pick = index (0-based) of the last element currently in the block.
    std::function<void(int, const GaussRat&)> extend = [&](int pick, const GaussRat& gaps) {
        // Close the block: the tail w[pick+1..k) is the final gap.
        {
            const GaussRat kappa = cumulant(block);
            if (!kappa.is_zero()) {
                const GaussRat tail = moment_nolock(Word(w.begin() + pick + 1, w.end()));
                if (!tail.is_zero()) total += kappa * gaps * tail;
            }
        }
        for (int next = pick + 1; next < k; ++next) {
            const GaussRat gap = moment_nolock(Word(w.begin() + pick + 1, w.begin() + next));
            if (gap.is_zero()) continue;
            block.push_back(w[next]);
            extend(next, gaps * gap);
            block.pop_back();
        }
    };
    extend(0, GaussRat(1));
    moment_memo_.emplace(w, total);
    return total;
}

Word FreeSpace::expand(const std::vector<Product>& elems, const Word& composite_word) const {
    Word out;
    for (int e : composite_word) {
        if (e < 1 || e > static_cast<int>(elems.size()))
            throw domain_error("composite letter out of range");
        for (const auto& name : elems[e - 1]) out.push_back(var_index(name));
    }
    return out;
}

namespace {

int max_product_length(const std::vector<FreeSpace::Product>& elems) {
    int m = 0;
    for (const auto& p : elems) {
        if (p.empty()) throw domain_error("empty formal product");
        m = std::max(m, static_cast<int>(p.size()));
    }
    return m;
}

} // namespace

NCSeries FreeSpace::joint_m(const std::vector<Product>& elems, int composite_cap) const {
    if (elems.empty()) throw domain_error("joint_m: no elements");
    const int lmax = max_product_length(elems);
    if (composite_cap == 0) composite_cap = degree_cap_ / lmax;
    if (composite_cap < 1)
        throw domain_error("joint_m: a product of length " + std::to_string(lmax) +
                           " does not fit under degree cap " + std::to_string(degree_cap_));
    if (composite_cap * lmax > degree_cap_)
        throw domain_error("joint_m: composite words of length " + std::to_string(composite_cap) +
                           " need base moments of degree " + std::to_string(composite_cap * lmax) +
                           " > cap " + std::to_string(degree_cap_));
    NCSeries m(static_cast<int>(elems.size()), composite_cap);
    Word cw;
    std::function<void()> rec = [&] {
        if (!cw.empty()) m.set_coef(cw, moment(expand(elems, cw)));
        if (static_cast<int>(cw.size()) == composite_cap) return;
        for (int e = 1; e <= static_cast<int>(elems.size()); ++e) {
            cw.push_back(e);
            rec();
            cw.pop_back();
        }
    };
    rec();
    return m;
}

NCSeries FreeSpace::joint_r(const std::vector<Product>& elems, int composite_cap) const {
    return r_from_m(MomentFunctional(joint_m(elems, composite_cap)));
}

namespace {

// Shared inversion state for cumulants of composite elements.
struct CompositeCtx {
    const FreeSpace& space;
    const std::vector<FreeSpace::Product>& elems;
    std::unordered_map<Word, GaussRat, WordHash> r_memo;

    GaussRat m_of(const Word& cw) {
        if (cw.empty()) return GaussRat(1);
        return space.moment(space.expand(elems, cw));
    }

    GaussRat r_of(const Word& cw) {
        if (auto it = r_memo.find(cw); it != r_memo.end()) return it->second;
        const int k = static_cast<int>(cw.size());
        GaussRat value = m_of(cw);
        if (k > 1) {
            // Subtract every term whose block of position 1 is proper.
            Word block{cw[0]};
            std::function<void(int, const GaussRat&)> extend = [&](int pick, const GaussRat& gaps) {
                if (static_cast<int>(block.size()) < k) {
                    const GaussRat tail = m_of(Word(cw.begin() + pick + 1, cw.end()));
                    if (!tail.is_zero()) value -= r_of(block) * gaps * tail;
                }
                for (int next = pick + 1; next < k; ++next) {
                    if (static_cast<int>(block.size()) + 1 == k && next == k - 1)
                        break; // would be the full block
                    const GaussRat gap = m_of(Word(cw.begin() + pick + 1, cw.begin() + next));
                    if (gap.is_zero()) continue;
                    block.push_back(cw[next]);
                    extend(next, gaps * gap);
                    block.pop_back();
                }
            };
            extend(0, GaussRat(1));
        }
        r_memo.emplace(cw, value);
        return value;
    }
};

} // namespace

GaussRat FreeSpace::composite_cumulant(const std::vector<Product>& elems,
                                       const Word& composite_word) const {
    if (composite_word.empty()) throw domain_error("composite cumulant of the empty word");
    CompositeCtx ctx{*this, elems, {}};
    return ctx.r_of(composite_word);
}

std::optional<FreeSpace::MixedCumulantWitness> FreeSpace::first_mixed_cumulant(
    const std::vector<std::vector<Product>>& groups, int max_total_degree) const {
    if (groups.size() < 2) throw domain_error("check_freeness: need at least two groups");
    std::vector<Product> elems;
    std::vector<int> group_of;
    for (int g = 0; g < static_cast<int>(groups.size()); ++g)
        for (const auto& p : groups[g]) {
            if (std::find(elems.begin(), elems.end(), p) != elems.end())
                throw domain_error("check_freeness: groups are not disjoint");
            elems.push_back(p);
            group_of.push_back(g);
        }
    if (max_total_degree == 0) max_total_degree = degree_cap_;
    if (max_total_degree > degree_cap_)
        throw domain_error("check_freeness: degree budget " + std::to_string(max_total_degree) +
                           " exceeds the space cap " + std::to_string(degree_cap_));

    CompositeCtx ctx{*this, elems, {}};
    std::optional<MixedCumulantWitness> found;
    Word cw;
    int used = 0;
    std::function<void()> rec = [&] {
        if (found) return;
        if (cw.size() >= 2) {
            bool mixed = false;
            for (int e : cw)
                if (group_of[e - 1] != group_of[cw.front() - 1]) {
                    mixed = true;
                    break;
                }
            if (mixed) {
                GaussRat v = ctx.r_of(cw);
                if (!v.is_zero()) {
                    found = MixedCumulantWitness{elems, cw, std::move(v)};
                    return;
                }
            }
        }
        for (int e = 1; e <= static_cast<int>(elems.size()); ++e) {
            const int len = static_cast<int>(elems[e - 1].size());
            if (used + len > max_total_degree) continue;
            cw.push_back(e);
            used += len;
            rec();
            used -= len;
            cw.pop_back();
            if (found) return;
        }
    };
    rec();
    return found;
}

bool FreeSpace::check_freeness(const std::vector<std::vector<Product>>& groups,
                               int max_total_degree) const {
    return !first_mixed_cumulant(groups, max_total_degree).has_value();
}

bool FreeSpace::check_trace() const {
    for (const auto& s : family_r_)
        if (!word_is_cyclic_invariant(s)) return false;
    // Mixed moments must rotate as well; sample every short word.
    const int len_cap = std::min(degree_cap_, 4);
    const int nv = static_cast<int>(variables_.size());
    Word w;
    bool ok = true;
    std::function<void()> rec = [&] {
        if (!ok) return;
        if (!w.empty()) {
            Word rot(w.begin() + 1, w.end());
            rot.push_back(w.front());
            if (moment(w) != moment(rot)) {
                ok = false;
                return;
            }
        }
        if (static_cast<int>(w.size()) == len_cap) return;
        for (int v = 1; v <= nv; ++v) {
            w.push_back(v);
            rec();
            w.pop_back();
        }
    };
    rec();
    return ok;
}

bool FreeSpace::freeness_criterion_46(const std::vector<std::string>& c_gens,
                                      const std::vector<Product>& x_elems, int tuple_len) const {
    if (!tracial_) throw domain_error("freeness_criterion_46 requires a tracial space");
    if (tuple_len < 1) throw domain_error("freeness_criterion_46: tuple length >= 1");
    int x_max = max_product_length(x_elems);
    if (tuple_len * (1 + x_max) > degree_cap_)
        throw domain_error("freeness_criterion_46: interleaved words of degree " +
                           std::to_string(tuple_len * (1 + x_max)) + " exceed cap " +
                           std::to_string(degree_cap_));

    const int m = tuple_len;
    std::vector<int> c_pick(m, 0), x_pick(m, 0);
    const auto all_nc = enumerate_nc(m);

    auto run_case = [&]() -> bool {
        // phi(c1 x1 c2 x2 ... cm xm)
        Word base;
        for (int t = 0; t < m; ++t) {
            base.push_back(var_index(c_gens[c_pick[t]]));
            for (const auto& name : x_elems[x_pick[t]]) base.push_back(var_index(name));
        }
        const GaussRat lhs = moment(base);

        // [coef (1..m)](R(mu_c) * M(mu_x)) with both series indexed by
        // tuple slots.
        auto c_cumulant = [&](const std::vector<int>& slots) {
            Word w;
            for (int s : slots) w.push_back(var_index(c_gens[c_pick[s - 1]]));
            return cumulant(w);
        };
        auto x_moment = [&](const std::vector<int>& slots) {
            Word w;
            for (int s : slots)
                for (const auto& name : x_elems[x_pick[s - 1]]) w.push_back(var_index(name));
            return moment(w);
        };
        GaussRat rhs;
        for (const auto& pi : all_nc) {
            GaussRat term(1);
            for (const auto& b : pi.blocks()) {
                term *= c_cumulant(b);
                if (term.is_zero()) break;
            }
            if (term.is_zero()) continue;
            for (const auto& b : kreweras(pi).blocks()) {
                term *= x_moment(b);
                if (term.is_zero()) break;
            }
            rhs += term;
        }
        return lhs == rhs;
    };

    std::function<bool(int)> sweep = [&](int pos) -> bool {
        if (pos == 2 * m) return run_case();
        const bool is_c = pos < m;
        auto& pick = is_c ? c_pick : x_pick;
        const int limit = is_c ? static_cast<int>(c_gens.size()) : static_cast<int>(x_elems.size());
        for (int i = 0; i < limit; ++i) {
            pick[pos % m] = i;
            if (!sweep(pos + 1)) return false;
        }
        return true;
    };
    return sweep(0);
}

} // namespace ncfree
