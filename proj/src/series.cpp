#include "ncfree/series.hpp"

#include <algorithm>
#include <mutex>

#include "ncfree/errors.hpp"

namespace ncfree {

NCSeries::NCSeries(int nvars, int degree_cap) : nvars_(nvars), cap_(degree_cap) {
    if (nvars < 1) throw domain_error("NCSeries: nvars must be positive");
    if (degree_cap < 1) throw domain_error("NCSeries: degree cap must be positive");
}

void NCSeries::check_word(const Word& w, bool enforce_cap) const {
    if (w.empty()) throw domain_error("NCSeries: words have length >= 1 (no constant term)");
    if (enforce_cap && static_cast<int>(w.size()) > cap_)
        throw domain_error("NCSeries: word of length " + std::to_string(w.size()) +
                           " beyond degree cap " + std::to_string(cap_));
    for (int l : w)
        if (l < 1 || l > nvars_)
            throw domain_error("NCSeries: letter " + std::to_string(l) + " outside {1.." +
                               std::to_string(nvars_) + "}");
}

const GaussRat& NCSeries::coef(const Word& w) const {
    check_word(w, true);
    auto it = terms_.find(w);
    return it == terms_.end() ? gauss_zero() : it->second;
}

void NCSeries::set_coef(const Word& w, GaussRat value) {
    check_word(w, true);
    if (value.is_zero())
        terms_.erase(w);
    else
        terms_[w] = std::move(value);
}

void NCSeries::add_coef(const Word& w, const GaussRat& value) {
    check_word(w, true);
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        if (!value.is_zero()) terms_.emplace(w, value);
        return;
    }
    it->second += value;
    if (it->second.is_zero()) terms_.erase(it);
}

GaussRat NCSeries::coef_restricted(const Word& w, const std::vector<int>& positions) const {
    check_word(w, true);
    if (positions.empty()) throw domain_error("coef_restricted: empty position set");
    Word sub;
    sub.reserve(positions.size());
    int prev = 0;
    for (int p : positions) {
        if (p <= prev || p > static_cast<int>(w.size()))
            throw domain_error("coef_restricted: positions must ascend within {1..len(w)}");
        prev = p;
        sub.push_back(w[p - 1]);
    }
    return coef(sub);
}

GaussRat NCSeries::coef_partition(const Word& w, const Partition& pi) const {
    if (pi.n() != static_cast<int>(w.size()))
        throw domain_error("coef_partition: partition ground set does not match word length");
    GaussRat prod(1);
    for (const auto& block : pi.blocks()) {
        prod *= coef_restricted(w, block);
        if (prod.is_zero()) return prod;
    }
    return prod;
}

namespace {

// Per length k, every pi in NC(k) with its Kreweras complement, stored
// flat (block id per position).  Built once, then shared read-only.
struct NcPairEntry {
    std::vector<int> pi_block_of;  // size k, 0-based block ids in order of first appearance
    int pi_nblocks;
    std::vector<int> kpi_block_of;
    int kpi_nblocks;
};

const std::vector<NcPairEntry>& nc_pair_table(int k) {
    static std::mutex mu;
    static std::vector<std::vector<NcPairEntry>> tables; // index k
    std::lock_guard<std::mutex> lock(mu);
    if (static_cast<int>(tables.size()) <= k) tables.resize(k + 1);
    if (tables[k].empty()) {
        auto flat = [k](const Partition& p, std::vector<int>& out) {
            out.assign(k, 0);
            for (int i = 1; i <= k; ++i) out[i - 1] = p.block_index_of(i);
        };
        for_each_nc(k, [&](const Partition& pi) {
            NcPairEntry e;
            flat(pi, e.pi_block_of);
            e.pi_nblocks = pi.block_count();
            const Partition kp = kreweras(pi);
            flat(kp, e.kpi_block_of);
            e.kpi_nblocks = kp.block_count();
            tables[k].push_back(std::move(e));
        });
    }
    return tables[k];
}

std::vector<std::vector<int>> blocks_from_flat(const std::vector<int>& block_of, int nblocks) {
    std::vector<std::vector<int>> blocks(nblocks);
    for (int i = 0; i < static_cast<int>(block_of.size()); ++i)
        blocks[block_of[i]].push_back(i + 1);
    return blocks;
}

// Enumerates the words supported by f on the blocks of pi (everything
// else contributes zero to the Eq-for-boxstar sum) and accumulates
// f-product times g-product into out.
struct BoxstarAccum {
    const NCSeries& g;
    NCSeries& out;
    const std::vector<std::vector<int>>& pi_blocks;
    const std::vector<std::vector<int>>& kpi_blocks;
    const std::vector<std::vector<std::pair<const Word*, const GaussRat*>>>& support;
    Word word;

    void run() { place(0, GaussRat(1)); }

    void place(std::size_t bi, GaussRat fprod) {
        if (bi == pi_blocks.size()) {
            GaussRat total = std::move(fprod);
            Word sub;
            for (const auto& block : kpi_blocks) {
                sub.clear();
                for (int pos : block) sub.push_back(word[pos - 1]);
                const GaussRat& c = g.coef(sub);
                if (c.is_zero()) return;
                total *= c;
            }
            out.add_coef(word, total);
            return;
        }
        const auto& block = pi_blocks[bi];
        for (const auto& [w, c] : support[block.size()]) {
            for (std::size_t t = 0; t < block.size(); ++t) word[block[t] - 1] = (*w)[t];
            place(bi + 1, fprod * *c);
        }
    }
};

} // namespace

NCSeries boxstar(const NCSeries& f, const NCSeries& g) {
    if (f.nvars() != g.nvars() || f.degree_cap() != g.degree_cap())
        throw domain_error("boxstar: operands must share nvars and degree cap");
    const int cap = f.degree_cap();
    NCSeries out(f.nvars(), cap);

    // f's nonzero words grouped by length.
    std::vector<std::vector<std::pair<const Word*, const GaussRat*>>> support(cap + 1);
    for (const auto& [w, c] : f.terms()) support[w.size()].emplace_back(&w, &c);

    for (int k = 1; k <= cap; ++k) {
        bool any = false;
        for (int s = 1; s <= k && !any; ++s) any = !support[s].empty();
        if (!any) continue;
        for (const auto& entry : nc_pair_table(k)) {
            bool feasible = true;
            {
                std::vector<int> sizes(entry.pi_nblocks, 0);
                for (int b : entry.pi_block_of) ++sizes[b];
                for (int s : sizes)
                    if (support[s].empty()) {
                        feasible = false;
                        break;
                    }
            }
            if (!feasible) continue;
            const auto pi_blocks = blocks_from_flat(entry.pi_block_of, entry.pi_nblocks);
            const auto kpi_blocks = blocks_from_flat(entry.kpi_block_of, entry.kpi_nblocks);
            BoxstarAccum acc{g, out, pi_blocks, kpi_blocks, support, Word(k)};
            acc.run();
        }
    }
    return out;
}

Rat moeb_coefficient(int k) {
    if (k < 1) throw domain_error("moeb_coefficient: k >= 1");
    Rat c(catalan(k - 1));
    return k % 2 == 0 ? -c : c;
}

namespace {

template <typename CoefFn>
NCSeries dense_series(int nvars, int cap, CoefFn coef_of_len) {
    NCSeries s(nvars, cap);
    Word w;
    // All words in shortlex order per length.
    std::function<void(int)> rec = [&](int remaining) {
        if (!w.empty()) s.set_coef(w, coef_of_len(static_cast<int>(w.size())));
        if (remaining == 0) return;
        for (int l = 1; l <= nvars; ++l) {
            w.push_back(l);
            rec(remaining - 1);
            w.pop_back();
        }
    };
    rec(cap);
    return s;
}

} // namespace

NCSeries zeta_series(int nvars, int degree_cap) {
    return dense_series(nvars, degree_cap, [](int) { return GaussRat(1); });
}

NCSeries moeb_series(int nvars, int degree_cap) {
    std::vector<GaussRat> by_len(degree_cap + 1);
    for (int k = 1; k <= degree_cap; ++k) by_len[k] = GaussRat(moeb_coefficient(k));
    return dense_series(nvars, degree_cap, [&](int k) { return by_len[k]; });
}

NCSeries sum_series(int nvars, int degree_cap) {
    NCSeries s(nvars, degree_cap);
    for (int l = 1; l <= nvars; ++l) s.set_coef({l}, GaussRat(1));
    return s;
}

NCSeries truncated(const NCSeries& f, int new_cap) {
    if (new_cap > f.degree_cap())
        throw domain_error("truncated: new cap exceeds the series cap");
    NCSeries out(f.nvars(), new_cap);
    for (const auto& [w, c] : f.terms()) {
        if (static_cast<int>(w.size()) > new_cap) break; // shortlex order
        out.set_coef(w, c);
    }
    return out;
}

NCSeries linear_substitute(const NCSeries& f, const std::vector<std::vector<GaussRat>>& C) {
    const int n = f.nvars();
    if (static_cast<int>(C.size()) != n)
        throw domain_error("linear_substitute: matrix must be nvars x nvars");
    for (const auto& row : C)
        if (static_cast<int>(row.size()) != n)
            throw domain_error("linear_substitute: matrix must be nvars x nvars");

    NCSeries out(n, f.degree_cap());
    Word target;
    for (const auto& [w, c] : f.terms()) {
        target.assign(w.size(), 0);
        // Expand the product of rows C[w_1], ..., C[w_k].
        std::function<void(std::size_t, GaussRat)> rec = [&](std::size_t pos, GaussRat acc) {
            if (pos == w.size()) {
                out.add_coef(target, acc);
                return;
            }
            const auto& row = C[w[pos] - 1];
            for (int j = 1; j <= n; ++j) {
                if (row[j - 1].is_zero()) continue;
                target[pos] = j;
                rec(pos + 1, acc * row[j - 1]);
            }
        };
        rec(0, c);
    }
    return out;
}

} // namespace ncfree
