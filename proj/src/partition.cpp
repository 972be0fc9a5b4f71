#include "ncfree/partition.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "ncfree/errors.hpp"

namespace ncfree {

int ground_set_cap() {
    static const int cap = [] {
        int c = 12;
        if (const char* env = std::getenv("NCFREE_NC_CAP")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && *end == '\0' && v >= 1 && v <= 12) c = static_cast<int>(v);
        }
        return c;
    }();
    return cap;
}

static void check_ground_set(int n, const char* who) {
    if (n < 1 || n > ground_set_cap())
        throw domain_error(std::string(who) + ": ground set size " + std::to_string(n) +
                           " outside [1, " + std::to_string(ground_set_cap()) + "]");
}

Permutation::Permutation(int n) : images_(n) {
    for (int i = 0; i < n; ++i) images_[i] = i + 1;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    std::vector<char> seen(n + 1, 0);
    for (int v : images_) {
        if (v < 1 || v > n || seen[v]) throw domain_error("not a bijection of {1..n}");
        seen[v] = 1;
    }
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 1; i <= n(); ++i) inv[images_[i - 1] - 1] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation& b) const {
    if (n() != b.n()) throw domain_error("permutation size mismatch");
    std::vector<int> out(images_.size());
    for (int i = 1; i <= n(); ++i) out[i - 1] = b(images_[i - 1]);
    return Permutation(std::move(out));
}

// Canonicalize and validate the partition property; fills block_of.
static std::vector<int> canonicalize_blocks(int n, std::vector<std::vector<int>>& blocks) {
    std::vector<int> block_of(n, -1);
    for (auto& b : blocks) {
        if (b.empty()) throw domain_error("empty block");
        std::sort(b.begin(), b.end());
        for (int e : b) {
            if (e < 1 || e > n) throw domain_error("element " + std::to_string(e) + " outside {1.." +
                                                   std::to_string(n) + "}");
            if (block_of[e - 1] != -1) throw domain_error("element " + std::to_string(e) + " repeated");
            block_of[e - 1] = 0; // provisional
        }
    }
    for (int i = 0; i < n; ++i)
        if (block_of[i] == -1)
            throw domain_error("element " + std::to_string(i + 1) + " missing from partition");
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (int bi = 0; bi < static_cast<int>(blocks.size()); ++bi)
        for (int e : blocks[bi]) block_of[e - 1] = bi;
    return block_of;
}

// Single left-to-right sweep with a stack of open blocks: a partition is
// non-crossing iff whenever an element of an already-open block appears,
// that block is the innermost open one.
static bool noncrossing_sweep(int n, const std::vector<int>& block_of,
                              const std::vector<std::vector<int>>& blocks) {
    std::vector<int> last(blocks.size());
    for (int bi = 0; bi < static_cast<int>(blocks.size()); ++bi) last[bi] = blocks[bi].back();
    std::vector<int> stack;
    std::vector<char> open(blocks.size(), 0);
    for (int i = 1; i <= n; ++i) {
        const int b = block_of[i - 1];
        if (open[b]) {
            if (stack.empty() || stack.back() != b) return false;
        } else {
            open[b] = 1;
            stack.push_back(b);
        }
        if (last[b] == i) {
            if (stack.back() != b) return false;
            stack.pop_back();
            open[b] = 2; // closed; reappearing is impossible (elements sorted)
        }
    }
    return true;
}

Partition::Partition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
    check_ground_set(n, "Partition");
    block_of_ = canonicalize_blocks(n_, blocks_);
    if (!noncrossing_sweep(n_, block_of_, blocks_))
        throw domain_error("partition is crossing: " + to_string(*this));
}

std::vector<int> Partition::sorted_block_sizes() const {
    std::vector<int> s;
    s.reserve(blocks_.size());
    for (const auto& b : blocks_) s.push_back(static_cast<int>(b.size()));
    std::sort(s.begin(), s.end());
    return s;
}

bool Partition::operator<(const Partition& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return blocks_ < o.blocks_;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    for (const auto& b : p.blocks()) {
        os << '{';
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) os << ',';
            os << b[i];
        }
        os << '}';
    }
    return os;
}

std::string to_string(const Partition& p) {
    std::ostringstream ss;
    ss << p;
    return ss.str();
}

Partition singletons_partition(int n) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(n);
    for (int i = 1; i <= n; ++i) blocks.push_back({i});
    return Partition(n, std::move(blocks));
}

Partition full_block_partition(int n) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;
    return Partition(n, {all});
}

bool is_noncrossing(const std::vector<std::vector<int>>& blocks, int n) {
    check_ground_set(n, "is_noncrossing");
    auto copy = blocks;
    const std::vector<int> block_of = canonicalize_blocks(n, copy);
    return noncrossing_sweep(n, block_of, copy);
}

namespace {

// Gap recursion: the block of the smallest element of a range slices the
// rest into independent sub-ranges.
struct NcGenerator {
    int n;
    const std::function<void(const Partition&)>& fn;
    std::vector<std::vector<int>> blocks;

    void emit() { fn(Partition(n, blocks)); }

    // Partition the positions `elems[from..to)`; elems is ascending.
    void gen(const std::vector<int>& elems, std::size_t from, std::size_t to,
             const std::function<void()>& k) {
        if (from == to) {
            k();
            return;
        }
        std::vector<int> head{elems[from]};
        choose_rest(elems, from + 1, to, head, from + 1, k);
    }

    // head holds the partial block of elems[from-1]; next element of the
    // block is chosen among elems[lo..to), or the block is closed.
    void choose_rest(const std::vector<int>& elems, std::size_t lo, std::size_t to,
                     std::vector<int>& head, std::size_t gap_start,
                     const std::function<void()>& k) {
        // Close the block here: the tail elems[gap_start..to) is one gap.
        blocks.push_back(head);
        gen(elems, gap_start, to, k);
        blocks.pop_back();
        for (std::size_t pick = lo; pick < to; ++pick) {
            head.push_back(elems[pick]);
            // elems[gap_start..pick) becomes an enclosed gap.
            gen(elems, gap_start, pick, [&] {
                choose_rest(elems, pick + 1, to, head, pick + 1, k);
            });
            head.pop_back();
        }
    }
};

} // namespace

void for_each_nc(int n, const std::function<void(const Partition&)>& fn) {
    check_ground_set(n, "enumerate_nc");
    std::vector<int> elems(n);
    for (int i = 0; i < n; ++i) elems[i] = i + 1;
    NcGenerator g{n, fn, {}};
    g.gen(elems, 0, elems.size(), [&] { g.emit(); });
}

std::vector<Partition> enumerate_nc(int n) {
    std::vector<Partition> out;
    for_each_nc(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

bool refinement_leq(const Partition& pi, const Partition& rho) {
    if (pi.n() != rho.n()) throw domain_error("refinement_leq: mismatched ground sets");
    for (const auto& b : pi.blocks()) {
        const int target = rho.block_index_of(b.front());
        for (int e : b)
            if (rho.block_index_of(e) != target) return false;
    }
    return true;
}

Permutation perm_of(const Partition& pi) {
    std::vector<int> images(pi.n());
    for (const auto& b : pi.blocks()) {
        for (std::size_t i = 0; i + 1 < b.size(); ++i) images[b[i] - 1] = b[i + 1];
        images[b.back() - 1] = b.front();
    }
    return Permutation(std::move(images));
}

Partition partition_of_perm(const Permutation& p) {
    const int n = p.n();
    std::vector<char> seen(n + 1, 0);
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= n; ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        int j = i;
        do {
            seen[j] = 1;
            cyc.push_back(j);
            j = p(j);
        } while (j != i);
        blocks.push_back(std::move(cyc));
    }
    return Partition(n, std::move(blocks));
}

Partition rotate(const Partition& pi, int shift) {
    const int n = pi.n();
    shift = ((shift % n) + n) % n;
    std::vector<std::vector<int>> blocks;
    for (const auto& b : pi.blocks()) {
        std::vector<int> nb;
        nb.reserve(b.size());
        for (int e : b) nb.push_back((e - 1 + shift) % n + 1);
        blocks.push_back(std::move(nb));
    }
    return Partition(n, std::move(blocks));
}

static Permutation full_cycle(int n) {
    std::vector<int> images(n);
    for (int i = 1; i <= n; ++i) images[i - 1] = i % n + 1;
    return Permutation(std::move(images));
}

Partition kreweras(const Partition& pi) {
    return partition_of_perm(full_cycle(pi.n()).then(perm_of(pi).inverse()));
}

Partition kreweras_inverse(const Partition& pi) {
    return partition_of_perm(perm_of(pi).inverse().then(full_cycle(pi.n())));
}

// Apply a local complement block by block of rho.
static Partition blockwise(const Partition& pi, const Partition& rho,
                           Partition (*local)(const Partition&)) {
    if (!refinement_leq(pi, rho)) throw domain_error("relative complement requires pi <= rho");
    std::vector<std::vector<int>> out;
    for (const auto& big : rho.blocks()) {
        const int m = static_cast<int>(big.size());
        // pi restricted to `big`, relabeled to {1..m}.
        std::vector<std::vector<int>> local_blocks(m);
        std::vector<std::vector<int>> grouped;
        {
            std::vector<int> first_seen(pi.block_count(), -1);
            for (int t = 0; t < m; ++t) {
                const int bi = pi.block_index_of(big[t]);
                if (first_seen[bi] == -1) {
                    first_seen[bi] = static_cast<int>(grouped.size());
                    grouped.emplace_back();
                }
                grouped[first_seen[bi]].push_back(t + 1);
            }
        }
        const Partition theta = local(Partition(m, std::move(grouped)));
        for (const auto& lb : theta.blocks()) {
            std::vector<int> gb;
            gb.reserve(lb.size());
            for (int t : lb) gb.push_back(big[t - 1]);
            out.push_back(std::move(gb));
        }
    }
    return Partition(pi.n(), std::move(out));
}

Partition relative_kreweras(const Partition& pi, const Partition& rho) {
    return blockwise(pi, rho, &kreweras);
}

Partition relative_kreweras_inverse(const Partition& pi, const Partition& rho) {
    return blockwise(pi, rho, &kreweras_inverse);
}

static std::vector<std::vector<int>> interlace_blocks(const Partition& pi, const Partition& rho) {
    std::vector<std::vector<int>> blocks;
    for (const auto& b : pi.blocks()) {
        std::vector<int> nb;
        for (int e : b) nb.push_back(2 * e);
        blocks.push_back(std::move(nb));
    }
    for (const auto& b : rho.blocks()) {
        std::vector<int> nb;
        for (int e : b) nb.push_back(2 * e - 1);
        blocks.push_back(std::move(nb));
    }
    return blocks;
}

bool interlace_noncrossing(const Partition& pi, const Partition& rho) {
    if (pi.n() != rho.n()) throw domain_error("interlace_noncrossing: mismatched ground sets");
    return is_noncrossing(interlace_blocks(pi, rho), 2 * pi.n());
}

bool is_parity_alternating(const Partition& sigma) {
    if (sigma.n() % 2 != 0) throw domain_error("parity predicates need an even ground set");
    const Permutation p = perm_of(sigma);
    bool by_perm = true;
    for (int i = 1; i <= sigma.n(); ++i)
        if ((i - p(i)) % 2 == 0) {
            by_perm = false;
            break;
        }
    bool by_blocks = true; // every block has an even number of elements
    for (const auto& b : sigma.blocks())
        if (b.size() % 2 != 0) {
            by_blocks = false;
            break;
        }
    if (by_perm != by_blocks)
        throw std::logic_error("parity-alternating descriptions disagree on " + to_string(sigma));
    return by_perm;
}

bool is_parity_preserving(const Partition& sigma) {
    if (sigma.n() % 2 != 0) throw domain_error("parity predicates need an even ground set");
    const Permutation p = perm_of(sigma);
    bool by_perm = true;
    for (int i = 1; i <= sigma.n(); ++i)
        if ((i - p(i)) % 2 != 0) {
            by_perm = false;
            break;
        }
    bool by_blocks = true; // every block within one parity class
    for (const auto& b : sigma.blocks())
        for (int e : b)
            if ((e - b.front()) % 2 != 0) {
                by_blocks = false;
                goto done;
            }
done:
    if (by_perm != by_blocks)
        throw std::logic_error("parity-preserving descriptions disagree on " + to_string(sigma));
    return by_perm;
}

IntervalPair::IntervalPair(Partition lo, Partition hi) : lower(std::move(lo)), upper(std::move(hi)) {
    if (!refinement_leq(lower, upper)) throw domain_error("IntervalPair requires lower <= upper");
}

Partition interval_to_pprsv(const IntervalPair& pair) {
    const Partition odd_part = kreweras_inverse(pair.upper);
    return Partition(2 * pair.lower.n(), interlace_blocks(pair.lower, odd_part));
}

IntervalPair pprsv_to_interval(const Partition& sigma) {
    if (!is_parity_preserving(sigma))
        throw domain_error("pprsv_to_interval: partition is not parity-preserving");
    const int n = sigma.n() / 2;
    std::vector<std::vector<int>> even_blocks, odd_blocks;
    for (const auto& b : sigma.blocks()) {
        std::vector<int> nb;
        nb.reserve(b.size());
        if (b.front() % 2 == 0) {
            for (int e : b) nb.push_back(e / 2);
            even_blocks.push_back(std::move(nb));
        } else {
            for (int e : b) nb.push_back((e + 1) / 2);
            odd_blocks.push_back(std::move(nb));
        }
    }
    Partition pi(n, std::move(even_blocks));
    Partition rho = kreweras(Partition(n, std::move(odd_blocks)));
    return IntervalPair(std::move(pi), std::move(rho));
}

Partition relative_complement_via_2n(const IntervalPair& pair) {
    const Partition sigma = interval_to_pprsv(pair);
    const Partition comp = kreweras(sigma);
    std::vector<std::vector<int>> halved;
    for (const auto& b : comp.blocks()) {
        std::vector<int> nb;
        for (int e : b)
            if (e % 2 == 0) nb.push_back(e / 2);
        if (!nb.empty()) halved.push_back(std::move(nb));
    }
    return Partition(pair.lower.n(), std::move(halved));
}

bool has_odd_block(const Partition& pi) {
    for (const auto& b : pi.blocks())
        if (b.size() % 2 != 0) return true;
    return false;
}

bool has_odd_gap_block(const Partition& pi) {
    for (const auto& b : pi.blocks()) {
        if (b.size() == 1) return true;
        if (b.size() % 2 == 0 || b.size() < 3) continue;
        bool all_odd = true;
        for (std::size_t i = 0; i + 1 < b.size(); ++i)
            if ((b[i + 1] - b[i]) % 2 == 0) {
                all_odd = false;
                break;
            }
        if (all_odd) return true;
    }
    return false;
}

mpz_class catalan(int k) {
    if (k < 0) throw domain_error("catalan: negative index");
    mpz_class num;
    mpz_bin_uiui(num.get_mpz_t(), 2 * static_cast<unsigned long>(k), static_cast<unsigned long>(k));
    return num / (k + 1);
}

mpz_class count_intervals_formula(int n) {
    mpz_class a, b, c;
    mpz_fac_ui(a.get_mpz_t(), 3 * static_cast<unsigned long>(n));
    mpz_fac_ui(b.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_fac_ui(c.get_mpz_t(), 2 * static_cast<unsigned long>(n) + 1);
    return a / (b * c);
}

mpz_class count_intervals(int n) {
    const auto all = enumerate_nc(n);
    mpz_class count = 0;
    for (const auto& pi : all)
        for (const auto& rho : all)
            if (refinement_leq(pi, rho)) ++count;
    return count;
}

} // namespace ncfree
