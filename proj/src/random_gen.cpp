#include "ncfree/random_gen.hpp"

#include <algorithm>

#include "ncfree/errors.hpp"
#include "ncfree/rdiagonal.hpp"

namespace ncfree {

int rand_int(Rng& rng, int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(rng() % span);
}

Rat random_small_rational(Rng& rng) {
    return Rat(rand_int(rng, -3, 3), rand_int(rng, 1, 3));
}

GaussRat random_small_gauss(Rng& rng, bool allow_imag) {
    GaussRat g(random_small_rational(rng));
    if (allow_imag && rand_int(rng, 0, 3) == 0) g.im = random_small_rational(rng);
    return g;
}

NCSeries random_series(Rng& rng, int nvars, int degree_cap, int terms) {
    NCSeries s(nvars, degree_cap);
    for (int t = 0; t < terms; ++t) {
        Word w(static_cast<std::size_t>(rand_int(rng, 1, degree_cap)));
        for (auto& l : w) l = rand_int(rng, 1, nvars);
        s.set_coef(w, random_small_gauss(rng));
    }
    return s;
}

namespace {

// Smallest rotation, for picking one representative per necklace.
Word necklace_representative(const Word& w) {
    Word best = w;
    Word rot = w;
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

template <typename Draw>
NCSeries necklace_series(int nvars, int degree_cap, Draw draw) {
    NCSeries s(nvars, degree_cap);
    std::map<Word, GaussRat> by_class;
    Word w;
    std::function<void()> rec = [&] {
        if (!w.empty()) {
            const Word rep = necklace_representative(w);
            auto it = by_class.find(rep);
            if (it == by_class.end()) it = by_class.emplace(rep, draw(rep)).first;
            s.set_coef(w, it->second);
        }
        if (static_cast<int>(w.size()) == degree_cap) return;
        for (int l = 1; l <= nvars; ++l) {
            w.push_back(l);
            rec();
            w.pop_back();
        }
    };
    rec();
    return s;
}

} // namespace

NCSeries random_tracial_series(Rng& rng, int nvars, int degree_cap) {
    return necklace_series(nvars, degree_cap, [&](const Word&) {
        // Keep the series sparse: most necklaces stay zero.
        return rand_int(rng, 0, 2) == 0 ? random_small_gauss(rng) : GaussRat();
    });
}

NCSeries random_r_diagonal_pair_r(Rng& rng, int pair_cap) {
    NCSeries f(1, std::max(1, pair_cap / 2));
    for (int k = 1; 2 * k <= pair_cap; ++k)
        f.set_coef(Word(static_cast<std::size_t>(k), 1), random_small_gauss(rng));
    return pair_series_from_determining(f, pair_cap);
}

NCSeries random_diagonally_balanced_pair_r(Rng& rng, int pair_cap) {
    return necklace_series(2, pair_cap, [&](const Word& rep) -> GaussRat {
        if (rep.size() % 2 != 0) {
            // Odd class: zero whenever it is a rotation of an alternating
            // word, i.e. at most one adjacent equal pair on the cycle.
            int equal_adjacent = 0;
            for (std::size_t t = 0; t < rep.size(); ++t)
                if (rep[t] == rep[(t + 1) % rep.size()]) ++equal_adjacent;
            if (equal_adjacent <= 1) return GaussRat();
        }
        return rand_int(rng, 0, 2) == 0 ? random_small_gauss(rng) : GaussRat();
    });
}

} // namespace ncfree
