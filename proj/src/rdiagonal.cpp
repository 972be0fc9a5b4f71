#include "ncfree/rdiagonal.hpp"

#include "ncfree/errors.hpp"

namespace ncfree {

Word alternating_word(int first_letter, int length) {
    if (first_letter != 1 && first_letter != 2) throw domain_error("alternating_word: letter 1 or 2");
    Word w(length);
    for (int i = 0; i < length; ++i) w[i] = (i % 2 == 0) ? first_letter : 3 - first_letter;
    return w;
}

static void require_pair(const NCSeries& s, const char* who) {
    if (s.nvars() != 2) throw domain_error(std::string(who) + ": pair series must have 2 variables");
}

bool is_r_diagonal(const NCSeries& pair_r) {
    require_pair(pair_r, "is_r_diagonal");
    for (const auto& [w, c] : pair_r.terms()) {
        const int len = static_cast<int>(w.size());
        if (len % 2 != 0) return false;
        if (w != alternating_word(w.front(), len)) return false;
    }
    for (int k = 1; 2 * k <= pair_r.degree_cap(); ++k)
        if (pair_r.coef(alternating_word(1, 2 * k)) != pair_r.coef(alternating_word(2, 2 * k)))
            return false;
    return true;
}

NCSeries determining_series(const NCSeries& pair_r) {
    require_pair(pair_r, "determining_series");
    if (!is_r_diagonal(pair_r)) throw domain_error("determining_series: pair is not R-diagonal");
    if (pair_r.degree_cap() < 2)
        throw domain_error("determining_series: pair cap must be at least 2");
    NCSeries f(1, pair_r.degree_cap() / 2);
    for (int k = 1; 2 * k <= pair_r.degree_cap(); ++k)
        f.set_coef(Word(static_cast<std::size_t>(k), 1), pair_r.coef(alternating_word(1, 2 * k)));
    return f;
}

NCSeries pair_series_from_determining(const NCSeries& f, int pair_cap) {
    if (f.nvars() != 1) throw domain_error("pair_series_from_determining: f has one variable");
    if (f.degree_cap() < pair_cap / 2)
        throw domain_error("pair_series_from_determining: f cap too small for the pair cap");
    NCSeries p(2, pair_cap);
    for (int k = 1; 2 * k <= pair_cap; ++k) {
        const GaussRat& a = f.coef(Word(static_cast<std::size_t>(k), 1));
        p.set_coef(alternating_word(1, 2 * k), a);
        p.set_coef(alternating_word(2, 2 * k), a);
    }
    return p;
}

bool is_diagonally_balanced_moments(const FreeSpace& space, const std::string& a1,
                                    const std::string& a2, int degree_budget) {
    if (degree_budget > space.degree_cap())
        throw domain_error("is_diagonally_balanced_moments: budget exceeds the space cap");
    const int i1 = space.var_index(a1), i2 = space.var_index(a2);
    for (int len = 1; len <= degree_budget; len += 2) {
        Word w(len);
        for (int start : {0, 1}) {
            for (int t = 0; t < len; ++t) w[t] = (t % 2 == start) ? i2 : i1;
            if (!space.moment(w).is_zero()) return false;
        }
    }
    return true;
}

bool is_diagonally_balanced_cumulants(const NCSeries& pair_r) {
    require_pair(pair_r, "is_diagonally_balanced_cumulants");
    for (int len = 1; len <= pair_r.degree_cap(); len += 2)
        for (int first : {1, 2})
            if (!pair_r.coef(alternating_word(first, len)).is_zero()) return false;
    return true;
}

NCSeries determining_from_product(const FreeSpace& space, const std::string& a1,
                                  const std::string& a2, int out_cap) {
    if (!space.tracial()) throw domain_error("determining_from_product requires a tracial space");
    if (out_cap == 0) out_cap = space.degree_cap() / 2;
    if (2 * out_cap > space.degree_cap())
        throw domain_error("determining_from_product: requested cap " + std::to_string(out_cap) +
                           " needs moments of degree " + std::to_string(2 * out_cap));
    if (!is_diagonally_balanced_moments(space, a1, a2,
                                        std::min(space.degree_cap(), 2 * out_cap + 1)))
        throw domain_error("determining_from_product: pair is not diagonally balanced");
    const NCSeries r_prod = space.joint_r({{a1, a2}}, out_cap);
    return boxstar(r_prod, moeb_series(1, out_cap));
}

NCSeries absorb(const NCSeries& f, const NCSeries& rp) {
    if (f.nvars() != 1 || rp.nvars() != 1) throw domain_error("absorb: one-variable series only");
    if (f.degree_cap() != rp.degree_cap()) throw domain_error("absorb: mismatched degree caps");
    return boxstar(f, rp);
}

NCSeries haar_pair_r(int pair_cap) {
    if (pair_cap < 2) throw domain_error("haar_pair_r: cap must be at least 2");
    return pair_series_from_determining(moeb_series(1, pair_cap / 2), pair_cap);
}

NCSeries circular_pair_r(int pair_cap) {
    if (pair_cap < 2) throw domain_error("circular_pair_r: cap must be at least 2");
    return pair_series_from_determining(sum_series(1, pair_cap / 2), pair_cap);
}

std::vector<Rat> semicircular_moments(int degree) {
    if (degree < 1) throw domain_error("semicircular_moments: degree >= 1");
    NCSeries r(1, degree);
    if (degree >= 2) r.set_coef(Word{1, 1}, GaussRat(1));
    const MomentFunctional m = m_from_r(r);
    std::vector<Rat> out;
    out.reserve(degree);
    for (int k = 1; k <= degree; ++k) {
        const GaussRat& c = m.series.coef(Word(static_cast<std::size_t>(k), 1));
        out.push_back(c.re);
    }
    return out;
}

std::vector<Rat> quartercircular_even_moments(int degree) {
    const auto semi = semicircular_moments(degree);
    std::vector<Rat> out;
    for (int k = 2; k <= degree; k += 2) out.push_back(semi[k - 1]);
    return out;
}

Rat quartercircular_moment(int n) {
    if (n < 0) throw domain_error("quartercircular_moment: n >= 0");
    if (n == 0) return Rat(1);
    if (n % 2 != 0)
        throw unsupported_value_error(
            "odd quarter-circular moments are not rational; the exact engine only exposes the "
            "even ones (they equal the semicircular moments)");
    return semicircular_moments(n)[n - 1];
}

bool free_re_im_condition(const NCSeries& rp) {
    if (rp.nvars() != 1) throw domain_error("free_re_im_condition: one-variable series");
    const NCSeries g = absorb(moeb_series(1, rp.degree_cap()), rp);
    return g == sum_series(1, rp.degree_cap());
}

} // namespace ncfree
