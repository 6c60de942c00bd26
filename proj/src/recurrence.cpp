#include "tesscensus/recurrence.hpp"

#include <algorithm>
#include <stdexcept>

#include "tesscensus/genfunc.hpp"

namespace tesscensus {

LinRec rec_from_gf(const RationalGF& gf) {
    LinRec rec;
    const auto dc = gf.den().coeffs();
    const std::size_t d = dc.size() - 1;
    rec.rec_coeffs.reserve(d);
    for (std::size_t i = 1; i <= d; ++i) rec.rec_coeffs.push_back(-dc[i]);
    rec.numerator_degree = gf.num().degree();

    const int last_initial = std::max(rec.numerator_degree, static_cast<int>(d) - 1);
    if (last_initial >= 0) rec.initial_terms = series_coeffs(gf, static_cast<std::size_t>(last_initial));
    return rec;
}

std::vector<BigInt> rec_eval(const LinRec& rec, std::size_t n_max) {
    std::vector<BigInt> out(n_max + 1);
    const std::size_t seeded = std::min(rec.initial_terms.size(), n_max + 1);
    std::copy_n(rec.initial_terms.begin(), seeded, out.begin());

    const std::size_t d = rec.order();
    for (std::size_t n = seeded; n <= n_max; ++n) {
        BigInt acc = 0;
        const std::size_t upper = std::min(d, n);
        for (std::size_t i = 1; i <= upper; ++i) acc += rec.rec_coeffs[i - 1] * out[n - i];
        out[n] = std::move(acc);
    }
    return out;
}

std::vector<BigInt> fibonacci_numbers(std::size_t m_max) {
    std::vector<BigInt> f(m_max + 1);
    if (m_max >= 1) f[1] = 1;
    for (std::size_t m = 2; m <= m_max; ++m) f[m] = f[m - 1] + f[m - 2];
    return f;
}

bool fibonacci_check(int multiplier, std::size_t n_max) {
    Schlafli symbol = [multiplier] {
        switch (multiplier) {
            case 5: return Schlafli::finite(4, 5);
            case 4: return Schlafli::finite(6, 4);
            case 7: return Schlafli::finite(3, 7);
            default:
                throw std::invalid_argument("fibonacci_check: multiplier must be 5, 4 or 7");
        }
    }();
    const auto v = rec_eval(rec_from_gf(derive(symbol).v), n_max);
    const auto fib = fibonacci_numbers(2 * n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        if (v[n] != multiplier * fib[2 * n]) return false;
    }
    return true;
}

}  // namespace tesscensus
