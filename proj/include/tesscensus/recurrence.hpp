#ifndef TESSCENSUS_RECURRENCE_HPP
#define TESSCENSUS_RECURRENCE_HPP

#include <cstddef>
#include <vector>

#include "tesscensus/polyarith.hpp"

namespace tesscensus {

/**
 * Constant-coefficient linear recurrence read off a normalized P/Q.
 *
 * With Q = 1 + Q_1 z + ... + Q_d z^d, the terms satisfy
 * v(n) = c_1 v(n-1) + ... + c_d v(n-d) with c_i = -Q_i for every n > deg P.
 * The first max(deg P, d - 1) + 1 terms come from series division and
 * carry the inhomogeneous contribution of P.
 */
struct LinRec {
    std::vector<BigInt> rec_coeffs;     // c_1..c_d
    std::vector<BigInt> initial_terms;  // v(0..max(deg P, d - 1))
    int numerator_degree = -1;

    std::size_t order() const noexcept { return rec_coeffs.size(); }
    /// First n produced by the recurrence rather than taken from initial_terms.
    std::size_t first_recurrent_index() const noexcept { return initial_terms.size(); }
};

LinRec rec_from_gf(const RationalGF& gf);

/// v(0..n_max). Linear in n_max times the order.
std::vector<BigInt> rec_eval(const LinRec& rec, std::size_t n_max);

/// F_0..F_m_max from F_0 = 0, F_1 = 1.
std::vector<BigInt> fibonacci_numbers(std::size_t m_max);

/**
 * Checks v(n) = k F_(2n) for n = 1..n_max, where k selects the symbol:
 * 5 for {4,5}, 4 for {6,4}, 7 for {3,7}. Throws std::invalid_argument
 * for any other multiplier.
 */
bool fibonacci_check(int multiplier, std::size_t n_max);

}  // namespace tesscensus

#endif  // TESSCENSUS_RECURRENCE_HPP
