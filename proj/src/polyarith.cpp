#include "tesscensus/polyarith.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tesscensus/errors.hpp"

namespace tesscensus {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::monomial(const BigInt& c, std::size_t power) {
    std::vector<BigInt> coeffs(power + 1);
    coeffs[power] = c;
    return IntPoly(std::move(coeffs));
}

void IntPoly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

const BigInt& IntPoly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

BigRational IntPoly::eval(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + BigRational(*it);
    }
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigInt> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(d));
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

std::string IntPoly::to_string(char var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& c = coeffs_[i];
        if (sgn(c) == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << '-';
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i >= 1) os << var;
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
    const auto ac = a.coeffs();
    const auto bc = b.coeffs();
    std::vector<BigInt> out(std::max(ac.size(), bc.size()));
    for (std::size_t i = 0; i < ac.size(); ++i) out[i] += ac[i];
    for (std::size_t i = 0; i < bc.size(); ++i) out[i] += bc[i];
    return IntPoly(std::move(out));
}

IntPoly poly_neg(const IntPoly& a) {
    std::vector<BigInt> out(a.coeffs().begin(), a.coeffs().end());
    for (auto& c : out) c = -c;
    return IntPoly(std::move(out));
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) { return poly_add(a, poly_neg(b)); }

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto ac = a.coeffs();
    const auto bc = b.coeffs();
    std::vector<BigInt> out(ac.size() + bc.size() - 1);
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (sgn(ac[i]) == 0) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) out[i + j] += ac[i] * bc[j];
    }
    return IntPoly(std::move(out));
}

IntPoly poly_scale(const IntPoly& a, const BigInt& c) {
    std::vector<BigInt> out(a.coeffs().begin(), a.coeffs().end());
    for (auto& x : out) x *= c;
    return IntPoly(std::move(out));
}

IntPoly poly_div_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("poly_div_exact: division by the zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) {
        throw NotDivisible("poly_div_exact: " + a.to_string() + " is not divisible by " + b.to_string());
    }
    std::vector<BigInt> rem(a.coeffs().begin(), a.coeffs().end());
    const auto bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    std::vector<BigInt> quot(rem.size() - db);
    for (std::size_t k = quot.size(); k-- > 0;) {
        BigInt& top = rem[k + db];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), bc[db].get_mpz_t())) {
            throw NotDivisible("poly_div_exact: " + a.to_string() + " is not divisible by " +
                               b.to_string() + " over the integers");
        }
        BigInt qk = top / bc[db];
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= qk * bc[j];
        quot[k] = std::move(qk);
    }
    for (const auto& r : rem) {
        if (sgn(r) != 0) {
            throw NotDivisible("poly_div_exact: " + a.to_string() + " is not divisible by " +
                               b.to_string());
        }
    }
    return IntPoly(std::move(quot));
}

IntPoly primitive_part(const IntPoly& a) {
    if (a.is_zero()) return {};
    BigInt c = a.content();
    if (sgn(a.leading()) < 0) c = -c;
    std::vector<BigInt> out(a.coeffs().begin(), a.coeffs().end());
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return IntPoly(std::move(out));
}

namespace {

// A nonzero scalar multiple of the remainder of a by b; b nonzero.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
    const BigInt& lb = b.leading();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const auto shift = static_cast<std::size_t>(a.degree() - b.degree());
        IntPoly scaled = poly_scale(a, lb);
        IntPoly sub = poly_mul(IntPoly::monomial(a.leading(), shift), b);
        a = poly_sub(scaled, sub);
        a = primitive_part(a);
    }
    return a;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    IntPoly x = primitive_part(a);
    IntPoly y = primitive_part(b);
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPoly r = pseudo_remainder(x, y);
        x = std::move(y);
        y = primitive_part(r);
    }
    return x;
}

std::string RationalGF::to_string(char var) const {
    if (den_ == IntPoly{1}) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RationalGF gf_normalize(const IntPoly& num, const IntPoly& den) {
    if (sgn(den.coeff(0)) == 0) {
        throw ZeroDenominatorConstant("gf_normalize: denominator " + den.to_string() +
                                      " vanishes at z = 0");
    }
    if (num.is_zero()) return RationalGF{};

    IntPoly n = num;
    IntPoly d = den;
    IntPoly g = poly_gcd(n, d);
    if (g.degree() > 0) {
        n = poly_div_exact(n, g);
        d = poly_div_exact(d, g);
    }

    BigInt c = gcd(n.content(), d.content());
    if (sgn(d.coeff(0)) < 0) c = -c;
    if (c != 1) {
        n = poly_div_exact(n, IntPoly({c}));
        d = poly_div_exact(d, IntPoly({c}));
    }
    if (d.coeff(0) != 1) {
        throw NotDivisible("gf_normalize: (" + n.to_string() + ")/(" + d.to_string() +
                           ") cannot be scaled to denominator constant term 1 over the integers");
    }
    return RationalGF(std::move(n), std::move(d));
}

RationalGF gf_add(const RationalGF& a, const RationalGF& b) {
    return gf_normalize(poly_add(poly_mul(a.num(), b.den()), poly_mul(b.num(), a.den())),
                        poly_mul(a.den(), b.den()));
}

std::vector<BigInt> series_coeffs(const IntPoly& num, const IntPoly& den, std::size_t n_max) {
    const BigInt d0 = den.coeff(0);
    if (sgn(d0) == 0) throw ZeroDenominatorConstant("series_coeffs: denominator vanishes at z = 0");
    const auto dc = den.coeffs();
    std::vector<BigInt> out(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        BigInt acc = num.coeff(n);
        const std::size_t upper = std::min(n, dc.size() - 1);
        for (std::size_t i = 1; i <= upper; ++i) acc -= dc[i] * out[n - i];
        if (d0 != 1) {
            if (!mpz_divisible_p(acc.get_mpz_t(), d0.get_mpz_t())) {
                throw NotDivisible("series_coeffs: coefficient " + std::to_string(n) +
                                   " is not an integer");
            }
            mpz_divexact(acc.get_mpz_t(), acc.get_mpz_t(), d0.get_mpz_t());
        }
        out[n] = std::move(acc);
    }
    return out;
}

std::vector<BigInt> series_coeffs(const RationalGF& gf, std::size_t n_max) {
    return series_coeffs(gf.num(), gf.den(), n_max);
}

}  // namespace tesscensus
