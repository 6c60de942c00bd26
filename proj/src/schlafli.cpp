#include "tesscensus/schlafli.hpp"

#include <charconv>

#include "tesscensus/errors.hpp"

namespace tesscensus {

Schlafli::Schlafli(FaceDegree p, int q) : p_(p), q_(q) {
    if (const int* fp = std::get_if<int>(&p_); fp != nullptr && *fp < 3) {
        throw BadSymbol("face degree p must be >= 3 or inf, got " + std::to_string(*fp));
    }
    if (q_ < 3) throw BadSymbol("vertex degree q must be >= 3, got " + std::to_string(q_));
}

namespace {

int parse_int(std::string_view text, const char* what) {
    int value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw BadSymbol(std::string("cannot parse ") + what + " from '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

Schlafli Schlafli::parse(std::string_view p, std::string_view q) {
    const int qv = parse_int(q, "q");
    if (p == "inf") return infinite(qv);
    return finite(parse_int(p, "p"), qv);
}

std::optional<int> Schlafli::p() const noexcept {
    if (const int* fp = std::get_if<int>(&p_)) return *fp;
    return std::nullopt;
}

bool Schlafli::admissible() const noexcept {
    const auto fp = p();
    if (!fp) return true;
    return 2 * (*fp + q_) <= *fp * q_;
}

bool Schlafli::euclidean() const noexcept {
    const auto fp = p();
    return fp && 2 * (*fp + q_) == *fp * q_;
}

bool Schlafli::hyperbolic() const noexcept { return admissible() && !euclidean(); }

std::string Schlafli::p_string() const {
    const auto fp = p();
    return fp ? std::to_string(*fp) : std::string("inf");
}

std::string Schlafli::to_string() const { return "{" + p_string() + "," + std::to_string(q_) + "}"; }

}  // namespace tesscensus
