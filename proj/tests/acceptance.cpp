// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tesscensus/asymptotics.hpp"
#include "tesscensus/genfunc.hpp"
#include "tesscensus/oracle.hpp"
#include "tesscensus/recurrence.hpp"

using namespace tesscensus;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Verdict {
    bool pass = true;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            failures.push_back(what);
        }
    }
};

int failed_criteria = 0;

void report(int index, const char* title, const Verdict& v) {
    std::cout << (v.pass ? "PASS" : "FAIL") << " [" << index << "/8] " << title << '\n';
    for (const auto& f : v.failures) std::cout << "       - " << f << '\n';
    for (const auto& n : v.notes) std::cout << "       note: " << n << '\n';
    if (!v.pass) ++failed_criteria;
}

std::string str(const std::vector<BigInt>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i].get_str();
    return out + "]";
}

std::vector<BigInt> big(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

std::string fmt(double x, const char* format = "%.3g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, x);
    return buf;
}

// Admissible symbols with p in 3..8 and q in 3..8.
std::vector<Schlafli> oracle_grid() {
    std::vector<Schlafli> out;
    for (int p = 3; p <= 8; ++p) {
        for (int q = 3; q <= 8; ++q) {
            if (Schlafli::finite(p, q).admissible()) out.push_back(Schlafli::finite(p, q));
        }
    }
    return out;
}

// Admissible symbols with p in {3..12, inf} and q in 3..12.
std::vector<Schlafli> wide_grid() {
    std::vector<Schlafli> out;
    for (int q = 3; q <= 12; ++q) {
        for (int p = 3; p <= 12; ++p) {
            if (Schlafli::finite(p, q).admissible()) out.push_back(Schlafli::finite(p, q));
        }
        out.push_back(Schlafli::infinite(q));
    }
    return out;
}

void exact_generating_functions() {
    struct Item {
        Schlafli s;
        IntPoly num, den;
    };
    const Item items[] = {
        {Schlafli::finite(4, 5), {1, 2, 1}, {1, -3, 1}},
        {Schlafli::finite(6, 4), {1, 1, 1}, {1, -3, 1}},
        {Schlafli::finite(4, 4), {1, 2, 1}, {1, -2, 1}},
        {Schlafli::finite(6, 3), {1, 1, 1}, {1, -2, 1}},
        {Schlafli::finite(3, 6), {1, 4, 1}, {1, -2, -1}},
        {Schlafli::finite(3, 7), {1, 4, 1}, {1, -3, -1}},
    };
    Verdict v;
    double worst = 0;
    for (const Item& it : items) {
        const auto t0 = Clock::now();
        const CensusGF g = derive(it.s);
        const double ms = ms_since(t0);
        worst = std::max(worst, ms);
        v.require(g.v.num() == it.num && g.v.den() == it.den,
                  it.s.to_string() + ": derived V = " + g.v.to_string() + ", expected (" + it.num.to_string() + ")/(" +
                      it.den.to_string() + ")");
        v.require(ms < 1.0, it.s.to_string() + ": derive took " + fmt(ms) + " ms");
    }
    v.notes.push_back("slowest derive " + fmt(worst) + " ms");
    report(1, "exact generating functions", v);
}

void series_fixtures() {
    const std::pair<Schlafli, std::vector<BigInt>> items[] = {
        {Schlafli::finite(4, 5), big({1, 5, 15, 40, 105})}, {Schlafli::finite(6, 4), big({1, 4, 12, 32, 84})},
        {Schlafli::finite(3, 7), big({1, 7, 21, 56, 147})}, {Schlafli::finite(4, 4), big({1, 4, 8, 12, 16})},
        {Schlafli::finite(6, 3), big({1, 3, 6, 9, 12})},    {Schlafli::finite(3, 6), big({1, 6, 12, 18, 24})},
    };
    Verdict v;
    for (const auto& [s, want] : items) {
        const auto got = series_coeffs(derive(s).v, 4);
        v.require(got == want, s.to_string() + ": got " + str(got) + ", expected " + str(want));
    }
    report(2, "series fixtures", v);
}

void closed_forms() {
    Verdict v;
    const std::pair<Schlafli, long> linear[] = {
        {Schlafli::finite(4, 4), 4}, {Schlafli::finite(6, 3), 3}, {Schlafli::finite(3, 6), 6}};
    for (const auto& [s, k] : linear) {
        const auto vs = rec_eval(rec_from_gf(derive(s).v), 100);
        for (long n = 1; n <= 100; ++n) {
            v.require(vs[static_cast<std::size_t>(n)] == k * n, s.to_string() + ": v(" + std::to_string(n) + ")");
        }
    }

    // Fibonacci numbers from the defining recurrence, independent of the library.
    std::vector<BigInt> fib{0, 1};
    while (fib.size() <= 101) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
    const std::pair<Schlafli, long> fibonacci[] = {
        {Schlafli::finite(4, 5), 5}, {Schlafli::finite(6, 4), 4}, {Schlafli::finite(3, 7), 7}};
    for (const auto& [s, k] : fibonacci) {
        const auto vs = rec_eval(rec_from_gf(derive(s).v), 50);
        for (std::size_t n = 1; n <= 50; ++n) {
            v.require(vs[n] == k * fib[2 * n], s.to_string() + ": v(" + std::to_string(n) + ") = " + vs[n].get_str());
        }
    }

    for (int q : {3, 4, 5}) {
        const auto vs = rec_eval(rec_from_gf(derive(Schlafli::infinite(q)).v), 30);
        BigInt expect = q;
        for (std::size_t n = 1; n <= 30; ++n) {
            v.require(vs[n] == expect, "{inf," + std::to_string(q) + "}: v(" + std::to_string(n) + ")");
            expect *= q - 1;
        }
    }
    report(3, "closed forms", v);
}

void type_identity() {
    Verdict v;
    const auto t0 = Clock::now();
    const auto grid = wide_grid();
    const RationalGF one = gf_normalize({1}, {1});
    for (const Schlafli& s : grid) {
        const CensusGF g = derive(s);
        v.require(gf_add(gf_add(gf_add(one, g.a), g.b), g.c) == g.v, s.to_string() + ": 1+A+B+C != V");
    }
    const double ms = ms_since(t0);
    v.require(ms < 1000.0, "took " + fmt(ms) + " ms");
    v.notes.push_back(std::to_string(grid.size()) + " symbols in " + fmt(ms) + " ms");
    report(4, "V = 1 + A + B + C", v);
}

struct OracleRun {
    Schlafli symbol;
    PlanarMap map;
    CensusReport report;
    bool classified = false;
    std::string violation;
};

// First disagreement between the counted and the derived census, or "".
std::string compare(const CensusGF& g, const CensusReport& r) {
    const auto d = static_cast<std::size_t>(r.trusted_depth);
    const std::pair<const char*, std::pair<const RationalGF*, const std::vector<std::int64_t>*>> series[] = {
        {"v", {&g.v, &r.v}}, {"a", {&g.a, &r.a}}, {"b", {&g.b, &r.b}}, {"c", {&g.c, &r.c}}};
    for (const auto& [name, pair] : series) {
        const auto expect = series_coeffs(*pair.first, d);
        for (std::size_t n = 0; n <= d; ++n) {
            if (expect[n] != BigInt(static_cast<long>((*pair.second)[n]))) {
                return std::string(name) + "(" + std::to_string(n) + "): map " + std::to_string((*pair.second)[n]) +
                       ", series " + expect[n].get_str();
            }
        }
    }
    return {};
}

std::vector<OracleRun> oracle_equivalence() {
    constexpr std::size_t kBudget = 200000;
    constexpr int kDepth = 5;
    Verdict v;
    std::vector<OracleRun> runs;
    std::vector<Schlafli> shallow;
    std::ostringstream depths;
    const auto t0 = Clock::now();
    for (const Schlafli& s : oracle_grid()) {
        PlanarMap map = build_map(s, 0, kBudget, true);
        CensusReport census = bfs_census(map);
        OracleRun run{s, std::move(map), std::move(census), false, {}};
        try {
            run.report = classify(run.map, run.report);
            run.classified = true;
        } catch (const StructureViolation& e) {
            run.violation = e.what();
        }
        const int d = run.report.trusted_depth;
        depths << ' ' << s.to_string() << ':' << d;
        if (d < kDepth) {
            shallow.push_back(s);
            v.require(false, s.to_string() + ": trusted_depth " + std::to_string(d) + " < " + std::to_string(kDepth) +
                                 " within " + std::to_string(kBudget) + " vertices");
        }
        if (run.classified) {
            const std::string diff = compare(derive(s), run.report);
            v.require(diff.empty(), s.to_string() + ": " + diff);
        } else {
            v.require(false, s.to_string() + ": " + run.violation);
        }
        v.require(run.map.consistency_violations().empty(), s.to_string() + ": inconsistent map");
        runs.push_back(std::move(run));
    }
    const double seconds = ms_since(t0) / 1000.0;
    v.require(seconds <= 60.0, "took " + fmt(seconds) + " s");
    v.notes.push_back(std::to_string(runs.size()) + " symbols in " + fmt(seconds) + " s; trusted depths" + depths.str());

    // Informational: the shallow symbols again with room to reach the required depth.
    for (const Schlafli& s : shallow) {
        constexpr std::size_t kLarge = 1000000;
        try {
            const PlanarMap map = build_map(s, kDepth, kLarge);
            const CensusReport r = classify(map, bfs_census(map));
            const std::string diff = compare(derive(s), r);
            v.notes.push_back(s.to_string() + " with budget " + std::to_string(kLarge) + ": " +
                              std::to_string(map.vertex_count()) + " vertices, trusted_depth " +
                              std::to_string(r.trusted_depth) + ", " + (diff.empty() ? "exact match" : diff));
        } catch (const Error& e) {
            v.notes.push_back(s.to_string() + " with budget " + std::to_string(kLarge) + ": " + e.what());
        }
    }
    report(5, "oracle equivalence", v);
    return runs;
}

void structural_claims(const std::vector<OracleRun>& runs) {
    Verdict v;
    for (const OracleRun& run : runs) {
        v.require(run.classified, run.symbol.to_string() + ": " + run.violation);
    }
    for (int q = 3; q <= 10; ++q) {
        const IntPoly d6 = derive(Schlafli::finite(6, q)).v.den();
        const IntPoly d4 = derive(Schlafli::finite(4, q + 1)).v.den();
        v.require(d6 == d4, "{6," + std::to_string(q) + "} denominator " + d6.to_string() + " vs {4," +
                                std::to_string(q + 1) + "} " + d4.to_string());
    }
    report(6, "type classification and shared denominators", v);
}

void asymptotics() {
    Verdict v;
    double worst_amp = 0, worst_ratio = 0;
    int count = 0;
    for (const Schlafli& s : oracle_grid()) {
        if (!s.hyperbolic()) continue;
        ++count;
        const CensusGF g = derive(s);
        const GrowthInfo info = growth(g.v, s);
        if (!info.z0_enclosure || !info.amplitude) {
            v.require(false, s.to_string() + ": no certified root");
            continue;
        }
        v.require(info.z0_enclosure->width() <= 1e-12, s.to_string() + ": enclosure width " + fmt(info.z0_enclosure->width()));
        const BigRational mid = (info.z0_enclosure->lo + info.z0_enclosure->hi) / 2;
        const auto vs = rec_eval(rec_from_gf(g.v), 80);
        BigRational scaled(vs[80]);
        for (int i = 0; i < 80; ++i) scaled *= mid;
        const double amp_err = std::abs(scaled.get_d() - *info.amplitude) / *info.amplitude;
        BigRational ratio(vs[60], vs[59]);
        ratio.canonicalize();
        const double ratio_err = std::abs(BigRational(ratio - 1 / mid).get_d());
        worst_amp = std::max(worst_amp, amp_err);
        worst_ratio = std::max(worst_ratio, ratio_err);
        v.require(amp_err <= 1e-6, s.to_string() + ": amplitude relative error " + fmt(amp_err));
        v.require(ratio_err <= 1e-9, s.to_string() + ": ratio error " + fmt(ratio_err));
    }
    const GrowthInfo g45 = growth(derive(Schlafli::finite(4, 5)).v, Schlafli::finite(4, 5));
    const double quadratic = (3.0 - std::sqrt(5.0)) / 2.0;
    const double z0_err = g45.z0 ? std::abs(*g45.z0 - quadratic) : 1.0;
    v.require(z0_err <= 1e-12, "{4,5}: z0 off the quadratic root by " + fmt(z0_err));
    v.notes.push_back(std::to_string(count) + " hyperbolic symbols; worst amplitude error " + fmt(worst_amp) +
                      ", worst ratio error " + fmt(worst_ratio) + ", {4,5} z0 error " + fmt(z0_err));
    report(7, "asymptotics", v);
}

IntPoly random_poly(std::mt19937_64& rng, int max_degree, long bound, bool unit_constant) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> coef(-bound, bound);
    std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coef(rng);
    if (unit_constant) c[0] = 1;
    return IntPoly(std::move(c));
}

void property_suite(const std::vector<OracleRun>& runs) {
    Verdict v;
    std::mt19937_64 rng(0x7e55);
    for (int trial = 0; trial < 500; ++trial) {
        const IntPoly common = random_poly(rng, 3, 5, true);
        const RationalGF g = gf_normalize(random_poly(rng, 6, 20, false) * common, random_poly(rng, 5, 20, true) * common);
        v.require(gf_normalize(g.num(), g.den()) == g, "normalize not idempotent on " + g.to_string());

        const IntPoly a = random_poly(rng, 10, 1000, false);
        IntPoly b = random_poly(rng, 6, 1000, false);
        if (b.is_zero()) b = IntPoly{1};
        v.require(poly_div_exact(a * b, b) == a, "division round trip failed for " + a.to_string());
    }

    for (const Schlafli& s : wide_grid()) {
        const CensusGF g = derive(s);
        for (const RationalGF* f : {&g.v, &g.a, &g.b, &g.c}) {
            v.require(rec_eval(rec_from_gf(*f), 200) == series_coeffs(*f, 200),
                      s.to_string() + ": recurrence disagrees with series for " + f->to_string());
        }
    }

    std::size_t faces = 0;
    for (const OracleRun& run : runs) {
        if (!run.classified) continue;
        const AuditReport audit = audit_faces(run.map, run.report);
        faces += audit.items_checked;
        v.require(audit.ok(), run.symbol.to_string() + ": " + (audit.ok() ? "" : audit.violations.front()));
    }
    v.notes.push_back("500 random trials; " + std::to_string(faces) + " faces audited");
    report(8, "property suite", v);
}

}  // namespace

int main() {
    const auto t0 = Clock::now();
    exact_generating_functions();
    series_fixtures();
    closed_forms();
    type_identity();
    const auto runs = oracle_equivalence();
    structural_claims(runs);
    asymptotics();
    property_suite(runs);
    std::cout << (failed_criteria == 0 ? "ALL PASS" : std::to_string(failed_criteria) + " of 8 FAILED") << " in "
              << fmt(ms_since(t0) / 1000.0) << " s\n";
    return failed_criteria == 0 ? 0 : 1;
}
