#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "tesscensus/asymptotics.hpp"
#include "tesscensus/genfunc.hpp"
#include "tesscensus/oracle.hpp"
#include "tesscensus/recurrence.hpp"

namespace py = pybind11;
using namespace tesscensus;

namespace {

py::int_ to_py(const BigInt& x) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<BigInt>& xs) {
    py::list out;
    for (const BigInt& x : xs) out.append(to_py(x));
    return out;
}

py::list to_py(const std::vector<std::int64_t>& xs) {
    py::list out;
    for (std::int64_t x : xs) out.append(x);
    return out;
}

py::list to_py(const IntPoly& p) {
    py::list out;
    for (const BigInt& c : p.coeffs()) out.append(to_py(c));
    return out;
}

py::tuple to_py(const RationalGF& g) { return py::make_tuple(to_py(g.num()), to_py(g.den())); }

IntPoly from_py(const py::iterable& coeffs) {
    std::vector<BigInt> cs;
    for (const py::handle& c : coeffs) cs.emplace_back(py::str(c).cast<std::string>());
    return IntPoly(std::move(cs));
}

// p is an int or the string "inf".
Schlafli symbol(const py::object& p, int q) {
    if (py::isinstance<py::str>(p)) return Schlafli::parse(p.cast<std::string>(), std::to_string(q));
    return Schlafli::finite(p.cast<int>(), q);
}

py::object p_of(const Schlafli& s) {
    if (s.p()) return py::int_(*s.p());
    return py::str("inf");
}

py::dict derive_py(const py::object& p, int q) {
    const CensusGF g = derive(symbol(p, q));
    py::dict out;
    out["p"] = p_of(g.symbol);
    out["q"] = q;
    out["case_tag"] = std::string(to_string(g.case_tag));
    out["v"] = to_py(g.v);
    out["a"] = to_py(g.a);
    out["b"] = to_py(g.b);
    out["c"] = to_py(g.c);
    return out;
}

py::object census_py(const py::object& p, int q, std::size_t n_max, bool types) {
    const CensusGF g = derive(symbol(p, q));
    const auto v = to_py(rec_eval(rec_from_gf(g.v), n_max));
    if (!types) return std::move(v);
    py::dict out;
    out["v"] = v;
    out["a"] = to_py(rec_eval(rec_from_gf(g.a), n_max));
    out["b"] = to_py(rec_eval(rec_from_gf(g.b), n_max));
    out["c"] = to_py(rec_eval(rec_from_gf(g.c), n_max));
    return std::move(out);
}

py::dict verify_py(const py::object& p, int q, int depth, std::size_t budget) {
    const Schlafli s = symbol(p, q);
    const CensusGF g = derive(s);
    std::optional<CensusReport> report;
    std::size_t vertices = 0;
    {
        py::gil_scoped_release release;
        const PlanarMap map = s.has_finite_faces() ? build_map(s, depth, budget) : build_tree(s.q(), depth);
        vertices = map.vertex_count();
        report = classify(map, bfs_census(map));
    }
    const CensusReport& r = *report;
    const auto d = static_cast<std::size_t>(r.trusted_depth);
    bool match = true;
    const std::pair<const RationalGF*, const std::vector<std::int64_t>*> pairs[] = {
        {&g.v, &r.v}, {&g.a, &r.a}, {&g.b, &r.b}, {&g.c, &r.c}};
    for (const auto& [gf, counted] : pairs) {
        const auto expect = series_coeffs(*gf, d);
        for (std::size_t n = 0; n <= d; ++n) match = match && expect[n] == BigInt(static_cast<long>((*counted)[n]));
    }
    py::dict out;
    out["trusted_depth"] = r.trusted_depth;
    out["vertices"] = vertices;
    out["match"] = match;
    out["v"] = to_py(r.v);
    out["a"] = to_py(r.a);
    out["b"] = to_py(r.b);
    out["c"] = to_py(r.c);
    return out;
}

py::dict growth_py(const py::object& p, int q) {
    const Schlafli s = symbol(p, q);
    const GrowthInfo info = growth(derive(s).v, s);
    py::dict out;
    out["classification"] = std::string(to_string(info.classification));
    out["lambda"] = info.lambda;
    out["z0"] = info.z0 ? py::object(py::float_(*info.z0)) : py::object(py::none());
    out["amplitude"] = info.amplitude ? py::object(py::float_(*info.amplitude)) : py::object(py::none());
    if (info.z0_enclosure) {
        py::object fraction = py::module_::import("fractions").attr("Fraction");
        out["z0_interval"] = py::make_tuple(fraction(info.z0_enclosure->lo.get_str()),
                                            fraction(info.z0_enclosure->hi.get_str()));
    } else {
        out["z0_interval"] = py::none();
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact vertex census by generation for regular tessellations {p,q}";

    auto base = py::register_exception<Error>(m, "TessCensusError", PyExc_ValueError);
    py::register_exception<SphericalOutOfScope>(m, "SphericalOutOfScope", base);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base);
    py::register_exception<StructureViolation>(m, "StructureViolation", base);
    py::register_exception<BadSymbol>(m, "BadSymbol", base);

    m.def("derive", &derive_py, py::arg("p"), py::arg("q"),
          "Generating functions as (num, den) coefficient lists, lowest power first.");
    m.def("census", &census_py, py::arg("p"), py::arg("q"), py::arg("n_max") = 20, py::arg("types") = false,
          "v(0..n_max); with types=True a dict of the v, a, b, c series.");
    m.def("verify", &verify_py, py::arg("p"), py::arg("q"), py::arg("depth") = 6,
          py::arg("budget") = kDefaultVertexBudget,
          "Builds an explicit disk and compares its census with the series.");
    m.def("growth", &growth_py, py::arg("p"), py::arg("q"));
    m.def("palindrome_check", [](const py::iterable& coeffs) { return palindrome_check(from_py(coeffs)); },
          py::arg("coeffs"));
}
