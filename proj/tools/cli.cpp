#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>

#include "tesscensus/asymptotics.hpp"
#include "tesscensus/genfunc.hpp"
#include "tesscensus/oracle.hpp"
#include "tesscensus/recurrence.hpp"

namespace tesscensus::cli {
namespace {

using json = nlohmann::ordered_json;

enum class Format { Json, Csv, Plain };

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct Outcome {
    json record;
    Table table;
    int code = kOk;
};

std::string fmt_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json symbol_json(const Schlafli& s) {
    json out;
    if (s.p()) {
        out["p"] = *s.p();
    } else {
        out["p"] = "inf";
    }
    out["q"] = s.q();
    return out;
}

json poly_json(const IntPoly& poly) {
    json out = json::array();
    for (const BigInt& c : poly.coeffs()) out.push_back(c.get_str());
    return out;
}

json gf_json(const RationalGF& gf) { return {{"num", poly_json(gf.num())}, {"den", poly_json(gf.den())}}; }

json seq_json(const std::vector<BigInt>& xs) {
    json out = json::array();
    for (const BigInt& x : xs) out.push_back(x.get_str());
    return out;
}

json seq_json(const std::vector<std::int64_t>& xs) {
    json out = json::array();
    for (std::int64_t x : xs) out.push_back(std::to_string(x));
    return out;
}

json header_json(const char* command, const CensusGF& g) {
    json rec;
    rec["command"] = command;
    rec["symbol"] = symbol_json(g.symbol);
    rec["case_tag"] = std::string(to_string(g.case_tag));
    rec["gf"] = gf_json(g.v);
    return rec;
}

Outcome cmd_genfunc(const Schlafli& s) {
    const CensusGF g = derive(s);
    Outcome o{header_json("genfunc", g), {{"function", "part", "power", "coefficient"}, {}}};
    o.record["components"] = {{"a", gf_json(g.a)}, {"b", gf_json(g.b)}, {"c", gf_json(g.c)}};
    const std::pair<const char*, const RationalGF*> parts[] = {{"V", &g.v}, {"A", &g.a}, {"B", &g.b}, {"C", &g.c}};
    for (const auto& [name, gf] : parts) {
        for (const auto& [part, poly] : {std::pair{"num", &gf->num()}, std::pair{"den", &gf->den()}}) {
            const auto cs = poly->coeffs();
            for (std::size_t i = 0; i < cs.size(); ++i) {
                o.table.rows.push_back({name, part, std::to_string(i), cs[i].get_str()});
            }
        }
    }
    return o;
}

Outcome cmd_census(const Schlafli& s, std::size_t n_max, bool types) {
    const CensusGF g = derive(s);
    Outcome o{header_json("census", g), {{"n", "v"}, {}}};
    const auto v = rec_eval(rec_from_gf(g.v), n_max);
    o.record["series"] = {{"v", seq_json(v)}};
    std::vector<BigInt> a, b, c;
    if (types) {
        a = rec_eval(rec_from_gf(g.a), n_max);
        b = rec_eval(rec_from_gf(g.b), n_max);
        c = rec_eval(rec_from_gf(g.c), n_max);
        o.record["type_series"] = {{"a", seq_json(a)}, {"b", seq_json(b)}, {"c", seq_json(c)}};
        o.table.header.insert(o.table.header.end(), {"a", "b", "c"});
    }
    for (std::size_t n = 0; n <= n_max; ++n) {
        std::vector<std::string> row{std::to_string(n), v[n].get_str()};
        if (types) row.insert(row.end(), {a[n].get_str(), b[n].get_str(), c[n].get_str()});
        o.table.rows.push_back(std::move(row));
    }
    return o;
}

// Vertices of a tree disk with generations 0..depth saturated.
BigInt tree_size(int q, int depth) {
    BigInt total = 1, layer = q;
    for (int g = 1; g <= depth + 1; ++g) {
        total += layer;
        layer *= q - 1;
    }
    return total;
}

PlanarMap build_disk(const Schlafli& s, int depth, std::size_t budget) {
    if (s.has_finite_faces()) return build_map(s, depth, budget);
    if (tree_size(s.q(), depth) > budget) {
        int achieved = -1;
        while (tree_size(s.q(), achieved + 1) <= budget) ++achieved;
        throw BudgetExceeded(budget, achieved, depth);
    }
    return build_tree(s.q(), depth);
}

json audit_json(const AuditReport& a) {
    json out;
    out["checked"] = a.items_checked;
    out["violations"] = a.violations.size();
    if (!a.ok()) out["first_violation"] = a.violations.front();
    return out;
}

Outcome cmd_verify(const Schlafli& s, int depth, std::size_t budget, const std::string& dump_path) {
    const CensusGF g = derive(s);
    Outcome o{header_json("verify", g),
              {{"n", "v_map", "v_gf", "a_map", "a_gf", "b_map", "b_gf", "c_map", "c_gf"}, {}}};

    const PlanarMap map = build_disk(s, depth, budget);
    CensusReport report = bfs_census(map);
    json oracle;
    oracle["requested_depth"] = depth;
    oracle["budget"] = budget;
    oracle["vertices"] = map.vertex_count();
    oracle["trusted_depth"] = report.trusted_depth;

    std::optional<StructureViolation> violation;
    try {
        report = classify(map, report);
    } catch (const StructureViolation& e) {
        violation = e;
    }
    if (!dump_path.empty()) {
        std::ofstream file(dump_path);
        if (!file) throw std::runtime_error("cannot write " + dump_path);
        write_map_dump(file, map, report);
    }
    if (violation) {
        const VertexProfile& p = violation->profile();
        oracle["match"] = false;
        oracle["structure_violation"] = {{"vertex", violation->vertex()},
                                         {"generation", violation->generation()},
                                         {"parents", p.parents},
                                         {"children", p.children},
                                         {"fraternal", p.fraternal},
                                         {"consortial", p.consortial}};
        o.record["oracle"] = oracle;
        o.code = kStructureViolation;
        return o;
    }

    const auto d = static_cast<std::size_t>(report.trusted_depth);
    const std::pair<const char*, const RationalGF*> gfs[] = {{"v", &g.v}, {"a", &g.a}, {"b", &g.b}, {"c", &g.c}};
    const std::vector<std::int64_t>* counted[] = {&report.v, &report.a, &report.b, &report.c};
    std::vector<std::vector<BigInt>> expected;
    for (const auto& [name, gf] : gfs) expected.push_back(series_coeffs(*gf, d));

    json first_mismatch = nullptr;
    for (std::size_t n = 0; n <= d; ++n) {
        std::vector<std::string> row{std::to_string(n)};
        for (std::size_t k = 0; k < 4; ++k) {
            const std::int64_t got = (*counted[k])[n];
            row.push_back(std::to_string(got));
            row.push_back(expected[k][n].get_str());
            if (first_mismatch.is_null() && expected[k][n] != BigInt(static_cast<long>(got))) {
                first_mismatch = {{"n", n},
                                  {"series", gfs[k].first},
                                  {"map", std::to_string(got)},
                                  {"gf", expected[k][n].get_str()}};
            }
        }
        o.table.rows.push_back(std::move(row));
    }

    const AuditReport faces = audit_faces(map, report);
    const AuditReport filial = audit_filial_edges(map, report);
    oracle["match"] = first_mismatch.is_null();
    oracle["first_mismatch"] = first_mismatch;
    oracle["census"] = {{"v", seq_json(report.v)}, {"a", seq_json(report.a)},
                        {"b", seq_json(report.b)}, {"c", seq_json(report.c)}};
    oracle["audits"] = {{"faces", audit_json(faces)}, {"filial_edges", audit_json(filial)}};
    o.record["oracle"] = oracle;

    if (!first_mismatch.is_null()) {
        o.code = kMismatch;
    } else if (!faces.ok() || !filial.ok()) {
        o.code = kStructureViolation;
    }
    return o;
}

Outcome cmd_asym(const Schlafli& s) {
    const CensusGF g = derive(s);
    const GrowthInfo info = growth(g.v, s);
    const bool palindromic = palindrome_check(g.v.den());
    Outcome o{header_json("asym", g),
              {{"p", "q", "classification", "lambda", "z0", "z0_lo", "z0_hi", "amplitude", "palindromic_den"}, {}}};

    json block;
    block["classification"] = std::string(to_string(info.classification));
    block["lambda"] = info.lambda;
    block["z0"] = info.z0 ? json(*info.z0) : json(nullptr);
    if (info.z0_enclosure) {
        block["z0_interval"] = {{"lo", info.z0_enclosure->lo.get_str()}, {"hi", info.z0_enclosure->hi.get_str()}};
    } else {
        block["z0_interval"] = nullptr;
    }
    block["amplitude"] = info.amplitude ? json(*info.amplitude) : json(nullptr);
    block["palindromic_den"] = palindromic;
    o.record["growth"] = block;

    auto opt = [](const std::optional<double>& x) { return x ? fmt_double(*x) : std::string(); };
    o.table.rows.push_back({s.p_string(), std::to_string(s.q()), std::string(to_string(info.classification)),
                            fmt_double(info.lambda), opt(info.z0),
                            info.z0_enclosure ? info.z0_enclosure->lo.get_str() : "",
                            info.z0_enclosure ? info.z0_enclosure->hi.get_str() : "", opt(info.amplitude),
                            palindromic ? "true" : "false"});
    return o;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void write_csv(std::ostream& out, const Table& t) {
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
        out << '\n';
    };
    line(t.header);
    for (const auto& row : t.rows) line(row);
}

// One "path value" line per leaf.
void write_plain(std::ostream& out, const json& node, const std::string& path) {
    if (node.is_object()) {
        for (const auto& [key, child] : node.items()) write_plain(out, child, path.empty() ? key : path + "." + key);
    } else if (node.is_array()) {
        for (std::size_t i = 0; i < node.size(); ++i) write_plain(out, node[i], path + "[" + std::to_string(i) + "]");
    } else {
        out << path << ' ' << (node.is_string() ? node.get<std::string>() : node.dump()) << '\n';
    }
}

void emit(std::ostream& out, Format format, const Outcome& o) {
    switch (format) {
        case Format::Json: out << o.record.dump(2) << '\n'; break;
        case Format::Csv: write_csv(out, o.table); break;
        case Format::Plain: write_plain(out, o.record, ""); break;
    }
}

int emit_error(std::ostream& out, std::ostream& err, Format format, const std::string& command, const Error& e,
               int code) {
    json rec;
    rec["command"] = command;
    rec["error"] = {{"kind", e.kind()}, {"message", e.what()}};
    if (const auto* budget = dynamic_cast<const BudgetExceeded*>(&e)) {
        rec["error"]["achieved_depth"] = budget->achieved_depth();
    }
    if (format == Format::Json) {
        out << rec.dump(2) << '\n';
    } else {
        err << "tesscensus " << command << ": " << e.kind() << ": " << e.what() << '\n';
    }
    return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact vertex census by generation for regular tessellations {p,q}", "tesscensus"};
    app.require_subcommand(1);

    std::string p_text;
    int q = 0;
    Format format = Format::Json;
    std::size_t n_max = 20;
    bool types = false;
    int depth = 6;
    std::size_t budget = kDefaultVertexBudget;
    std::string dump_path;

    const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}, {"plain", Format::Plain}};
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("p", p_text, "Face degree: integer >= 3 or 'inf'")->required();
        sub->add_option("q", q, "Vertex degree, >= 3")->required();
        sub->add_option("--format", format, "Output format: json, csv or plain")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    };

    CLI::App* genfunc = app.add_subcommand("genfunc", "Generating functions V, A, B, C");
    add_common(genfunc);

    CLI::App* census = app.add_subcommand("census", "Series v(0..N) from the linear recurrence");
    add_common(census);
    census->add_option("N", n_max, "Last generation")->capture_default_str();
    census->add_flag("--types", types, "Also emit type-A/B/C series");

    CLI::App* verify = app.add_subcommand("verify", "Compare the series against an explicitly built disk");
    add_common(verify);
    verify->add_option("--depth", depth, "Saturated depth to build")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    verify->add_option("--budget", budget, "Vertex budget for the disk")
        ->envname("TESSCENSUS_BUDGET")
        ->capture_default_str();
    verify->add_option("--dump-map", dump_path, "Write the disk as an adjacency dump");

    CLI::App* asym = app.add_subcommand("asym", "Growth rate and amplitude");
    add_common(asym);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        const Schlafli s = Schlafli::parse(p_text, std::to_string(q));
        Outcome o;
        if (command == "genfunc") {
            o = cmd_genfunc(s);
        } else if (command == "census") {
            o = cmd_census(s, n_max, types);
        } else if (command == "verify") {
            o = cmd_verify(s, depth, budget, dump_path);
        } else {
            o = cmd_asym(s);
        }
        emit(out, format, o);
        return o.code;
    } catch (const SphericalOutOfScope& e) {
        return emit_error(out, err, format, command, e, kOutOfScope);
    } catch (const Error& e) {
        return emit_error(out, err, format, command, e, kUsage);
    } catch (const std::exception& e) {
        err << "tesscensus " << command << ": " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace tesscensus::cli
