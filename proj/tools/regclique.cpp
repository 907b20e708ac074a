// Command-line front end: certify properties of graph6 inputs, build the
// copy-expansion of an antipodal distance-regular base, and run the
// built-in audit. JSON reports use the report_v1 schema; --text switches to
// one human-readable line per finding.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "regclique/regclique.hpp"

namespace {

using namespace regclique;

long long default_budget() {
    if (const char* env = std::getenv("REGCLIQUE_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultSpreadBudget;
}

std::vector<std::string> read_graph_lines(const std::vector<std::string>& files) {
    std::vector<std::string> lines;
    auto consume = [&lines](std::istream& in) {
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            lines.push_back(line);
        }
    };
    if (files.empty()) {
        consume(std::cin);
    } else {
        for (const auto& path : files) {
            std::ifstream in(path);
            if (!in) throw std::runtime_error("cannot open " + path);
            consume(in);
        }
    }
    return lines;
}

struct CertifySelection {
    bool srg = false, drg = false, antipodal = false, cliques = false, spread = false;

    bool restricted() const { return srg || drg || antipodal || cliques || spread; }
    bool want(bool flag) const { return restricted() ? flag : true; }
};

nlohmann::json certify_graph(const Graph& g, const CertifySelection& sel,
                             std::optional<int> e_filter, long long budget) {
    nlohmann::json props = nlohmann::json::array();

    if (!sel.restricted()) {
        auto reg = regular_degree(g);
        props.push_back(property_json("regular", reg.holds(),
                                      reg ? std::vector<long long>{*reg.cert}
                                          : std::vector<long long>{},
                                      reg.witness));
        auto er = edge_regular_params(g);
        props.push_back(property_json("edge_regular", er.holds(),
                                      er ? std::vector<long long>{er->v, er->k, er->lambda}
                                         : std::vector<long long>{},
                                      er.witness));
    }
    if (sel.want(sel.srg)) {
        auto sr = strongly_regular_params(g);
        props.push_back(
            property_json("strongly_regular", sr.holds(),
                          sr ? std::vector<long long>{sr->v, sr->k, sr->lambda, sr->mu}
                             : std::vector<long long>{},
                          sr.witness));
    }
    if (sel.want(sel.drg)) {
        auto ia = intersection_array(g);
        std::vector<long long> params;
        if (ia) {
            params.push_back(ia->diameter);
            for (int b : ia->b) params.push_back(b);
            for (int c : ia->c) params.push_back(c);
        }
        props.push_back(property_json("distance_regular", ia.holds(), params, ia.witness));
    }
    if (sel.want(sel.antipodal)) {
        try {
            auto ac = antipodal_classes(g);
            props.push_back(property_json("antipodal", ac.holds(),
                                          ac ? std::vector<long long>{ac->a}
                                             : std::vector<long long>{},
                                          ac.witness));
        } catch (const std::invalid_argument& err) {
            props.push_back(property_json("antipodal", false, {}, {}, err.what()));
        }
    }
    if (!sel.restricted()) {
        props.push_back(property_json("taylor", is_taylor(g), {}, {}));
    }

    nlohmann::json out{{"schema", "report_v1"},
                       {"input", emit_graph6(g)},
                       {"order", g.order()},
                       {"properties", props}};

    if (sel.want(sel.cliques)) {
        auto found = regular_cliques(g, e_filter);
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& rc : found) arr.push_back(clique_json(rc.vertices, rc.nexus));
        out["regular_cliques"] = arr;
    }
    if (sel.spread) {
        out["spread"] = spread_json(find_spread(g, true, e_filter, budget));
    }
    return out;
}

void print_certify_text(const nlohmann::json& report, std::ostream& os) {
    os << report["input"].get<std::string>() << "\n";
    for (const auto& p : report["properties"]) {
        os << "  " << p["property"].get<std::string>() << ": "
           << (p["holds"].get<bool>() ? "yes" : "no");
        if (!p["params"].empty()) os << "  params=" << p["params"].dump();
        if (!p["witness"].empty()) os << "  witness=" << p["witness"].dump();
        if (p.contains("note")) os << "  (" << p["note"].get<std::string>() << ")";
        os << "\n";
    }
    if (report.contains("regular_cliques"))
        os << "  regular cliques: " << report["regular_cliques"].dump() << "\n";
    if (report.contains("spread")) os << "  spread: " << report["spread"].dump() << "\n";
}

void print_report_text(const AuditReport& report, std::ostream& os) {
    for (const auto& c : report.claims)
        os << (c.holds ? "PASS" : "FAIL") << "  " << c.id << "  " << c.statement << "\n";
    os << (report.all_hold() ? "all claims hold" : "some claims FAILED") << "\n";
}

Graph resolve_base(const std::string& name) {
    if (name == "icosahedron") return icosahedron();
    if (name.rfind("grid:", 0) == 0) return grid(std::stoi(name.substr(5)));
    if (name.rfind("complete:", 0) == 0) return complete_graph(std::stoi(name.substr(9)));
    std::ifstream in(name);
    if (!in) throw std::runtime_error("cannot open " + name);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) return parse_graph6(line);
    }
    throw std::runtime_error("no graph6 line in " + name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge-regular graph certification and construction"};
    app.require_subcommand(1);

    // certify
    auto* certify = app.add_subcommand("certify", "certify regularity properties of graph6 input");
    std::vector<std::string> files;
    CertifySelection sel;
    std::optional<int> e_filter;
    long long budget = default_budget();
    bool text = false;
    certify->add_option("files", files, "graph6 files (stdin when absent)");
    certify->add_flag("--srg", sel.srg, "strong regularity only");
    certify->add_flag("--drg", sel.drg, "distance regularity only");
    certify->add_flag("--antipodal", sel.antipodal, "antipodal classes only");
    certify->add_flag("--cliques", sel.cliques, "regular-clique scan only");
    certify->add_flag("--spread", sel.spread, "search a spread of regular cliques");
    certify->add_option("--e", e_filter, "restrict regular cliques to this nexus");
    certify->add_option("--budget", budget, "node budget for the spread search");
    certify->add_flag("--text", text, "human-readable output instead of JSON");
    certify->add_flag("--json", [](std::int64_t) {}, "JSON output (default)");

    // construct
    auto* construct =
        app.add_subcommand("construct", "build the copy-expansion of an antipodal base");
    std::string base_name;
    int copies = 0;
    std::string out_path;
    bool construct_text = false;
    construct->add_option("base", base_name, "graph6 file, or icosahedron | grid:q | complete:n")
        ->required();
    construct->add_option("t", copies, "number of copies")->required();
    construct->add_option("--out", out_path, "write the graph6 line here instead of stdout");
    construct->add_flag("--text", construct_text, "human-readable report");

    // paper-audit
    auto* audit = app.add_subcommand("paper-audit", "run the built-in claim audit");
    bool audit_text = false;
    audit->add_flag("--text", audit_text, "human-readable output instead of JSON");
    audit->add_flag("--json", [](std::int64_t) {}, "JSON output (default)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (certify->parsed()) {
            std::vector<std::string> lines;
            try {
                lines = read_graph_lines(files);
            } catch (const std::runtime_error& err) {
                std::cerr << err.what() << "\n";
                return 2;
            }
            for (const auto& line : lines) {
                Graph g = parse_graph6(line);
                nlohmann::json report = certify_graph(g, sel, e_filter, budget);
                if (text)
                    print_certify_text(report, std::cout);
                else
                    std::cout << report.dump() << "\n";
            }
            return 0;
        }

        if (construct->parsed()) {
            Graph base = resolve_base(base_name);
            auto plan = plan_ft(base, copies);
            if (!plan) {
                std::cerr << "construct: " << plan.error << "\n";
                return 1;
            }
            Graph f = build_ft(*plan);
            std::string g6 = emit_graph6(f);
            if (out_path.empty()) {
                std::cout << g6 << "\n";
            } else {
                std::ofstream out(out_path);
                if (!out) {
                    std::cerr << "cannot write " << out_path << "\n";
                    return 2;
                }
                out << g6 << "\n";
            }
            AuditReport report = verify_construction(*plan);
            if (construct_text) {
                print_report_text(report, std::cout);
            } else {
                nlohmann::json j = report_json(report);
                j["plan"] = plan_json(*plan);
                std::cout << j.dump(2) << "\n";
            }
            return report.all_hold() ? 0 : 1;
        }

        if (audit->parsed()) {
            AuditReport report = paper_audit();
            if (audit_text)
                print_report_text(report, std::cout);
            else
                std::cout << report_json(report).dump(2) << "\n";
            return report.all_hold() ? 0 : 1;
        }
    } catch (const Graph6ParseError& err) {
        std::cerr << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 0;
}
