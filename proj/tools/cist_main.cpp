// Command-line driver: condition checking, constructive extraction of two
// completely independent spanning trees with a JSON certificate, tree
// verification, exhaustive partition search, and corpus generation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cist/certificate.hpp"
#include "cist/generators.hpp"
#include "cist/oracle.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cist::InvalidInput("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw cist::InvalidInput("cannot write " + path);
    out << data;
}

cist::ParseResult load_graph(const std::string& path) {
    return cist::parse_edge_list(read_file(path));
}

std::string inf_or(const std::optional<int>& v) {
    return v ? std::to_string(*v) : "inf";
}

void print_report(const cist::ConditionReport& r, std::ostream& os) {
    os << "n        = " << r.n << "\n"
       << "edges    = " << r.edges << "\n"
       << "delta    = " << r.delta << "\n"
       << "connected= " << (r.connected ? "yes" : "no") << "\n"
       << "kappa    = " << r.kappa << "\n"
       << "sigma2   = " << inf_or(r.sigma2) << "\n"
       << "mu2      = " << inf_or(r.mu2) << "\n"
       << "fan_ok   = " << (r.fan_ok ? "yes" : "no") << "\n";
}

int cmd_check(const std::string& path, bool as_json) {
    auto parsed = load_graph(path);
    auto report = cist::condition_report(parsed.graph);
    if (as_json)
        std::cout << cist::report_json(report).dump(2) << "\n";
    else
        print_report(report, std::cout);
    return report.fan_ok ? 0 : 1;
}

int cmd_construct(const std::string& path, const std::string& out_path) {
    auto parsed = load_graph(path);
    cist::Certificate cert;
    try {
        cert = cist::make_certificate(parsed.graph);
    } catch (const cist::PreconditionFailed& e) {
        std::cerr << "not applicable: " << e.conjunct
                  << (e.conjunct == "mu2 >= n" ? " (mu2 < n)" : "") << "\n";
        return 1;
    }
    std::string body = cist::certificate_json(cert, cist::LabelMap(parsed.labels)).dump(2) + "\n";
    if (out_path.empty())
        std::cout << body;
    else
        write_file(out_path, body);
    if (!cert.all_ok()) {
        std::cerr << "verdicts not all true\n";
        return 3;
    }
    return 0;
}

int cmd_verify(const std::string& path, const std::string& t1_path, const std::string& t2_path) {
    auto parsed = load_graph(path);
    auto read_tree = [&](const std::string& p) {
        auto text = read_file(p);
        cist::EdgeSet es;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            std::istringstream ls(line);
            long long a, b;
            if (!(ls >> a)) continue;
            if (!(ls >> b))
                throw cist::ParseError(cist::ParseError::Kind::Syntax, p + ": expected \"u v\"");
            auto ia = parsed.id_of(a), ib = parsed.id_of(b);
            if (!ia || !ib)
                throw cist::NotASpanningTree(p + ": vertex label not in the graph");
            es.push_back(cist::make_edge(*ia, *ib));
        }
        std::sort(es.begin(), es.end());
        return es;
    };

    cist::TreePair tp;
    cist::Verdict d, l;
    try {
        tp.t1 = read_tree(t1_path);
        tp.t2 = read_tree(t2_path);
        d = cist::verify_cists_definitional(parsed.graph, tp);
        l = cist::verify_cists_leafrule(parsed.graph, tp);
    } catch (const cist::NotASpanningTree& e) {
        std::cerr << "NotASpanningTree: " << e.what() << "\n";
        return 1;
    }

    auto label = cist::LabelMap(parsed.labels);
    auto describe = [&](const char* name, const cist::Verdict& v) {
        std::cout << name << ": " << (v.ok ? "ok" : v.reason);
        if (!v.ok) {
            if (v.pair) std::cout << " pair=(" << label(v.pair->first) << "," << label(v.pair->second) << ")";
            if (v.edge) std::cout << " edge=(" << label(v.edge->first) << "," << label(v.edge->second) << ")";
            if (v.vertex) std::cout << " vertex=" << label(*v.vertex);
        }
        std::cout << "\n";
    };
    describe("definitional", d);
    describe("leafrule", l);
    if (d.ok != l.ok) {
        std::cerr << "verifiers disagree\n";
        return 1;
    }
    return d.ok && l.ok ? 0 : 1;
}

int cmd_oracle(const std::string& path, int jobs) {
    auto parsed = load_graph(path);
    cist::OracleResult res;
    try {
        res = cist::oracle_2cist_partition(parsed.graph, jobs);
    } catch (const cist::TooLarge& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    auto label = cist::LabelMap(parsed.labels);
    std::cout << "found   = " << (res.found ? "yes" : "no") << "\n"
              << "checked = " << res.partitions_checked << "\n";
    if (res.found) {
        std::cout << "v1      =";
        for (int v : res.partition.v1) std::cout << ' ' << label(v);
        std::cout << "\nv2      =";
        for (int v : res.partition.v2) std::cout << ' ' << label(v);
        std::cout << "\n";
    }
    return res.found ? 0 : 1;
}

int cmd_gen(const std::string& family, const std::vector<std::string>& params,
            std::uint64_t seed, const std::string& out_path) {
    cist::Graph g;
    if (family == "case_fixture") {
        if (params.size() != 1)
            throw cist::InvalidInput("case_fixture expects one label parameter");
        auto fixture = cist::case_fixture(params[0]);
        if (!fixture) {
            std::cerr << "unavailable: no known input drives branch " << params[0] << "\n";
            return 1;
        }
        g = *fixture;
    } else {
        cist::GenSpec spec;
        spec.family = family;
        spec.seed = seed;
        for (const auto& p : params) {
            std::size_t pos = 0;
            long long value = 0;
            try {
                value = std::stoll(p, &pos);
            } catch (...) {
                pos = 0;
            }
            if (pos != p.size() || p.empty())
                throw cist::InvalidInput("bad numeric parameter: " + p);
            spec.params.push_back(value);
        }
        g = cist::gen_from_spec(spec);
    }
    std::string text = cist::write_edge_list(g);
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    print_report(cist::condition_report(g), out_path.empty() ? std::cerr : std::cout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two completely independent spanning trees under the distance-2 degree-sum condition"};
    app.require_subcommand(1);

    std::string path, out_path, t1_path, t2_path, family;
    std::vector<std::string> params;
    std::uint64_t seed = 0;
    int jobs = 1;
    bool as_json = false;

    auto* check = app.add_subcommand("check", "report degree-condition parameters");
    check->add_option("path", path)->required();
    check->add_flag("--json", as_json, "emit the report as JSON");

    auto* construct = app.add_subcommand("construct", "build and certify two spanning trees");
    construct->add_option("path", path)->required();
    construct->add_option("--out", out_path, "write the certificate JSON here");

    auto* verify = app.add_subcommand("verify", "check a tree pair against both verifiers");
    verify->add_option("path", path)->required();
    verify->add_option("--t1", t1_path)->required();
    verify->add_option("--t2", t2_path)->required();

    auto* oracle = app.add_subcommand("oracle", "exhaustive 2-CIST-partition search");
    oracle->add_option("path", path)->required();
    oracle->add_option("--jobs", jobs, "worker threads (result is order-independent)");

    auto* gen = app.add_subcommand("gen", "write a generated graph as an edge list");
    gen->add_option("family", family)->required();
    gen->add_option("params", params, "family parameters");
    gen->add_option("--seed", seed);
    gen->add_option("--out", out_path, "output file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(path, as_json);
        if (construct->parsed()) return cmd_construct(path, out_path);
        if (verify->parsed()) return cmd_verify(path, t1_path, t2_path);
        if (oracle->parsed()) return cmd_oracle(path, jobs);
        if (gen->parsed()) return cmd_gen(family, params, seed, out_path);
    } catch (const cist::InternalInvariantViolation& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const cist::PreconditionFailed& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const cist::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
