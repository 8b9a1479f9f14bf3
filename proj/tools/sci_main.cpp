#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "sci/dh.hpp"
#include "sci/formulas.hpp"
#include "sci/generators.hpp"
#include "sci/graph.hpp"
#include "sci/halin.hpp"
#include "sci/io.hpp"
#include "sci/oracle.hpp"
#include "sci/outerplanar.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitClass = 3;
constexpr int kExitViolation = 4;
constexpr int kExitBudget = 5;

using Clock = std::chrono::steady_clock;

long long micros_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0).count();
}

struct ComputeOutcome {
    std::string cls;
    std::string algo;
    int k = -1;
    sci::StrongColoring coloring;
};

// class dispatch; auto tries mop, cograph, dh, then halin (annotation needed)
ComputeOutcome compute_with_class(const sci::GraphFile& gf, const std::string& cls) {
    const sci::Graph& g = gf.graph;
    auto try_mop = [&]() -> std::optional<ComputeOutcome> {
        auto rec = sci::recognize_mop(g);
        if (!rec.dual) return std::nullopt;
        auto col = sci::greedy_strong_coloring(g, *rec.dual);
        return ComputeOutcome{"mop", "extended-triangle greedy", col.k, col};
    };
    auto try_cograph = [&]() -> std::optional<ComputeOutcome> {
        if (!sci::is_cograph(g)) return std::nullopt;
        auto r = sci::cograph_strong_index(g);
        return ComputeOutcome{"cograph", "cotree dp", r.k, r.coloring};
    };
    auto try_dh = [&]() -> std::optional<ComputeOutcome> {
        if (!g.connected() || g.n < 2) return std::nullopt;
        auto rec = sci::recognize_dh(g);
        if (!rec.sequence) return std::nullopt;
        auto r = sci::dh_strong_index(g);
        return ComputeOutcome{"dh", "twinset dp", r.k, r.coloring};
    };
    auto try_halin = [&]() -> std::optional<ComputeOutcome> {
        if (!gf.halin) return std::nullopt;
        if (sci::validate_halin(g, *gf.halin)) return std::nullopt;
        bool cubic = true;
        for (int v = 0; v < g.n; ++v) cubic = cubic && g.degree(v) == 3;
        if (cubic) {
            auto r = sci::cubic_halin_index(g, *gf.halin);
            return ComputeOutcome{"cubic-halin", "boundary-table dp", r.k, r.coloring};
        }
        auto r = sci::halin_index(g, *gf.halin);
        return ComputeOutcome{"halin", "type-signature dp", r.k, r.coloring};
    };
    if (cls == "mop") {
        if (auto r = try_mop()) return *r;
        throw sci::GraphError("input is not a maximal outerplanar graph");
    }
    if (cls == "cograph") {
        if (auto r = try_cograph()) return *r;
        throw sci::GraphError("input is not a cograph");
    }
    if (cls == "dh") {
        if (auto r = try_dh()) return *r;
        throw sci::GraphError("input is not distance hereditary");
    }
    if (cls == "halin" || cls == "cubic-halin") {
        if (!gf.halin) throw sci::GraphError("halin computation needs a #halin annotation");
        if (auto err = sci::validate_halin(g, *gf.halin))
            throw sci::GraphError("invalid halin annotation: " + *err);
        if (cls == "cubic-halin") {
            auto r = sci::cubic_halin_index(g, *gf.halin);
            return ComputeOutcome{"cubic-halin", "boundary-table dp", r.k, r.coloring};
        }
        auto r = sci::halin_index(g, *gf.halin);
        return ComputeOutcome{"halin", "type-signature dp", r.k, r.coloring};
    }
    // auto
    if (auto r = try_mop()) return *r;
    if (auto r = try_cograph()) return *r;
    if (auto r = try_dh()) return *r;
    if (auto r = try_halin()) return *r;
    throw sci::GraphError("no supported graph class matched");
}

int cmd_compute(const std::string& path, const std::string& cls, const std::string& emit_coloring,
                const std::string& emit_dot) {
    sci::GraphFile gf;
    try {
        gf = sci::read_graph_file(path);
    } catch (const sci::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    auto t0 = Clock::now();
    ComputeOutcome out;
    try {
        out = compute_with_class(gf, cls);
    } catch (const sci::GraphError& e) {
        std::cerr << "class error: " << e.what() << "\n";
        return kExitClass;
    }
    long long us = micros_since(t0);
    if (auto v = sci::verify_strong_coloring(gf.graph, out.coloring)) {
        std::cerr << "internal error: certificate fails verification on edges " << v->e << ","
                  << v->f << "\n";
        return kExitViolation;
    }
    std::string cert = "-";
    if (!emit_coloring.empty()) {
        sci::write_coloring_file(emit_coloring, out.coloring);
        cert = emit_coloring;
    }
    if (!emit_dot.empty()) sci::write_dot_file(emit_dot, gf.graph, &out.coloring);
    std::cout << "input: " << path << "\n"
              << "class: " << out.cls << "\n"
              << "k: " << out.k << "\n"
              << "algo: " << out.algo << "\n"
              << "micros: " << us << "\n"
              << "certificate: " << cert << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path) {
    sci::GraphFile gf;
    sci::StrongColoring col;
    try {
        gf = sci::read_graph_file(graph_path);
        col = sci::read_coloring_file(coloring_path, gf.graph.m());
    } catch (const sci::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    try {
        if (auto v = sci::verify_strong_coloring(gf.graph, col)) {
            auto [a, b] = gf.graph.edges[v->e];
            auto [c, d] = gf.graph.edges[v->f];
            std::cout << "violation: edges " << v->e << " (" << a << "," << b << ") and " << v->f
                      << " (" << c << "," << d << ") share color " << col.colors[v->e] << " ("
                      << (v->reason == sci::Violation::Reason::shared_endpoint ? "shared-endpoint"
                                                                               : "distance-one")
                      << ")\n";
            return kExitViolation;
        }
    } catch (const sci::GraphError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    std::cout << "ok\n";
    return kExitOk;
}

int cmd_oracle(const std::string& path, long long budget, int hint) {
    sci::GraphFile gf;
    try {
        gf = sci::read_graph_file(path);
    } catch (const sci::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    auto t0 = Clock::now();
    try {
        std::optional<int> h;
        if (hint > 0) h = hint;
        auto r = sci::exact_strong_index(gf.graph, h, budget);
        std::cout << "k: " << r.k << "\nmicros: " << micros_since(t0) << "\n";
    } catch (const sci::BudgetError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kExitBudget;
    } catch (const sci::GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitClass;
    }
    return kExitOk;
}

int cmd_generate(const std::string& family, int n, int dx, int dy, int maxdeg,
                 std::uint64_t seed, const std::string& out_path) {
    auto fam = sci::family_from_name(family);
    if (!fam) {
        std::cerr << "unknown family: " << family << "\n";
        return kExitParse;
    }
    sci::GenSpec spec;
    spec.family = *fam;
    spec.n = n;
    spec.dx = dx;
    spec.dy = dy;
    spec.max_degree = maxdeg;
    spec.seed = seed;
    try {
        auto gen = sci::generate(spec);
        sci::GraphFile gf{gen.graph, gen.halin, gen.dh_sequence};
        if (out_path.empty() || out_path == "-")
            sci::write_graph_text(std::cout, gf);
        else
            sci::write_graph_file(out_path, gf);
    } catch (const sci::GraphError& e) {
        std::cerr << "generate error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}

int cmd_bench(const std::string& family, std::vector<int> sizes, std::vector<int> seeds,
              const std::string& csv_path) {
    auto fam = sci::family_from_name(family);
    if (!fam) {
        std::cerr << "unknown family: " << family << "\n";
        return kExitParse;
    }
    std::ofstream csv;
    if (!csv_path.empty()) {
        csv.open(csv_path);
        if (!csv) {
            std::cerr << "cannot open " << csv_path << "\n";
            return kExitParse;
        }
        csv << "family,n,m,seed,class,k,algo,micros\n";
    }
    std::cout << "family,n,median_micros\n";
    for (int n : sizes) {
        std::vector<long long> times;
        for (int seed : seeds) {
            sci::GenSpec spec;
            spec.family = *fam;
            spec.n = n;
            spec.seed = static_cast<std::uint64_t>(seed);
            if (*fam == sci::Family::dh) {
                // keep edge growth linear for large sizes
                spec.p_pendant = 0.5;
                spec.p_false = 0.25;
                spec.p_true = 0.25;
            }
            auto gen = sci::generate(spec);
            const sci::Graph& g = gen.graph;
            auto t0 = Clock::now();
            int k = -1;
            std::string cls = family, algo;
            switch (*fam) {
                case sci::Family::mop: {
                    auto rec = sci::recognize_mop(g);
                    if (!rec.dual) throw sci::GraphError("generated mop failed recognition");
                    k = sci::extended_triangle_phi(g, *rec.dual).first;
                    algo = "extended-triangle phi";
                    break;
                }
                case sci::Family::dh: {
                    k = sci::dh_strong_index_value(g);
                    algo = "twinset dp";
                    break;
                }
                case sci::Family::cograph: {
                    k = sci::cograph_strong_index_value(g);
                    algo = "cotree dp";
                    break;
                }
                case sci::Family::cycle:
                    k = sci::cycle_index(n);
                    algo = "closed form";
                    break;
                case sci::Family::wheel:
                    k = sci::wheel_index(n);
                    algo = "closed form";
                    break;
                case sci::Family::tree: {
                    k = sci::tree_index(g);
                    algo = "tree formula";
                    break;
                }
                case sci::Family::cubic_halin: {
                    auto r = sci::cubic_halin_index(g, *gen.halin);
                    k = r.k;
                    algo = "boundary-table dp";
                    break;
                }
                case sci::Family::halin:
                case sci::Family::double_wheel:
                case sci::Family::necklace: {
                    auto r = sci::halin_index(g, *gen.halin);
                    k = r.k;
                    algo = "type-signature dp";
                    break;
                }
            }
            long long us = micros_since(t0);
            times.push_back(us);
            if (csv.is_open())
                csv << family << "," << g.n << "," << g.m() << "," << seed << "," << cls << ","
                    << k << "," << algo << "," << us << "\n";
        }
        std::sort(times.begin(), times.end());
        long long median = times.empty() ? 0 : times[times.size() / 2];
        std::cout << family << "," << n << "," << median << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"strong chromatic index toolkit"};
    app.require_subcommand(1);

    std::string path, cls = "auto", emit_coloring, emit_dot;
    auto* compute = app.add_subcommand("compute", "compute s-chi' with a class algorithm");
    compute->add_option("path", path, "input graph file")->required();
    compute->add_option("--class", cls, "auto|halin|cubic-halin|dh|cograph|mop")
        ->check(CLI::IsMember({"auto", "halin", "cubic-halin", "dh", "cograph", "mop"}));
    compute->add_option("--emit-coloring", emit_coloring, "write the certificate here");
    compute->add_option("--emit-dot", emit_dot, "write a DOT rendering here");

    std::string vgraph, vcoloring;
    auto* verify = app.add_subcommand("verify", "verify a strong coloring certificate");
    verify->add_option("graph", vgraph, "graph file")->required();
    verify->add_option("coloring", vcoloring, "coloring file")->required();

    std::string opath;
    long long budget = sci::kDefaultOracleBudget;
    int hint = 0;
    auto* oracle = app.add_subcommand("oracle", "exact s-chi' by branch and bound");
    oracle->add_option("path", opath, "input graph file")->required();
    oracle->add_option("--budget", budget, "search node budget");
    oracle->add_option("--hint", hint, "known upper bound");

    std::string gfam = "cycle", gout;
    int gn = 6, gdx = 3, gdy = 3, gmaxdeg = 6;
    std::uint64_t gseed = 0;
    auto* generate = app.add_subcommand("generate", "emit a seeded family instance");
    generate->add_option("--family", gfam, "graph family")->required();
    generate->add_option("--n", gn, "size parameter");
    generate->add_option("--dx", gdx, "double wheel dx");
    generate->add_option("--dy", gdy, "double wheel dy");
    generate->add_option("--max-degree", gmaxdeg, "halin degree cap");
    generate->add_option("--seed", gseed, "seed");
    generate->add_option("--out", gout, "output path (default stdout)");

    std::string bfam = "mop", bcsv;
    std::vector<int> bsizes{1000, 10000, 100000};
    std::vector<int> bseeds{0, 1, 2};
    auto* bench = app.add_subcommand("bench", "time the class algorithms");
    bench->add_option("--family", bfam, "graph family")->required();
    bench->add_option("--sizes", bsizes, "instance sizes");
    bench->add_option("--seeds", bseeds, "seeds per size");
    bench->add_option("--out", bcsv, "CSV output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) return cmd_compute(path, cls, emit_coloring, emit_dot);
        if (verify->parsed()) return cmd_verify(vgraph, vcoloring);
        if (oracle->parsed()) return cmd_oracle(opath, budget, hint);
        if (generate->parsed())
            return cmd_generate(gfam, gn, gdx, gdy, gmaxdeg, gseed, gout);
        if (bench->parsed()) return cmd_bench(bfam, bsizes, bseeds, bcsv);
    } catch (const sci::BudgetError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
