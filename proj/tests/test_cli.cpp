#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sci/generators.hpp"
#include "sci/io.hpp"

using namespace sci;

namespace {

#ifndef SCI_CLI_PATH
#define SCI_CLI_PATH "./sci"
#endif

int run_cli(const std::string& args) {
    std::string cmd = std::string(SCI_CLI_PATH) + " " + args + " > cli_stdout.tmp 2>&1";
    int rc = std::system(cmd.c_str());
    if (rc < 0) return -1;
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_prism_file(const std::string& path) {
    GenSpec spec;
    spec.family = Family::necklace;
    spec.n = 2;
    auto gen = generate(spec);
    write_graph_file(path, GraphFile{gen.graph, gen.halin, std::nullopt});
}

struct TempFiles {
    std::vector<std::string> names;
    ~TempFiles() {
        for (const auto& n : names) std::remove(n.c_str());
        std::remove("cli_stdout.tmp");
    }
    const std::string& add(std::string n) {
        names.push_back(std::move(n));
        return names.back();
    }
};

}  // namespace

TEST_CASE("compute on the annotated prism reports k=9") {
    TempFiles tmp;
    const auto& path = tmp.add("cli_prism.tmp");
    write_prism_file(path);
    CHECK(run_cli("compute " + path + " --class cubic-halin") == 0);
    std::string out = slurp("cli_stdout.tmp");
    CHECK(out.find("k: 9") != std::string::npos);
    CHECK(out.find("class: cubic-halin") != std::string::npos);
}

TEST_CASE("compute auto-detects classes") {
    TempFiles tmp;
    const auto& tri = tmp.add("cli_tri.tmp");
    {
        std::ofstream out(tri);
        out << "3 3\n0 1\n1 2\n2 0\n";
    }
    CHECK(run_cli("compute " + tri) == 0);
    std::string out = slurp("cli_stdout.tmp");
    CHECK(out.find("class: mop") != std::string::npos);
    CHECK(out.find("k: 3") != std::string::npos);

    // pendant-C4 graph: not a mop, not a cograph, recognized as dh
    const auto& f2 = tmp.add("cli_fig2.tmp");
    {
        std::ofstream o(f2);
        o << "8 8\n0 1\n1 2\n2 3\n0 3\n0 4\n1 5\n2 6\n3 7\n";
    }
    CHECK(run_cli("compute " + f2) == 0);
    std::string out2 = slurp("cli_stdout.tmp");
    CHECK(out2.find("class: dh") != std::string::npos);
    CHECK(out2.find("k: 6") != std::string::npos);
}

TEST_CASE("certificates re-verify through a separate process") {
    TempFiles tmp;
    const auto& path = tmp.add("cli_dh.tmp");
    {
        GenSpec spec;
        spec.family = Family::dh;
        spec.n = 10;
        spec.seed = 4;
        auto gen = generate(spec);
        write_graph_file(path, GraphFile{gen.graph, std::nullopt, std::nullopt});
    }
    const auto& cert = tmp.add("cli_dh_colors.tmp");
    CHECK(run_cli("compute " + path + " --emit-coloring " + cert) == 0);
    CHECK(run_cli("verify " + path + " " + cert) == 0);
    CHECK(slurp("cli_stdout.tmp").find("ok") != std::string::npos);
}

TEST_CASE("verify flags violations with a witness pair and exit code 4") {
    TempFiles tmp;
    const auto& g = tmp.add("cli_c6.tmp");
    {
        std::ofstream o(g);
        o << "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n";
    }
    const auto& good = tmp.add("cli_c6_good.tmp");
    {
        std::ofstream o(good);
        for (int e = 0; e < 6; ++e) o << e << " " << e % 3 << "\n";
    }
    CHECK(run_cli("verify " + g + " " + good) == 0);
    const auto& bad = tmp.add("cli_c6_bad.tmp");
    {
        std::ofstream o(bad);
        for (int e = 0; e < 6; ++e) o << e << " " << e % 2 << "\n";
    }
    CHECK(run_cli("verify " + g + " " + bad) == 4);
    CHECK(slurp("cli_stdout.tmp").find("violation") != std::string::npos);
}

TEST_CASE("exit codes: parse=2, class mismatch=3, budget=5") {
    TempFiles tmp;
    const auto& bad = tmp.add("cli_bad.tmp");
    {
        std::ofstream o(bad);
        o << "not a graph\n";
    }
    CHECK(run_cli("compute " + bad) == 2);

    // C5 matches no class in auto mode
    const auto& c5 = tmp.add("cli_c5.tmp");
    {
        std::ofstream o(c5);
        o << "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";
    }
    CHECK(run_cli("compute " + c5) == 3);

    const auto& mop = tmp.add("cli_mop.tmp");
    {
        GenSpec spec;
        spec.family = Family::mop;
        spec.n = 14;
        spec.seed = 2;
        write_graph_file(mop, GraphFile{generate(spec).graph, std::nullopt, std::nullopt});
    }
    CHECK(run_cli("oracle " + mop + " --budget 3") == 5);
}

TEST_CASE("generate emits annotated files that compute accepts") {
    TempFiles tmp;
    const auto& path = tmp.add("cli_gen.tmp");
    CHECK(run_cli("generate --family halin --n 12 --seed 5 --out " + path) == 0);
    CHECK(run_cli("compute " + path + " --class halin") == 0);
    std::string out = slurp("cli_stdout.tmp");
    CHECK(out.find("class: halin") != std::string::npos);
}

TEST_CASE("auto detection never misclassifies generator fixtures") {
    TempFiles tmp;
    struct Case {
        Family fam;
        const char* expect;
    };
    for (auto [fam, expect] : {Case{Family::mop, "class: mop"},
                               Case{Family::cograph, "class: cograph"},
                               Case{Family::dh, "class: dh"}}) {
        for (int seed = 0; seed < 3; ++seed) {
            GenSpec spec;
            spec.family = fam;
            spec.n = 10;
            spec.seed = seed;
            auto gen = generate(spec);
            std::string path = "cli_auto_" + std::to_string(static_cast<int>(fam)) + "_" +
                               std::to_string(seed) + ".tmp";
            tmp.add(path);
            write_graph_file(path, GraphFile{gen.graph, gen.halin, std::nullopt});
            CHECK(run_cli("compute " + path) == 0);
            std::string out = slurp("cli_stdout.tmp");
            // auto order tries mop, then cograph, then dh; generated cographs
            // may also be dh but the earlier class wins deterministically
            if (fam == Family::mop) CHECK(out.find(expect) != std::string::npos);
            if (fam == Family::dh)
                CHECK((out.find("class: dh") != std::string::npos ||
                       out.find("class: cograph") != std::string::npos));
            if (fam == Family::cograph) CHECK(out.find(expect) != std::string::npos);
        }
    }
}

TEST_CASE("dot export names colors from the palette") {
    TempFiles tmp;
    const auto& tri = tmp.add("cli_tri2.tmp");
    {
        std::ofstream o(tri);
        o << "3 3\n0 1\n1 2\n2 0\n";
    }
    const auto& dot = tmp.add("cli_tri2.dot");
    CHECK(run_cli("compute " + tri + " --emit-dot " + dot) == 0);
    std::string out = slurp(dot);
    CHECK(out.find("graph G {") != std::string::npos);
    CHECK(out.find("red") != std::string::npos);
}

TEST_CASE("bench writes the fixed csv columns") {
    TempFiles tmp;
    const auto& csv = tmp.add("cli_bench.csv");
    CHECK(run_cli("bench --family mop --sizes 60 120 --seeds 0 1 --out " + csv) == 0);
    std::string out = slurp(csv);
    CHECK(out.find("family,n,m,seed,class,k,algo,micros") != std::string::npos);
    CHECK(out.find("mop,60,117,0") != std::string::npos);
}
