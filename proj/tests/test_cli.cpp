#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "evencycle/bipartite_graph.hpp"
#include "evencycle/cli.hpp"

using namespace evencycle;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> body_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') lines.push_back(line);
    }
    return lines;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("evencycle-unit-" + std::to_string(::getpid()) + "-" + name);
}

}  // namespace

TEST_CASE("verify-kqq reports one K_{q,q} family per class pair") {
    const Run r = cli({"verify-kqq", "--q", "3"});
    CHECK(r.code == kExitOk);
    const auto lines = body_lines(r.out);
    REQUIRE(lines.size() == 4);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        CHECK(lines[i].find("\"27 components, all K_{3,3}\"") != std::string::npos);
    }
    CHECK(r.out.rfind("# evencycle 0.1.0\n# command=verify-kqq q=3 k=5\n", 0) == 0);
}

TEST_CASE("psi-identity rows") {
    const Run r = cli({"psi-identity", "--q", "4", "--trials", "20", "--seed", "7"});
    CHECK(r.code == kExitOk);
    const auto lines = body_lines(r.out);
    REQUIRE(lines.size() == 21);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::vector<std::string> cols;
        std::istringstream row(lines[i]);
        std::string c;
        while (std::getline(row, c, ',')) cols.push_back(c);
        REQUIRE(cols.size() == 10);
        CHECK(cols[4] == cols[5]);
        CHECK(cols[8] == "1");
    }
}

TEST_CASE("bound-table ratio column") {
    const Run r = cli({"bound-table", "--qmin", "4", "--qmax", "32"});
    CHECK(r.code == kExitOk);
    const auto lines = body_lines(r.out);
    REQUIRE(lines.size() == 17);
    CHECK(lines[0] == "q,bound,ratio,chain_tight");
    CHECK(lines[1] == "4,3626,0.885253906250,1");
    double prev = 2;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto first = lines[i].find(',');
        const auto second = lines[i].find(',', first + 1);
        const double ratio = std::stod(lines[i].substr(second + 1));
        CHECK(ratio < prev);
        prev = ratio;
    }
}

TEST_CASE("usage errors name the offending field") {
    Run r = cli({"build-wenger", "--q", "6"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("--q") != std::string::npos);
    r = cli({"psi-identity", "--q", "3", "--keep", "1.5"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("--keep") != std::string::npos);
    r = cli({"gm-sample", "--n", "8", "--r", "2"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("--r") != std::string::npos);
    r = cli({"bound-table", "--qmin", "9", "--qmax", "4"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("--qmax") != std::string::npos);
    r = cli({"build-wenger", "--q", "64"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("--q") != std::string::npos);
    r = cli({"extract-c8", "--q", "5", "--mode", "fast"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("--mode") != std::string::npos);
    r = cli({"verify-kqq"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("--q") != std::string::npos);
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"frobnicate"}).code == kExitUsage);
    CHECK(cli({"accept"}).code == kExitUsage);  // no suite linked here
    CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("worker count comes from the environment only") {
    const Run base = cli({"extract-c8", "--q", "5", "--trials", "3", "--mode", "generic"});
    ::setenv(kWorkersEnv, "2", 1);
    const Run two = cli({"extract-c8", "--q", "5", "--trials", "3", "--mode", "generic"});
    ::setenv(kWorkersEnv, "zero", 1);
    const Run bad = cli({"extract-c8", "--q", "5", "--trials", "3"});
    ::unsetenv(kWorkersEnv);
    CHECK(base.code == kExitOk);
    CHECK(two.out == base.out);
    CHECK(bad.code == kExitUsage);
    CHECK(bad.err.find(kWorkersEnv) != std::string::npos);
}

TEST_CASE("budget exhaustion has its own exit status") {
    const Run r = cli({"c10-probe", "--n", "8", "--budget", "10"});
    CHECK(r.code == kExitBudget);
    CHECK(r.out.find("inconclusive") != std::string::npos);
}

TEST_CASE("config file with flags taking precedence") {
    const auto path = temp_file("config.ini");
    {
        std::ofstream f(path);
        f << "[psi-identity]\nq=3\ntrials=4\nseed=11\n";
    }
    const Run from_file = cli({"--config", path.string(), "psi-identity"});
    CHECK(from_file.code == kExitOk);
    CHECK(from_file.out.find("# command=psi-identity q=3 trials=4 seed=11 keep=0.5") != std::string::npos);
    CHECK(body_lines(from_file.out).size() == 5);
    const Run overridden = cli({"--config", path.string(), "psi-identity", "--trials", "2"});
    CHECK(overridden.out.find("q=3 trials=2 seed=11") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("artifacts carry headers and round-trip") {
    const auto graph = temp_file("gm.txt");
    const auto plot = temp_file("plot.csv");
    const Run r = cli({"gm-sample", "--n", "8", "--r", "3", "--seed", "4", "--graph-out", graph.string()});
    CHECK(r.code == kExitOk);
    std::ifstream in(graph);
    const GraphFile file = read_graph(in);
    CHECK(file.extra_headers.front() == "# evencycle 0.1.0");
    CHECK(file.extra_headers.back() == "# gm n=8 r=3 seed=4");
    const auto rows = body_lines(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1].rfind("8,3,0,4," + std::to_string(file.graph.edge_count()) + ",168,", 0) == 0);

    const Run w = cli({"build-wenger", "--q", "2", "--graph-out", graph.string()});
    CHECK(w.code == kExitOk);
    std::ifstream win(graph);
    const GraphFile wf = read_graph(win);
    CHECK(wf.graph.edge_count() == 64);
    CHECK(wf.extra_headers.back() == "# wenger k=5 q=2 p=2 e=1 modulus=0,1");

    const Run d = cli({"gm-density", "--n", "6", "--r", "3", "--trials", "4", "--plot-out", plot.string()});
    CHECK(d.code == kExitOk);
    std::ifstream pin(plot);
    std::stringstream ps;
    ps << pin.rdbuf();
    const auto plot_rows = body_lines(ps.str());
    REQUIRE(plot_rows.size() == 5);
    CHECK(plot_rows[0] == "x,y");
    std::filesystem::remove(graph);
    std::filesystem::remove(plot);
}
