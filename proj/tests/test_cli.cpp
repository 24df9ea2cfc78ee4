#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "nullcore/graph.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string &args, const std::string &env = "") {
    const std::string cmd = env + " " + std::string(NULLCORE_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE *pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

struct Workdir {
    fs::path root;
    Workdir() : root(fs::temp_directory_path() / ("nullcore_cli_" + std::to_string(::getpid()))) {
        fs::create_directories(root);
    }
    ~Workdir() { fs::remove_all(root); }
    std::string write(const std::string &name, const std::string &text) const {
        std::ofstream(root / name, std::ios::binary) << text;
        return (root / name).string();
    }
};

}  // namespace

TEST_CASE("analyze P7") {
    Workdir w;
    const auto p7 = w.write("p7.g", nullcore::serialize_edge_list(nullcore::gen_path(7)));
    const Run r = run("analyze " + p7);
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["nullity"] == 1);
    CHECK(j["cv"] == nlohmann::json({0, 2, 4, 6}));
    CHECK(run("analyze " + p7 + " --json").out == r.out);
    const Run dot = run("analyze " + p7 + " --dot");
    CHECK(dot.code == 0);
    CHECK(dot.out.find("graph G") != std::string::npos);
}

TEST_CASE("exit codes") {
    Workdir w;
    const auto bad = w.write("bad.g", "3 1\n0 9\n");
    const auto c4 = w.write("c4.g", "4 4\n0 1\n1 2\n2 3\n0 3\n");
    const auto p7 = w.write("p7.g", nullcore::serialize_edge_list(nullcore::gen_path(7)));
    CHECK(run("analyze " + bad).code == 2);
    CHECK(run("analyze " + (w.root / "missing.g").string()).code == 2);
    CHECK(run("reduce " + c4 + " --slim").code == 3);
    CHECK(run("perturb " + c4 + " --list").code == 3);
    CHECK(run("reduce " + c4 + " --pendant").code == 3);
    CHECK(run("").code == 1);
    CHECK(run("frobnicate").code == 1);
    CHECK(run("reduce " + p7).code == 1);
    CHECK(run("perturb " + p7 + " --preserve sideways --list").code == 1);
    CHECK(run("perturb " + p7 + " --list --densify").code == 1);
    CHECK(run("gen lattice 4").code == 1);
    CHECK(run("verify --suite nope").code == 1);
    CHECK(run("analyze " + c4).code == 0);
    CHECK(nlohmann::json::parse(run("analyze " + c4).out)["core_graph"] == true);
}

TEST_CASE("verify reports counterexamples with exit code 4") {
    Workdir w;
    const auto out = (w.root / "cex").string();
    const Run trees = run("verify --suite trees --max-n 10 --trials 40 --seed 3 --out " + out);
    CHECK(trees.code == 0);
    CHECK(trees.out.find("FAIL") == std::string::npos);
    CHECK_FALSE(fs::exists(out));
    const Run j = run("verify --suite trees --max-n 10 --trials 40 --seed 3 --json --out " + out);
    CHECK(nlohmann::json::parse(j.out).is_object());
}

TEST_CASE("perturb and reduce outputs") {
    Workdir w;
    const auto p7 = w.write("p7.g", nullcore::serialize_edge_list(nullcore::gen_path(7)));
    const Run list = run("perturb " + p7 + " --preserve cv --list");
    CHECK(list.code == 0);
    const auto j = nlohmann::json::parse(list.out);
    CHECK(j["preserve"] == "cv");
    CHECK_FALSE(j["safe"].empty());
    const Run dens = run("perturb " + p7 + " --preserve nullspace --densify");
    CHECK(dens.code == 0);
    CHECK(nlohmann::json::parse(dens.out)["property_maintained"] == true);
    const Run edge = run("perturb " + p7 + " --edge 0,6");
    CHECK(edge.code == 0);
    CHECK(nlohmann::json::parse(edge.out)["type"] == "CV-CV");
    CHECK(run("perturb " + p7 + " --edge 0,1").code == 1);
    CHECK(run("perturb " + p7 + " --edge zero").code == 1);
    const Run pend = run("reduce " + p7 + " --pendant");
    CHECK(pend.code == 0);
    CHECK(nlohmann::json::parse(pend.out)["trace"]["t"] == 3);
    const Run slim = run("reduce " + p7 + " --slim");
    CHECK(nlohmann::json::parse(slim.out)["nullity_preserved"] == true);
    const Run mc = run("mc " + p7);
    CHECK(nlohmann::json::parse(mc.out)["is_mc"] == true);
}

TEST_CASE("gen output is a parseable, deterministic edge list") {
    const Run c4 = run("gen cycle 4");
    CHECK(c4.code == 0);
    CHECK(c4.out == "4 4\n0 1\n0 3\n1 2\n2 3\n");
    const Run a = run("gen random 9 17 --p 1/3");
    CHECK(a.out == run("gen random 9 17 --p 1/3").out);
    CHECK(nullcore::parse_edge_list(a.out).order() == 9);
    CHECK(nullcore::is_tree(nullcore::parse_edge_list(run("gen tree 12 5").out)));
    CHECK(run("gen bipartite 3 1 --n2 4").code == 0);
    CHECK(run("gen random 5 1 --p 3/2").code == 1);
}

TEST_CASE("verify output does not depend on the thread count") {
    const std::string args = "verify --suite all --max-n 8 --trials 40 --seed 11 --json";
    const Run one = run(args, "NULLCORE_THREADS=1");
    const Run many = run(args, "NULLCORE_THREADS=6");
    CHECK(one.code == many.code);
    CHECK(one.out == many.out);
    CHECK_FALSE(one.out.empty());
}
