#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// End-to-end checks of the famlab binary. The path comes from the build
// (FAMLAB_BIN_PATH) and can be overridden with the FAMLAB_BIN variable.

namespace {

struct CmdResult {
    int exit_code;
    std::string output;
};

std::string famlab_bin() {
    if (const char* env = std::getenv("FAMLAB_BIN")) return env;
    return FAMLAB_BIN_PATH;
}

CmdResult run_cmd(const std::string& cmd) {
    std::string full = cmd + " 2>&1";
    FILE* pipe = popen(full.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct TempDir {
    std::string path;
    TempDir() {
        char tmpl[] = "/tmp/famlab-cli-XXXXXX";
        REQUIRE(mkdtemp(tmpl) != nullptr);
        path = tmpl;
    }
    ~TempDir() { std::system(("rm -rf " + path).c_str()); }
    std::string in(const std::string& cmd) const { return "cd " + path + " && " + cmd; }
};

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("construct mk writes a file and prints the summary") {
    TempDir dir;
    CmdResult r = run_cmd(dir.in(famlab_bin() + " construct mk --k 4"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "k=4 blocks=5 vertices=10"));
    CHECK(contains(r.output, "degrees: 2x10"));

    std::ifstream file(dir.path + "/mk-4.fam");
    REQUIRE(file.good());
    std::ostringstream text;
    text << file.rdbuf();
    CHECK(contains(text.str(), "b 1 2 3 4\n"));
    CHECK(contains(text.str(), "b 4 7 9 10\n"));
}

TEST_CASE("construct rejects degenerate parameters with exit 2") {
    TempDir dir;
    CHECK(run_cmd(dir.in(famlab_bin() + " construct mk --k 1")).exit_code == 2);
    CHECK(run_cmd(dir.in(famlab_bin() + " construct factorization --k 4")).exit_code == 2);
    CHECK(run_cmd(dir.in(famlab_bin() + " construct degree3 --m 1")).exit_code == 2);
    CHECK(run_cmd(dir.in(famlab_bin() + " construct mk")).exit_code == 2);  // missing flag
}

TEST_CASE("tau subcommand") {
    TempDir dir;
    run_cmd(dir.in(famlab_bin() + " construct example --out ex.fam"));
    CmdResult r = run_cmd(dir.in(famlab_bin() + " tau ex.fam"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "tau=4\n"));
    CHECK(contains(r.output, "witness=1 2 3 4\n"));

    run_cmd(dir.in(famlab_bin() + " construct mk --k 4 --out m4.fam"));
    CmdResult covers = run_cmd(dir.in(famlab_bin() + " tau m4.fam --enumerate"));
    CHECK(covers.exit_code == 0);
    int count = 0;
    for (std::size_t pos = 0; (pos = covers.output.find("cover=", pos)) != std::string::npos;
         ++pos)
        ++count;
    CHECK(count == 30);  // all size-3 covers of mk(4)

    CHECK(run_cmd(dir.in(famlab_bin() + " tau ex.fam --node-budget 1")).exit_code == 3);
    CHECK(run_cmd(dir.in(famlab_bin() + " tau missing.fam")).exit_code == 2);

    std::ofstream bad(dir.path + "/bad.fam");
    bad << "k 3\nb 1 2\n";
    bad.close();
    CmdResult parse = run_cmd(dir.in(famlab_bin() + " tau bad.fam"));
    CHECK(parse.exit_code == 2);
    CHECK(contains(parse.output, "line 2"));

    std::ofstream empty(dir.path + "/empty.fam");
    empty << "k 3\n";
    empty.close();
    CmdResult zero = run_cmd(dir.in(famlab_bin() + " tau empty.fam"));
    CHECK(zero.exit_code == 0);
    CHECK(contains(zero.output, "tau=0\n"));
}

TEST_CASE("iso subcommand distinguishes isomorphic from not") {
    TempDir dir;
    run_cmd(dir.in(famlab_bin() + " construct mk --k 4 --out m4.fam"));
    std::ofstream first5(dir.path + "/first5.fam");
    first5 << "k 4\nb 2 3 4 5\nb 2 6 7 8\nb 3 6 9 10\nb 4 7 9 11\nb 5 8 10 11\n";
    first5.close();
    CmdResult yes = run_cmd(dir.in(famlab_bin() + " iso m4.fam first5.fam"));
    CHECK(yes.exit_code == 0);
    CHECK(contains(yes.output, "isomorphic"));
    CHECK(contains(yes.output, " -> "));

    run_cmd(dir.in(famlab_bin() + " construct mk --k 3 --out m3.fam"));
    run_cmd(dir.in(famlab_bin() + " construct degree3 --m 2 --out fano.fam"));
    CmdResult no = run_cmd(dir.in(famlab_bin() + " iso m3.fam fano.fam"));
    CHECK(no.exit_code == 1);
    CHECK(contains(no.output, "not isomorphic"));

    CHECK(run_cmd(dir.in(famlab_bin() + " iso m3.fam missing.fam")).exit_code == 2);
}

TEST_CASE("verify subcommand exit codes and report") {
    TempDir dir;
    CmdResult ok = run_cmd(dir.in(famlab_bin() + " verify --suite T5-upper --report rep.json"));
    CHECK(ok.exit_code == 0);
    CHECK(contains(ok.output, "PASS T5-upper"));
    std::ifstream rep(dir.path + "/rep.json");
    REQUIRE(rep.good());
    std::ostringstream text;
    text << rep.rdbuf();
    CHECK(contains(text.str(), "\"verdict\": \"PASS\""));
    CHECK(contains(text.str(), "\"summary\""));

    CHECK(run_cmd(dir.in(famlab_bin() + " verify --suite no-such-claim")).exit_code == 2);
    CHECK(run_cmd(dir.in(famlab_bin() + " verify --suite T5-length4 --budget 1")).exit_code == 3);

    // a q3 witness file that does not qualify makes C6-lower fail -> exit 1
    run_cmd(dir.in(famlab_bin() + " construct mk --k 3 --out m3.fam"));
    CHECK(run_cmd(dir.in(famlab_bin() + " verify --suite C6-lower --q3-witness m3.fam"))
              .exit_code == 1);

    // the shipped default witness qualifies
    CHECK(run_cmd(dir.in(famlab_bin() + " verify --suite C6-lower --q3-witness " +
                         std::string(FAMLAB_DATA_DIR) + "/q3-witness.fam"))
              .exit_code == 0);
}

TEST_CASE("enumerate subcommand") {
    TempDir dir;
    CmdResult two = run_cmd(dir.in(famlab_bin() + " enumerate --k 2 --blocks 3 --intersecting"));
    CHECK(two.exit_code == 0);
    CHECK(contains(two.output, "classes=2\n"));

    CmdResult one = run_cmd(dir.in(famlab_bin() + " enumerate --k 3 --blocks 1"));
    CHECK(contains(one.output, "classes=1\n"));

    CmdResult zero = run_cmd(dir.in(
        famlab_bin() + " enumerate --k 4 --max-blocks 4 --intersecting --min-tau 3"));
    CHECK(contains(zero.output, "classes=0\n"));

    CmdResult report = run_cmd(dir.in(
        famlab_bin() + " enumerate --k 2 --max-blocks 3 --intersecting --report enum.json"));
    CHECK(report.exit_code == 0);
    std::ifstream rep(dir.path + "/enum.json");
    REQUIRE(rep.good());
    std::ostringstream text;
    text << rep.rdbuf();
    CHECK(contains(text.str(), "\"class_count\""));
    CHECK(contains(text.str(), "\"candidates_examined\""));

    CHECK(run_cmd(dir.in(famlab_bin() + " enumerate --k 0 --max-blocks 2")).exit_code == 2);
    CHECK(run_cmd(dir.in(famlab_bin() + " enumerate --k 3 --max-blocks 5 --intersecting "
                                        "--budget 3")).exit_code == 3);
}

TEST_CASE("family files round trip through the CLI in both formats") {
    TempDir dir;
    run_cmd(dir.in(famlab_bin() + " construct degree3 --m 3 --format json --out d3.json"));
    CmdResult r = run_cmd(dir.in(famlab_bin() + " tau d3.json"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "tau=5\n"));

    run_cmd(dir.in(famlab_bin() + " construct degree3 --m 3 --out d3.fam"));
    CmdResult same = run_cmd(dir.in(famlab_bin() + " iso d3.fam d3.json"));
    CHECK(same.exit_code == 0);
}

TEST_CASE("tau exports the family of minimum transversals") {
    TempDir dir;
    run_cmd(dir.in(famlab_bin() + " construct mk --k 5 --out m5.fam"));
    CmdResult r = run_cmd(dir.in(famlab_bin() + " tau m5.fam --transversals-out tf.fam"));
    CHECK(r.exit_code == 0);
    CmdResult tf = run_cmd(dir.in(famlab_bin() + " tau tf.fam"));
    CHECK(contains(tf.output, "tau=5\n"));  // transversal family of mk(5)
    std::ifstream file(dir.path + "/tf.fam");
    std::ostringstream text;
    text << file.rdbuf();
    CHECK(contains(text.str(), "k 3\n"));  // 15 blocks of size 3
}

TEST_CASE("verify reports are identical at any FAMLAB_THREADS value") {
    TempDir dir;
    std::string claims = "--suite L1-tau,T5-upper,T5-case-search";
    run_cmd(dir.in("FAMLAB_THREADS=1 " + famlab_bin() + " verify " + claims + " --report a.json"));
    run_cmd(dir.in("FAMLAB_THREADS=3 " + famlab_bin() + " verify " + claims + " --report b.json"));
    CmdResult diff = run_cmd(
        dir.in("sed 's/\"elapsed_ms\": [0-9]*/\"elapsed_ms\": 0/' a.json > a2.json && "
               "sed 's/\"elapsed_ms\": [0-9]*/\"elapsed_ms\": 0/' b.json > b2.json && "
               "diff a2.json b2.json"));
    CHECK(diff.exit_code == 0);
    CHECK(diff.output.empty());
}
