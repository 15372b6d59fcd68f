// Drives the command-line binary as a subprocess and checks the documented
// contract: output formats, exit codes, and resource-cap behavior.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "json.hpp"

namespace {

int g_failures = 0;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string g_binary;

RunResult run(const std::string& args) {
    const std::string cmd = g_binary + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        std::cerr << "popen failed for: " << cmd << "\n";
        std::exit(2);
    }
    RunResult r;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void expect(bool ok, const std::string& label) {
    if (!ok) {
        ++g_failures;
        std::cerr << "FAIL: " << label << "\n";
    }
}

void expect_eq(const std::string& got, const std::string& want, const std::string& label) {
    if (got != want) {
        ++g_failures;
        std::cerr << "FAIL: " << label << "\n  want: " << want << "\n  got:  " << got << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-binary>\n";
        return 2;
    }
    g_binary = argv[1];

    // generate
    {
        RunResult r = run("generate --m 2 --length 12");
        expect(r.exit_code == 0, "generate exit code");
        expect_eq(r.out, "011010011001\n", "generate binary prefix");
        expect_eq(run("generate --m 3 --length 27").out, "012120201120201012201012120\n",
                  "generate ternary prefix");
        r = run("generate --m 2 --length 0");
        expect(r.exit_code == 0 && r.out.empty(), "generate empty prefix");
        r = run("generate --m 2 --length 12 --format json");
        expect(r.exit_code == 0, "generate json exit code");
        expect(nlohmann::json::parse(r.out)["word"] == "011010011001", "generate json word");
        expect(run("generate --m 1 --length 5").exit_code == 2, "generate bad alphabet");
    }

    // complexity
    {
        RunResult r = run("complexity --m 6 --kind abelian --from 1 --to 5");
        expect(r.exit_code == 0, "complexity exit code");
        expect_eq(r.out, "n,computed\n1,6\n2,21\n3,30\n4,39\n5,42\n", "complexity csv");
        r = run("complexity --m 6 --kind abelian --from 1 --to 5 --check");
        expect(r.exit_code == 0, "complexity --check exit code");
        expect(r.out.rfind("n,computed,formula,match\n", 0) == 0, "complexity --check header");
        expect(run("complexity --m 2 --kind factor --from 5 --to 4").exit_code == 2,
               "complexity empty range rejected");
        expect(run("complexity --m 3 --kind binomial --k 2 --from 18 --to 21 --check").exit_code == 0,
               "binomial complexity check");
        expect(run("complexity --m 2 --kind nonsense --from 0 --to 3").exit_code == 2,
               "unknown kind rejected");
    }

    // factorize
    {
        const std::string word28 = "120" "012120201" "120201012" "2010121";
        RunResult r = run("factorize --m 3 --k 2 " + word28);
        expect(r.exit_code == 0, "factorize exit code");
        const auto j = nlohmann::json::parse(r.out);
        expect(j["unique"] == true, "factorize unique flag");
        expect(j["factorizations"][0]["x"] == "120", "factorize x");
        expect(j["factorizations"][0]["y"] == "2010121", "factorize y");
        expect(j["pair"]["p"] == "120", "factorize pair p");
        expect(run("factorize --m 2 --k 1 000").exit_code == 2, "factorize non-factor");
        expect(run("factorize --m 2 --k 40 01").exit_code == 3, "factorize block cap");
    }

    // rauzy
    {
        RunResult r = run("rauzy --m 6 --order 4 --check");
        expect(r.exit_code == 0, "rauzy check exit code");
        expect(nlohmann::json::parse(r.out)["pass"] == true, "rauzy check verdict");
        expect(run("rauzy --m 3 --order 0").exit_code == 2, "rauzy zero order rejected");
        r = run("rauzy --m 3 --order 1 --format dot");
        expect(r.exit_code == 0 && r.out.rfind("digraph", 0) == 0, "rauzy dot output");
    }

    // verify
    {
        RunResult r = run("verify --suite prop41 --m 2 --k 4");
        expect(r.exit_code == 0, "verify suite exit code");
        const auto j = nlohmann::json::parse(r.out);
        expect(j.is_array() && j.size() == 1 && j[0]["check"] == "prop41", "verify suite report");
        expect(run("verify --suite nonsense").exit_code == 2, "unknown suite rejected");
    }

    // resource caps and file output
    {
        expect(run("generate --m 2 --length 200 --max-prefix 100").exit_code == 3,
               "prefix cap respected");
        expect(run("complexity --m 2 --kind factor --from 0 --to 60 --max-factor-length 50").exit_code == 3,
               "factor length cap respected");
        const std::string path = "cli_test_output.txt";
        RunResult r = run("generate --m 2 --length 12 -o " + path);
        expect(r.exit_code == 0 && r.out.empty(), "file output silences stdout");
        std::ifstream in(path);
        std::stringstream contents;
        contents << in.rdbuf();
        expect_eq(contents.str(), "011010011001\n", "file output contents");
        std::remove(path.c_str());
    }

    if (g_failures == 0) {
        std::cout << "cli contract: all checks passed\n";
        return 0;
    }
    std::cerr << g_failures << " cli check(s) failed\n";
    return 1;
}
