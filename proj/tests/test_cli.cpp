// CLI contract checks: golden outputs and exit codes. Takes the binary
// path as argv[1].

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <iostream>
#include <string>

namespace {

int failures = 0;
std::string cli;

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

RunResult run(const std::string& args) {
    RunResult result;
    FILE* pipe = popen((cli + " " + args + " 2>/dev/null").c_str(), "r");
    if (pipe == nullptr) return result;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

void expect(bool ok, const std::string& what) {
    std::cout << (ok ? "ok" : "FAILED") << ": " << what << "\n";
    if (!ok) ++failures;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-cli>\n";
        return 2;
    }
    cli = argv[1];

    RunResult u = run("profile --builtin U -n 5 --format csv");
    expect(u.exit_code == 0 &&
               u.output == "n,p,s,exact\n0,1,1,true\n1,2,1,true\n2,3,1,true\n3,4,1,true\n"
                           "4,5,1,true\n5,6,1,true\n",
           "profile U csv rows 0..5 with p = 1..6");

    RunResult akb = run("profile --builtin AKB -n 5 --format csv");
    expect(akb.exit_code == 0 &&
               akb.output == "n,p,s,exact\n0,1,1,true\n1,2,1,true\n2,2,1,true\n3,2,1,true\n"
                             "4,2,1,true\n5,2,1,true\n",
           "profile AKB csv: p = 1,2,2,2,2,2 with s = 1");

    RunResult tm = run("profile --builtin THUEMORSE -n 3 --format csv");
    expect(tm.exit_code == 0 && tm.output.find("0,1,") != std::string::npos &&
               tm.output.find("1,2,") != std::string::npos &&
               tm.output.find("2,4,") != std::string::npos &&
               tm.output.find("3,6,") != std::string::npos,
           "profile THUEMORSE: p = 1,2,4,6");

    RunResult classify = run("classify --builtin AKB");
    expect(classify.exit_code == 0 &&
               classify.output.find("\"verdict\":\"bounded\"") != std::string::npos &&
               classify.output.find("\"bound\":2") != std::string::npos,
           "classify AKB: bounded with bound 2, exit 0");

    RunResult classify_u = run("classify --builtin U");
    expect(classify_u.exit_code == 0 &&
               classify_u.output.find("\"verdict\":\"unbounded\"") != std::string::npos,
           "classify U: unbounded, exit 0");

    RunResult decompose_u = run("decompose --builtin U");
    expect(decompose_u.exit_code == 2 && decompose_u.output.empty(),
           "decompose U: exit 2, witness only on stderr");

    RunResult decompose_akb = run("decompose --builtin AKB");
    expect(decompose_akb.exit_code == 0 &&
               decompose_akb.output.find("\"triples\":[[\"\",\"a\",\"\"],[\"\",\"a\",\"b\"]]") !=
                   std::string::npos,
           "decompose AKB: the two expected triples");

    RunResult catalog = run("catalog");
    expect(catalog.exit_code == 0 && catalog.output.find("FIBONACCI") != std::string::npos,
           "catalog lists the builtins");

    RunResult bad_file = run("profile --input /nonexistent.json");
    expect(bad_file.exit_code == 2 && bad_file.output.empty(),
           "missing input file: exit 2, no stdout payload");

    RunResult no_source = run("profile");
    expect(no_source.exit_code == 2, "profile without a source: exit 2");

    RunResult bad_suite = run("verify --suite nope");
    expect(bad_suite.exit_code == 2, "unknown suite name: exit 2");

    {
        std::ofstream spec("/tmp/subcomp_cli_spec.json");
        spec << R"({"alphabet":["a","b"],
                    "source":{"type":"regular","states":2,"start":[0],"finals":[1],
                              "transitions":[[0,"b",1],[1,"a",1]]}})";
    }
    RunResult from_file = run("classify --input /tmp/subcomp_cli_spec.json");
    expect(from_file.exit_code == 0 &&
               from_file.output.find("\"verdict\":\"bounded\"") != std::string::npos,
           "classify from a JSON language spec");

    RunResult verify_small = run("verify --suite ex2 --seed 7");
    expect(verify_small.exit_code == 0 &&
               verify_small.output.find("\"outcome\":\"fail\"") == std::string::npos,
           "verify ex2 suite: no failures, exit 0");

    expect(run("profile --builtin THUEMORSE -n 8 --format json").output ==
               run("profile --builtin THUEMORSE -n 8 --format json").output,
           "identical invocations produce byte-identical output");

    {
        // 2^21 reachable subsets: past the construction cap.
        std::ofstream spec("/tmp/subcomp_cli_blowup.json");
        spec << R"({"alphabet":["a","b"],"source":{"type":"regular","states":22,)"
             << R"("start":[0],"finals":[21],"transitions":[)";
        spec << R"([0,"a",0],[0,"b",0],[0,"a",1])";
        for (int i = 1; i < 21; ++i)
            spec << ",[" << i << R"(,"a",)" << i + 1 << "],[" << i << R"(,"b",)" << i + 1 << "]";
        spec << "]}}";
    }
    RunResult capped = run("classify --input /tmp/subcomp_cli_blowup.json");
    expect(capped.exit_code == 3 && capped.output.empty(),
           "subset construction past the cap: exit 3, no stdout payload");

    RunResult small_horizon = run("profile --builtin FIBONACCI -n 10 --horizon 4");
    expect(small_horizon.exit_code == 2 && small_horizon.output.empty(),
           "horizon below the requested length: exit 2");

    RunResult to_file = run("profile --builtin U -n 2 --format csv --out /tmp/subcomp_cli_out.csv");
    std::ifstream written("/tmp/subcomp_cli_out.csv");
    std::string file_content((std::istreambuf_iterator<char>(written)),
                             std::istreambuf_iterator<char>());
    expect(to_file.exit_code == 0 && to_file.output.empty() &&
               file_content == "n,p,s,exact\n0,1,1,true\n1,2,1,true\n2,3,1,true\n",
           "--out writes the payload to the file, nothing to stdout");

    std::cout << (failures == 0 ? "all cli checks passed" : "cli checks failed") << "\n";
    return failures == 0 ? 0 : 1;
}
