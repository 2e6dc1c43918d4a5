// Golden tests for the c2ring CLI: byte-exact output and the exit-code
// contract (0 ok, 1 domain/verification failure, 2 usage/parse error).
// Takes the binary path as argv[1].

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <sys/wait.h>

namespace {

int failures = 0;

struct RunResult {
    std::string output;
    int exit_code = -1;
};

RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        std::cerr << "popen failed for: " << cmd << "\n";
        std::exit(2);
    }
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.output.append(buffer, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void check(bool ok, const std::string& label, const std::string& got = "") {
    if (ok) {
        std::cout << "ok: " << label << "\n";
    } else {
        std::cout << "FAILED: " << label << "\n";
        if (!got.empty()) std::cout << "  got: " << got << "\n";
        ++failures;
    }
}

void expect_output(const std::string& label, const RunResult& r, const std::string& want,
                   int want_exit = 0) {
    check(r.output == want && r.exit_code == want_exit, label,
          r.output + " [exit " + std::to_string(r.exit_code) + "]");
}

void expect_contains(const std::string& label, const RunResult& r, const std::string& needle,
                     int want_exit) {
    check(r.output.find(needle) != std::string::npos && r.exit_code == want_exit, label,
          r.output + " [exit " + std::to_string(r.exit_code) + "]");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_golden <path-to-c2ring>\n";
        return 2;
    }
    unsetenv("C2RING_WINDOW");
    const std::string bin = std::string("'") + argv[1] + "'";

    expect_output("eval burnside class", run(bin + " eval '2 - rho*eta' 2>/dev/null"),
                  "w[0]  degree (0,0)  phi_e=2  phi_fix=0\n");
    expect_output("eval ladder product", run(bin + " eval 'rho^3 * x[7]' 2>/dev/null"),
                  "x[4]  degree (4,4)  phi_e=0  phi_fix=16\n");
    expect_output("eval annihilation", run(bin + " eval 'x[1]*w[4]' 2>/dev/null"),
                  "0  degree -  phi_e=0  phi_fix=0\n");
    expect_output("eval csv", run(bin + " eval --format csv 'w[2]*w[3]' 2>/dev/null"),
                  "canonical,stem,weight,phi_e,phi_fix\n2*w[5],0,-10,4,0\n");
    expect_output("rational eval", run(bin + " rational 'w[1]*w[-1]' 2>/dev/null"),
                  "2*w[0]  degree (0,0)  phi_e=4  phi_fix=0\n");
    expect_output("rational division", run(bin + " eval --mode rational 'w[2] / 2' 2>/dev/null"),
                  "1/2*w[2]  degree (0,-4)  phi_e=1  phi_fix=0\n");

    expect_output("divtable", run(bin + " divtable --imax 8 2>/dev/null"),
                  "i  n  m  b\n"
                  "1  0  0  1\n"
                  "2  0  0  2\n"
                  "3  0  0  3\n"
                  "4  0  3  4\n"
                  "5  1  4  4\n"
                  "6  2  4  4\n"
                  "7  3  4  4\n"
                  "8  3  7  5\n");
    expect_output("divtable csv", run(bin + " divtable --imax 3 --format csv 2>/dev/null"),
                  "i,n,m,b\n1,0,0,1\n2,0,0,2\n3,0,0,3\n");

    expect_output("basis box", run(bin + " basis --smin -2 --smax 2 --wmin -4 --wmax 4 2>/dev/null"),
                  "name   degree   adams\n"
                  "rho^2  (-2,-2)  -\n"
                  "rho    (-1,-1)  -\n"
                  "w[2]   (0,-4)   tau^4 h0\n"
                  "w[1]   (0,-2)   tau^2 h0\n"
                  "1      (0,0)    -\n"
                  "w[0]   (0,0)    h0\n"
                  "w[-1]  (0,2)    gamma/tau\n"
                  "w[-2]  (0,4)    gamma/tau^3\n"
                  "eta    (1,1)    h1\n"
                  "x[2]   (2,2)    -\n");
    expect_output("empty basis box", run(bin + " basis --smin 3 --smax -3 --wmin 0 --wmax 0 2>/dev/null"),
                  "name  degree  adams\n");
    expect_output("rank-2 box at the origin",
                  run(bin + " basis --smin 0 --smax 0 --wmin 0 --wmax 0 2>/dev/null"),
                  "name  degree  adams\n"
                  "1     (0,0)   -\n"
                  "w[0]  (0,0)   h0\n");

    expect_output("adams name", run(bin + " name 'w[-2]' 2>/dev/null"),
                  "w[-2]  gamma/tau^3\n");
    expect_output("adams name undefined", run(bin + " name 'x[2]' 2>/dev/null"),
                  "x[2]  undefined\n");
    expect_contains("name rejects non-basis input", run(bin + " name '2*eta' 2>&1"),
                    "not a single basis element", 1);

    expect_output("e1 gamma family",
                  run(bin + " e1 --smax 2 --fmin 0 --fmax 0 --wmin 0 --wmax 4 2>/dev/null"),
                  "class              degree\n"
                  "gamma/tau          (0,0,2)\n"
                  "gamma/tau^2        (0,0,3)\n"
                  "gamma/tau^3        (0,0,4)\n"
                  "gamma/(rho tau)    (1,0,3)\n"
                  "gamma/(rho tau^2)  (1,0,4)\n"
                  "gamma/(rho^2 tau)  (2,0,4)\n");
    expect_output("e1 csv",
                  run(bin + " e1 --smax 1 --fmin 0 --fmax 0 --wmin 0 --wmax 3 --format csv 2>/dev/null"),
                  "kind,a,b,base,stem,filtration,weight\n"
                  "gamma,0,1,1,0,0,2\n"
                  "gamma,0,2,1,0,0,3\n"
                  "gamma,1,1,1,1,0,3\n");
    // a catalog file with the bundled contents gives identical output
    {
        const char* path = "/tmp/c2ring_golden_catalog.txt";
        FILE* f = fopen(path, "w");
        fputs("# bundled contents\n1 0 0 0 free\nh0 0 1 0 free\nh1 1 1 1 free\n", f);
        fclose(f);
        const std::string args = " e1 --smax 3 --fmin 0 --fmax 1 --wmin 0 --wmax 5 2>/dev/null";
        const RunResult from_file = run(bin + " e1 --catalog " + path + args.substr(3));
        const RunResult bundled = run(bin + args);
        check(bundled.exit_code == 0 && from_file.exit_code == 0 &&
                  from_file.output == bundled.output && !bundled.output.empty(),
              "catalog file matches bundled catalog", from_file.output);
        remove(path);
    }

    expect_output("adams name of eta", run(bin + " name eta 2>/dev/null"), "eta  h1\n");

    expect_contains("check divisibility suite", run(bin + " check --window 8 divisibility 2>/dev/null"),
                    " 0 failures", 0);
    expect_contains("check csv output",
                    run(bin + " check --window 8 divisibility --format csv 2>/dev/null"),
                    "check,passed,detail\ndivisibility/n matches frozen table + periodicity (i<=200),1,",
                    0);
    expect_contains("check all suites pass", run(bin + " check --window 12 2>/dev/null"),
                    " 0 failures", 0);
    expect_contains("corrupted n-table fails presentation",
                    run(bin + " check --window 12 --corrupt-n 2=1 presentation 2>/dev/null"),
                    "FAIL", 1);

    expect_contains("parse error exits 2", run(bin + " eval 'x[0]' 2>&1"),
                    "x index must be >= 1 at offset 2", 2);
    expect_contains("inexact division exits 1", run(bin + " eval 'eta^8 / 2^4' 2>&1"),
                    "inexact division", 1);
    expect_contains("unknown suite exits 1", run(bin + " check nonsense 2>&1"),
                    "unknown check suite", 1);
    expect_contains("usage error exits 2", run(bin + " eval 2>&1"), "", 2);

    // env var sets the default window
    expect_output("env window override",
                  run(std::string("C2RING_WINDOW=3 ") + bin + " divtable --format csv 2>/dev/null"),
                  "i,n,m,b\n1,0,0,1\n2,0,0,2\n3,0,0,3\n");

    // determinism: identical bytes across runs
    {
        const std::string cmd = bin + " multable --window 4 2>/dev/null";
        check(run(cmd).output == run(cmd).output, "deterministic output");
    }

    if (failures == 0) {
        std::cout << "all cli golden tests passed\n";
        return 0;
    }
    std::cout << failures << " cli golden tests FAILED\n";
    return 1;
}
