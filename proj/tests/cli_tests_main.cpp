// Integration tests for the CLI binary: exit-code contract, config parsing,
// and byte-identical reports for identical configs.  Invoked by ctest with
// the binary path as argv[1].

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::printf("FAIL: %s\n", what.c_str());
    } else {
        std::printf("ok: %s\n", what.c_str());
    }
}

int run(const std::string& cmd) {
    int rc = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::printf("usage: cli_tests <path-to-bergman>\n");
        return 2;
    }
    std::string bin = argv[1];
    fs::path tmp = fs::temp_directory_path() / "bergman_cli_tests";
    fs::remove_all(tmp);
    fs::create_directories(tmp);

    // default corpus classification matches its own expectations -> exit 0
    expect(run(bin + " classify --out " + (tmp / "out0").string()) == 0,
           "classify default corpus exits 0");
    expect(fs::exists(tmp / "out0" / "classify_pw0.json"), "classify writes JSON reports");

    // declared expectation mismatch -> exit 1
    write(tmp / "bad_expect.cfg",
          "n = 2\n[weights]\nw0: expdecay(c=1,beta=1)\n[expect]\nw0: dhat=yes\n");
    expect(run(bin + " classify --config " + (tmp / "bad_expect.cfg").string() + " --out " +
               (tmp / "out1").string()) == 1,
           "expectation mismatch exits 1");

    // malformed weight spec -> exit 2
    write(tmp / "malformed.cfg", "[weights]\nw0: power(alpha=)\n");
    expect(run(bin + " classify --config " + (tmp / "malformed.cfg").string() + " --out " +
               (tmp / "out2").string()) == 2,
           "malformed weight spec exits 2");

    // unknown verify suite -> exit 2
    expect(run(bin + " verify --suite nosuch --out " + (tmp / "out3").string()) == 2,
           "unknown suite exits 2");

    // unknown sweep target -> exit 2
    expect(run(bin + " sweep --target nosuch --out " + (tmp / "out4").string()) == 2,
           "unknown sweep target exits 2");

    // determinism: identical config -> byte-identical CSV
    write(tmp / "mini.cfg", "n = 2\nkmax_quad = 8\n[weights]\nw0: power(alpha=0)\n");
    std::string cmd_a = bin + " sweep --target carleson --config " + (tmp / "mini.cfg").string() +
                        " --out " + (tmp / "sweep_a").string();
    std::string cmd_b = bin + " sweep --target carleson --config " + (tmp / "mini.cfg").string() +
                        " --out " + (tmp / "sweep_b").string();
    expect(run(cmd_a) == 0 && run(cmd_b) == 0, "carleson sweep runs");
    expect(slurp(tmp / "sweep_a" / "sweep_carleson.csv") ==
               slurp(tmp / "sweep_b" / "sweep_carleson.csv"),
           "identical config gives byte-identical CSV");
    {
        std::string head = slurp(tmp / "sweep_a" / "sweep_carleson.csv");
        expect(head.rfind("mu,omega,p,q,abs_a,ratio\r\n", 0) == 0,
               "carleson CSV header and CRLF quoting");
    }

    // serial flag gives the same bytes as the parallel default
    std::string cmd_s = bin + " sweep --target carleson --config " + (tmp / "mini.cfg").string() +
                        " --serial --out " + (tmp / "sweep_s").string();
    expect(run(cmd_s) == 0, "serial sweep runs");
    expect(slurp(tmp / "sweep_s" / "sweep_carleson.csv") ==
               slurp(tmp / "sweep_a" / "sweep_carleson.csv"),
           "serial path reproduces parallel bytes");

    // criteria subcommand: single-pair corpus, summary with oracle agreement
    write(tmp / "pair.cfg",
          "n = 2\nkmax_closed = 20\n[pairs]\np0: omega=power(alpha=1), upsilon=power(alpha=0), "
          "p=2\np1: omega=power(alpha=0), upsilon=power(alpha=2), p=2\n");
    expect(run(bin + " criteria --config " + (tmp / "pair.cfg").string() + " --out " +
               (tmp / "crit").string()) == 0,
           "criteria subcommand exits 0");
    {
        std::string csv = slurp(tmp / "crit" / "criteria_summary.csv");
        expect(csv.find("p0") != std::string::npos && csv.find("bounded") != std::string::npos,
               "criteria summary lists verdicts");
        expect(csv.find("false") == std::string::npos, "oracle agrees on both pairs");
        expect(fs::exists(tmp / "crit" / "criteria_p0.json"), "criteria JSON reports written");
    }

    // n guard: out-of-range dimension -> exit 2
    expect(run(bin + " classify --n 7 --out " + (tmp / "out5").string()) == 2,
           "dimension outside [1,4] exits 2");

    std::printf(failures == 0 ? "all cli tests passed\n" : "%d cli test(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
