// Golden tests for the command-line interface: byte-stable output and the
// documented exit codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int code = -1;
  std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(GREENFORM_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string tmp_path(const std::string& name) {
  return std::string("/tmp/greenform-cli-test-") + std::to_string(getpid()) +
         "-" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

const char* kUniserial5 =
    "category uniserial-5\n"
    "flag hypothesis-4.2 false\n"
    "flag serre-trivial true\n"
    "orbit V1V4 period 2\n"
    "orbit V2V3 period 2\n"
    "hom V1V4 V1V4 : 1 + t\n"
    "hom V1V4 V2V3 : 1 + t\n"
    "hom V2V3 V1V4 : 1 + t\n"
    "hom V2V3 V2V3 : 2 + 2t\n"
    "triangle V1V4 | V2V3 | V1V4\n"
    "triangle V2V3 | V1V4 + V2V3[1] | V2V3\n"
    "triangle V2V3[1] | V1V4[1] + V2V3 | V2V3[1]\n"
    "triangle V1V4[1] | V2V3[1] | V1V4[1]\n";

const char* kDualNumbers1 =
    "category dual-numbers-1\n"
    "flag hypothesis-4.2 true\n"
    "flag serre-trivial true\n"
    "orbit C0 period inf\n"
    "orbit C1 period inf\n"
    "hom C0 C0 : 2\n"
    "hom C0 C1 : t^-1 + 1\n"
    "hom C1 C0 : 1 + t\n"
    "hom C1 C1 : t^-1 + 2 + t\n"
    "triangle C0[-1] | C1[-1] | C0\n";

}  // namespace

TEST_CASE("oracle uniserial emits the canonical file") {
  std::string path = tmp_path("u5.cat");
  RunResult r = run_cli("oracle uniserial 5 --emit " + path);
  CHECK(r.code == 0);
  CHECK(r.output.empty());
  CHECK(read_file(path) == kUniserial5);

  RunResult to_stdout = run_cli("oracle uniserial 5");
  CHECK(to_stdout.code == 0);
  CHECK(to_stdout.output == kUniserial5);
}

TEST_CASE("oracle dual-numbers emits the canonical file") {
  RunResult r = run_cli("oracle dual-numbers 1");
  CHECK(r.code == 0);
  CHECK(r.output == kDualNumbers1);
}

TEST_CASE("gram output is byte stable") {
  std::string path = tmp_path("u5-gram.cat");
  REQUIRE(run_cli("oracle uniserial 5 --emit " + path).code == 0);
  const std::string expected =
      "objects: V1V4 V1V4[1] V2V3 V2V3[1]\n"
      "1 1 1 1\n"
      "1 1 1 1\n"
      "1 1 2 2\n"
      "1 1 2 2\n";
  RunResult first = run_cli("gram " + path);
  CHECK(first.code == 0);
  CHECK(first.output == expected);
  RunResult second = run_cli("gram " + path);
  CHECK(second.output == first.output);
}

TEST_CASE("kernel output") {
  std::string path = tmp_path("u5-kernel.cat");
  REQUIRE(run_cli("oracle uniserial 5 --emit " + path).code == 0);
  RunResult r = run_cli("kernel " + path);
  CHECK(r.code == 0);
  CHECK(r.output ==
        "closed-form kernel basis:\n"
        "  [V1V4] - [V1V4[1]]\n"
        "  [V2V3] - [V2V3[1]]\n"
        "brute-force right kernel basis:\n"
        "  (1, -1, 0, 0)\n"
        "  (0, 0, 1, -1)\n"
        "brute-force left kernel basis:\n"
        "  (1, -1, 0, 0)\n"
        "  (0, 0, 1, -1)\n"
        "LATTICES EQUAL\n");
}

TEST_CASE("prop31 verdict") {
  std::string path = tmp_path("u6.cat");
  REQUIRE(run_cli("oracle uniserial 6 --emit " + path).code == 0);
  RunResult r = run_cli("prop31 " + path);
  CHECK(r.code == 0);
  CHECK(r.output == "prop31: pass (25 checks over 5 triangles)\n");
}

TEST_CASE("tform requires hypothesis 4.2") {
  std::string path = tmp_path("u5-tform.cat");
  REQUIRE(run_cli("oracle uniserial 5 --emit " + path).code == 0);
  RunResult r = run_cli("tform " + path + " V1 V2");
  CHECK(r.code == 1);
  CHECK(r.output.find("hypothesis 4.2 required") != std::string::npos);
}

TEST_CASE("tform and euler on the component") {
  std::string path = tmp_path("d2.cat");
  REQUIRE(run_cli("oracle dual-numbers 2 --emit " + path).code == 0);
  RunResult form = run_cli("tform " + path + " C0 C1");
  CHECK(form.code == 0);
  CHECK(form.output == "t^-1 + 1\n");
  RunResult euler = run_cli("euler " + path + " C1 C1");
  CHECK(euler.code == 0);
  CHECK(euler.output == "0\n");
  RunResult unknown = run_cli("tform " + path + " C0 C9");
  CHECK(unknown.code == 2);
}

TEST_CASE("dual element and duality verdict") {
  std::string path = tmp_path("d2-dual.cat");
  REQUIRE(run_cli("oracle dual-numbers 2 --emit " + path).code == 0);
  RunResult r = run_cli("dual " + path + " 1");
  CHECK(r.code == 0);
  CHECK(r.output ==
        "dual element: ((-t)/(1 + t)) C0 + (1) C1 + ((-1)/(1 + t)) C2\n"
        "duality check: ok\n");
}

TEST_CASE("hermitian verdicts") {
  std::string good = tmp_path("d1-hermitian.cat");
  REQUIRE(run_cli("oracle dual-numbers 1 --emit " + good).code == 0);
  RunResult ok = run_cli("hermitian " + good);
  CHECK(ok.code == 0);
  CHECK(ok.output == "hermitian: ok\n");

  std::string bad = tmp_path("skew.cat");
  std::ofstream(bad) << "category skew\nflag hypothesis-4.2 true\n"
                        "orbit A period inf\norbit B period inf\n"
                        "hom A A : 1\nhom B B : 1\n"
                        "hom A B : t\nhom B A : t\n";
  RunResult fail = run_cli("hermitian " + bad);
  CHECK(fail.code == 1);
  CHECK(fail.output.find("hermitian: FAIL") != std::string::npos);
}

TEST_CASE("validate verdicts") {
  std::string path = tmp_path("d1-validate.cat");
  REQUIRE(run_cli("oracle dual-numbers 1 --emit " + path).code == 0);
  RunResult ok = run_cli("validate " + path);
  CHECK(ok.code == 0);
  CHECK(ok.output == "valid\n");

  std::string bad = tmp_path("invalid.cat");
  std::ofstream(bad) << "category bad\nflag hypothesis-4.2 true\n"
                        "orbit A period 2\nhom A A : 1\n";
  RunResult fail = run_cli("validate " + bad);
  CHECK(fail.code == 1);
  CHECK(fail.output.find("hypothesis-4.2") != std::string::npos);

  std::string broken = tmp_path("broken.cat");
  std::ofstream(broken) << "category broken\norbit A period 2\norbit A "
                           "period 2\n";
  RunResult parse_error = run_cli("validate " + broken);
  CHECK(parse_error.code == 2);
  CHECK(parse_error.output.find("line 3") != std::string::npos);
}

TEST_CASE("orbits summary") {
  std::string path = tmp_path("d2-orbits.cat");
  REQUIRE(run_cli("oracle dual-numbers 2 --emit " + path).code == 0);
  RunResult r = run_cli("orbits " + path);
  CHECK(r.code == 0);
  CHECK(r.output ==
        "C0: free of rank 1 over Z[t,t^-1]\n"
        "C1: free of rank 1 over Z[t,t^-1]\n"
        "C2: free of rank 1 over Z[t,t^-1]\n"
        "Q(t)-dimension: 3\n");
}

TEST_CASE("za form methods agree") {
  RunResult both = run_cli("za form --self \"2\" 1 1 --method both");
  CHECK(both.code == 0);
  CHECK(both.output == "t^-1 + 2 + t\nt^-1 + 2 + t\nAGREE\n");

  RunResult closed = run_cli("za form --self \"2\" 1 1");
  CHECK(closed.code == 0);
  CHECK(closed.output == "t^-1 + 2 + t\n");

  RunResult cross =
      run_cli("za form --self \"2\" --cross \"1\" 1 1 --method both");
  CHECK(cross.code == 0);
  CHECK(cross.output == "t^-1 + 2 + t\nt^-1 + 2 + t\nAGREE\n");

  RunResult invalid = run_cli("za form --self \"1 + t\" 0 0");
  CHECK(invalid.code == 1);
  CHECK(invalid.output.find("palindromic") != std::string::npos);

  RunResult malformed = run_cli("za form --self \"1 +\" 0 0");
  CHECK(malformed.code == 2);
}

TEST_CASE("za triangles listing") {
  RunResult r = run_cli("za triangles 2");
  CHECK(r.code == 0);
  CHECK(r.output ==
        "triangle C0[-1] | C1[-1] | C0\n"
        "triangle C1[-1] | C2[-1] + C0 | C1\n");
}

TEST_CASE("za brick classification") {
  RunResult r = run_cli("za brick --self \"2 + t + t^-1\" --max 2");
  CHECK(r.code == 0);
  CHECK(r.output ==
        "rim clue: coefficient of t is nonzero (the object is not on the "
        "rim)\n"
        "m=0: endo-dim 2, dim-2 strip yes\n"
        "m=1: endo-dim 4, dim-2 strip no\n"
        "m=2: endo-dim 6, dim-2 strip no\n");

  RunResult stalk = run_cli("za brick --self \"1\" --max 0");
  CHECK(stalk.code == 0);
  CHECK(stalk.output.find("simple projective stalk") != std::string::npos);
}

TEST_CASE("window too small is a math failure") {
  RunResult r = run_cli("oracle dual-numbers 2 --window 2");
  CHECK(r.code == 1);
  CHECK(r.output.find("window") != std::string::npos);
}

TEST_CASE("gram needs finite orbits") {
  std::string path = tmp_path("d1-gram.cat");
  REQUIRE(run_cli("oracle dual-numbers 1 --emit " + path).code == 0);
  RunResult r = run_cli("gram " + path);
  CHECK(r.code == 1);
  CHECK(r.output.find("infinite") != std::string::npos);
}

TEST_CASE("prop31 reports corrupted tables") {
  std::string bad = tmp_path("u5-corrupt.cat");
  std::string text = kUniserial5;
  std::size_t at = text.find("hom V2V3 V2V3 : 2 + 2t");
  REQUIRE(at != std::string::npos);
  text.replace(at, std::string("hom V2V3 V2V3 : 2 + 2t").size(),
               "hom V2V3 V2V3 : 2 + 3t");
  std::ofstream(bad) << text;
  RunResult r = run_cli("prop31 " + bad);
  CHECK(r.code == 1);
  CHECK(r.output.find("prop31: FAIL") != std::string::npos);
  CHECK(r.output.find("expected") != std::string::npos);
}

TEST_CASE("kernel flags tables whose closed form is not the kernel") {
  // An even orbit whose Gram matrix is nonsingular cannot come from a
  // category with AR triangles; the two kernel routes then disagree.
  std::string path = tmp_path("nonsingular.cat");
  std::ofstream(path) << "category synthetic\norbit A period 2\n"
                         "hom A A : 2 + t\n";
  RunResult r = run_cli("kernel " + path);
  CHECK(r.code == 1);
  CHECK(r.output.find("LATTICES DIFFER") != std::string::npos);
}

TEST_CASE("euler needs hypothesis 4.2") {
  std::string path = tmp_path("u5-euler.cat");
  REQUIRE(run_cli("oracle uniserial 5 --emit " + path).code == 0);
  RunResult r = run_cli("euler " + path + " V1V4 V2V3");
  CHECK(r.code == 1);
  CHECK(r.output.find("hypothesis 4.2 required") != std::string::npos);
}

TEST_CASE("dual rejects out-of-range triangle indices") {
  std::string path = tmp_path("d1-index.cat");
  REQUIRE(run_cli("oracle dual-numbers 1 --emit " + path).code == 0);
  RunResult r = run_cli("dual " + path + " 7");
  CHECK(r.code == 2);
  CHECK(r.output.find("out of range") != std::string::npos);
}

TEST_CASE("emit failures are reported") {
  RunResult r = run_cli("oracle uniserial 4 --emit /nonexistent/dir/out.cat");
  CHECK(r.code == 2);
  CHECK(r.output.find("cannot write") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("gram").code == 2);
  CHECK(run_cli("gram /nonexistent/file.cat").code == 2);
  CHECK(run_cli("za form --self \"2\" 1 1 --method sideways").code == 2);
  CHECK(run_cli("kernel --frobnicate x").code == 2);
  CHECK(run_cli("").code == 2);
}

TEST_CASE("help exits cleanly") {
  RunResult r = run_cli("--help");
  CHECK(r.code == 0);
  CHECK(r.output.find("Grothendieck") != std::string::npos);
}
