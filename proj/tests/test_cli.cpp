// End-to-end checks of the cyclotome binary: wire formats, exit codes,
// deterministic output, and the structured error channel.  The binary path
// arrives in CYCLOTOME_BIN (set by the test harness).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
  int status = -1;
  std::string output;
};

std::string binary() {
  const char* bin = std::getenv("CYCLOTOME_BIN");
  if (!bin) FAIL("CYCLOTOME_BIN is not set");
  return bin ? bin : "";
}

// Runs a full shell command and captures whatever the redirections leave on
// the pipe.
RunResult run_shell(const std::string& command) {
  RunResult res;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    FAIL("popen failed for: " << command);
    return res;
  }
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, got);
  const int st = pclose(pipe);
  res.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return res;
}

RunResult run_stdout(const std::string& args) {
  return run_shell(binary() + " " + args + " 2>/dev/null");
}

RunResult run_stderr(const std::string& args) {
  return run_shell(binary() + " " + args + " 2>&1 1>/dev/null");
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("affine classification with quantum record") {
  const RunResult r = run_stdout("affine --p 5 --r 1 --m 2 --quantum");
  CHECK(r.status == 0);
  CHECK(contains(r.output, "\"defining_set\":[1,5]"));
  CHECK(contains(r.output, "\"affine_invariant\":true"));
  CHECK(contains(r.output, "\"dual_contained\":true"));
  CHECK(contains(r.output, "\"n\":25,\"k\":19"));
  CHECK(contains(r.output, "\"kind\":\"exact\",\"d\":3"));
  CHECK(contains(r.output, "\"family\":\"affine_theorem6\""));
  CHECK(contains(r.output, "\"singleton_ok\":true"));
}

TEST_CASE("affine csv format") {
  const RunResult r =
      run_stdout("affine --p 5 --r 1 --m 2 --quantum --format csv");
  CHECK(r.status == 0);
  CHECK(r.output.rfind("family,q,n,j,k,d_kind,d,d_lo,d_hi,method,", 0) == 0);
  CHECK(contains(r.output, "affine_theorem6,5,25,0,19,exact,3,,,"));
}

TEST_CASE("excluded affine corner leaves stdout clean") {
  const RunResult out = run_stdout("affine --p 2 --r 1 --m 2 --quantum");
  CHECK(out.status == 2);
  CHECK(out.output.empty());
  const RunResult err = run_stderr("affine --p 2 --r 1 --m 2 --quantum");
  CHECK(err.status == 2);
  CHECK(contains(err.output, "\"error\":\"LemmaFiveExcluded\""));
}

TEST_CASE("duadic pipeline at n = 7") {
  const RunResult r = run_stdout("duadic --n 7 --q 2 --quantum");
  CHECK(r.status == 0);
  CHECK(contains(r.output, "\"type\":\"existence\""));
  CHECK(contains(r.output, "\"exists\":true"));
  CHECK(contains(r.output, "\"type\":\"splitting\""));
  CHECK(contains(r.output, "\"a\":3"));
  CHECK(contains(r.output, "\"s1\":[1,2,4]"));
  CHECK(contains(r.output, "\"type\":\"classical_pair\""));
  CHECK(contains(r.output, "\"even_k\":3"));
  CHECK(contains(r.output, "\"odd_k\":4"));
  CHECK(contains(r.output, "\"n\":7,\"k\":1"));
  CHECK(contains(r.output, "\"kind\":\"exact\",\"d\":3"));
  CHECK(contains(r.output, "\"family\":\"duadic_theorem14\""));
}

TEST_CASE("duadic existence can be negative without error") {
  const RunResult r = run_stdout("duadic --n 5 --q 2");
  CHECK(r.status == 0);
  CHECK(contains(r.output, "\"exists\":false"));
  CHECK_FALSE(contains(r.output, "\"type\":\"splitting\""));
  CHECK_FALSE(contains(r.output, "classical_pair"));
}

TEST_CASE("degenerate record request fails honestly at n = 27") {
  // ord_27(2) is even, so no -2 splitting exists; classification output is
  // still printed before the record construction gives up.
  const RunResult out = run_stdout("duadic --n 27 --q 2 --quantum --degenerate");
  CHECK(out.status == 2);
  CHECK(contains(out.output, "\"type\":\"existence\""));
  CHECK(contains(out.output, "\"exists\":false"));
  const RunResult err = run_stderr("duadic --n 27 --q 2 --quantum --degenerate");
  CHECK(err.status == 2);
  CHECK(contains(err.output, "\"error\":\"NoSplitting\""));
}

TEST_CASE("degenerate record at n = 343 survives the splitting-search cap") {
  // n = 343 is past the splitting enumeration cap, so that stage is skipped
  // with a note on stderr and the record falls back to square-root bounds.
  const std::string args = "duadic --n 343 --q 2 --quantum --degenerate";
  const RunResult out = run_stdout(args);
  CHECK(out.status == 0);
  CHECK(contains(out.output, "\"exists\":true"));
  CHECK(contains(out.output, "\"d_lo\":19,\"d_hi\":172"));
  CHECK(contains(out.output, "\"pure_to\":7,\"degenerate\":true"));
  CHECK(contains(out.output, "splitting_unconstructed[n=343,q2=4]"));
  const RunResult err = run_stderr(args);
  CHECK(contains(err.output, "\"skip\":\"splittings\""));
  CHECK(contains(err.output, "\"error\":\"SearchBudgetExceeded\""));
}

TEST_CASE("duadic guard clauses map to exit 2") {
  CHECK(run_stdout("duadic --n 4 --q 3").status == 2);
  CHECK(contains(run_stderr("duadic --n 4 --q 3").output,
                 "\"error\":\"EvenModulus\""));
  CHECK(contains(run_stderr("duadic --n 9 --q 3").output,
                 "\"error\":\"NotCoprime\""));
  CHECK(contains(run_stderr("duadic --n 7 --q 6").output,
                 "\"error\":\"InvalidParameters\""));
}

TEST_CASE("catalog output is deterministic") {
  const std::string args = "catalog --p 5 --r 1 --m 2 --n 12 --q 2,3";
  const RunResult a = run_stdout(args);
  const RunResult b = run_stdout(args);
  CHECK(a.status == 0);
  CHECK(b.status == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.rfind("family,q,n,j,k,", 0) == 0);
  CHECK(contains(a.output, "affine_theorem6,5,5,0,1,exact,3,,,"));
  CHECK(contains(a.output, "affine_theorem6,5,25,0,19,exact,3,,,"));
  CHECK(contains(a.output, "duadic_theorem14,2,7,,1,exact,3,,,"));
  CHECK(contains(a.output, "duadic_theorem14,3,11,,1,exact,5,,,"));

  // Points where the -q multiplier fixes a coset are reported as structured
  // skips on the error channel, not silently dropped.
  const RunResult err = run_stderr(args);
  CHECK(contains(err.output,
                 "\"skip\":\"duadic_theorem14\",\"n\":3,\"q\":2,"
                 "\"error\":\"NoSplitting\""));
  CHECK(contains(err.output,
                 "\"skip\":\"duadic_theorem14\",\"n\":7,\"q\":3,"
                 "\"error\":\"NoSplitting\""));
}

TEST_CASE("catalog rows respect the family filter") {
  const RunResult r =
      run_stdout("catalog --p 5 --r 1 --m 2 --n 12 --q 2,3 --family affine");
  CHECK(r.status == 0);
  CHECK(contains(r.output, "affine_theorem6"));
  CHECK_FALSE(contains(r.output, "duadic_theorem14"));
}

TEST_CASE("verify orders passes and is quiet about timings") {
  const RunResult r = run_stdout("verify orders");
  CHECK(r.status == 0);
  CHECK(contains(r.output, "[PASS]"));
  CHECK_FALSE(contains(r.output, "[FAIL]"));
  CHECK(contains(r.output, "properties passed"));
  const RunResult again = run_stdout("verify orders");
  CHECK(again.output == r.output);  // byte-identical across runs
}

TEST_CASE("verify duadic reports the known failing properties") {
  // Two properties in this suite probe a multiplier equivalence that does
  // not hold when ord_n(q) is even; they fail by design and drive exit 1.
  const RunResult r = run_stdout("verify duadic");
  CHECK(r.status == 1);
  CHECK(contains(r.output, "[FAIL]"));
  CHECK(contains(r.output, "[PASS]"));
}

TEST_CASE("usage errors exit 2 with structured detail") {
  CHECK(run_stdout("affine --p 5 --r 1").status == 2);  // --m missing
  CHECK(contains(run_stderr("affine --p 5 --r 1").output,
                 "\"error\":\"InvalidParameters\""));
  CHECK(run_stdout("verify bogus").status == 2);
  CHECK(run_stdout("").status == 2);  // a subcommand is required
  CHECK(run_stdout("duadic --n 7 --q 2 --budget-enum 0").status == 2);
}

TEST_CASE("budget environment variable reroutes the search") {
  const RunResult r = run_shell("CYCLOTOME_BUDGET=1 " + binary() +
                                " duadic --n 7 --q 2 --quantum 2>/dev/null");
  CHECK(r.status == 0);
  CHECK(contains(r.output, "\"method\":\"support_search\""));
  CHECK(contains(r.output, "\"kind\":\"exact\",\"d\":3"));
}

TEST_CASE("out flag writes the stream to a file") {
  const std::string path = "cyclotome_cli_out_test.csv";
  std::remove(path.c_str());
  const RunResult r = run_stdout(
      "catalog --p 5 --r 1 --m 1 --n 3 --q 2 --out " + path);
  CHECK(r.status == 0);
  CHECK(r.output.empty());
  FILE* f = std::fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  char buf[64] = {0};
  const std::size_t got = fread(buf, 1, sizeof buf - 1, f);
  std::fclose(f);
  std::remove(path.c_str());
  CHECK(got > 0);
  CHECK(std::string(buf).rfind("family,", 0) == 0);
}
