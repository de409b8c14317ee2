// cyclotome: classify maximal affine-invariant extended cyclic codes, build
// duadic pairs and their quantum records, and run the verification suites.
//
// Build: cmake -S . -B build && cmake --build build
// Run:   build/tools/cyclotome affine --p 5 --r 1 --m 2 --quantum
//        build/tools/cyclotome duadic --n 7 --q 2 --quantum
//        build/tools/cyclotome verify all
//        build/tools/cyclotome catalog --p 2,3,5 --r 1 --m 3 --n 30 --q 2,3
//
// Output is JSON lines by default (CSV for catalogs), byte-identical across
// runs with equal flags.  Exit codes: 0 success, 1 verification failure,
// 2 usage or precondition error (structured JSON on standard error).

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include "cyclotome/affine.hpp"
#include "cyclotome/config.hpp"
#include "cyclotome/cyclic.hpp"
#include "cyclotome/cyclotomic.hpp"
#include "cyclotome/error.hpp"
#include "cyclotome/field.hpp"
#include "cyclotome/json_io.hpp"
#include "cyclotome/quantum.hpp"
#include "cyclotome/verify.hpp"

namespace {

using cyclotome::Errc;
using cyclotome::Error;
using cyclotome::ojson;
using cyclotome::RunConfig;

std::vector<long long> parse_list(const std::string& text) {
  std::vector<long long> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      cyclotome::fail(Errc::InvalidParameters,
                      "expected a comma-separated list of integers, got '" +
                          text + "'");
    }
    pos = comma + 1;
  }
  return out;
}

cyclotome::LinearCode lin_of(long long n, const cyclotome::Field& f,
                             std::vector<long long> els, const RunConfig& cfg) {
  return as_linear(cyclotome::code_from_defining_set(
      cyclotome::make_defining_set(n, f, std::move(els), cfg)));
}

int cmd_affine(long long p, int r, int m, bool quantum,
               const std::string& format, std::ostream& out,
               const RunConfig& cfg) {
  const auto classes = cyclotome::maximal_affine_invariant_codes(p, r, m, cfg);
  std::optional<cyclotome::QuantumCodeRecord> rec;
  if (quantum) rec = cyclotome::affine_quantum_family(p, r, m, cfg);

  if (format == "csv") {
    out << cyclotome::csv_header() << "\n";
    if (rec) out << cyclotome::csv_row(*rec, 0) << "\n";
    return 0;
  }
  for (const auto& c : classes) {
    ojson line = cyclotome::classification_json(c);
    if (rec) line["quantum"] = cyclotome::record_json(*rec);
    out << line.dump() << "\n";
  }
  return 0;
}

int cmd_duadic(long long n, long long q, bool quantum, bool degenerate,
               const std::string& format, std::ostream& out,
               const RunConfig& cfg) {
  if (!cyclotome::as_prime_power(static_cast<std::uint64_t>(std::max(q, 0ll))))
    cyclotome::fail(Errc::InvalidParameters,
                    "q must be a prime power, got " + std::to_string(q));
  if (n < 3)
    cyclotome::fail(Errc::InvalidParameters,
                    "n must be at least 3, got " + std::to_string(n));
  if (n % 2 == 0)
    cyclotome::fail(Errc::EvenModulus,
                    "n must be odd, got " + std::to_string(n));
  if (std::gcd(q % n, n) != 1)
    cyclotome::fail(Errc::NotCoprime, "n and q share a factor");

  const bool csv = format == "csv";
  if (csv) out << cyclotome::csv_header() << "\n";

  if (!csv) {
    ojson existence = {{"type", "existence"},
                       {"n", n},
                       {"q", q},
                       {"exists", cyclotome::is_square_mod(q, n)}};
    out << existence.dump() << "\n";

    // The splitting enumeration stage is budget-limited.  When n is past the
    // search cap, note the skip on the error channel and keep going: the
    // record stage may still succeed (the degenerate family falls back to
    // bound-only records precisely in this regime).
    std::vector<cyclotome::Splitting> splittings;
    try {
      splittings = cyclotome::find_splittings(n, q, std::nullopt, cfg);
    } catch (const cyclotome::Error& e) {
      if (e.code() != Errc::SearchBudgetExceeded &&
          e.code() != Errc::SizeBudgetExceeded)
        throw;
      ojson note = {{"skip", "splittings"},
                    {"n", n},
                    {"q", q},
                    {"error", cyclotome::errc_name(e.code())},
                    {"detail", e.detail()}};
      std::cerr << note.dump() << "\n";
    }
    for (const auto& s : splittings)
      out << cyclotome::splitting_json(s).dump() << "\n";

    if (!splittings.empty()) {
      const auto pq = cyclotome::as_prime_power(static_cast<std::uint64_t>(q));
      const cyclotome::Field& f =
          cyclotome::Field::get(pq->first, pq->second, cfg.field_cap);
      std::vector<long long> even_set = splittings.front().s1;
      even_set.push_back(0);
      std::sort(even_set.begin(), even_set.end());
      const cyclotome::LinearCode even = lin_of(n, f, even_set, cfg);
      const cyclotome::LinearCode odd =
          lin_of(n, f, splittings.front().s1, cfg);
      ojson pair = {{"type", "classical_pair"},
                    {"n", n},
                    {"q", q},
                    {"a", splittings.front().a},
                    {"even_k", even.k()},
                    {"even_d", cyclotome::distance_json(
                                   cyclotome::min_distance(even, cfg))},
                    {"odd_k", odd.k()},
                    {"odd_d", cyclotome::distance_json(
                                  cyclotome::min_distance(odd, cfg))}};
      out << pair.dump() << "\n";
    }
  }

  if (quantum) {
    const cyclotome::QuantumCodeRecord rec =
        degenerate ? cyclotome::degenerate_duadic_family(n, q, cfg)
                   : cyclotome::duadic_quantum(n, q, cfg);
    if (csv)
      out << cyclotome::csv_row(rec, -1) << "\n";
    else
      out << cyclotome::record_json(rec).dump() << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, std::ostream& out,
               const RunConfig& cfg) {
  const auto results = cyclotome::verify_suite(suite, cfg);
  std::size_t passed = 0;
  for (const auto& r : results) {
    if (r.pass) ++passed;
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
    if (!r.detail.empty()) out << ": " << r.detail;
    out << "\n";
  }
  out << passed << "/" << results.size() << " properties passed\n";
  return passed == results.size() ? 0 : 1;
}

int cmd_catalog(const std::vector<long long>& ps, int r, int m_max,
                long long n_max, const std::vector<long long>& qs,
                const std::string& family, const std::string& format,
                std::ostream& out, const RunConfig& cfg) {
  struct Row {
    cyclotome::QuantumCodeRecord rec;
    int j;
  };
  std::vector<Row> rows;
  std::vector<ojson> notes;

  const auto note_skip = [&notes](const std::string& fam, long long a,
                                  long long b, const char* ka, const char* kb,
                                  const Error& e) {
    ojson note = ojson::object();
    note["skip"] = fam;
    note[ka] = a;
    note[kb] = b;
    note["error"] = cyclotome::errc_name(e.code());
    note["detail"] = e.detail();
    notes.push_back(std::move(note));
  };

  if (family == "affine" || family == "all") {
    for (long long p : ps)
      for (int m = r; m <= m_max; m += r) {
        try {
          rows.push_back({cyclotome::affine_quantum_family(p, r, m, cfg), 0});
        } catch (const Error& e) {
          // The excluded corner and vacuous points are clean skips, not bugs.
          if (e.code() != Errc::LemmaFiveExcluded &&
              e.code() != Errc::InvalidParameters)
            note_skip("affine_theorem6", p, m, "p", "m", e);
        }
      }
  }
  if (family == "duadic" || family == "all") {
    for (long long q : qs)
      for (long long n = 3; n <= n_max; n += 2) {
        if (std::gcd(q % n, n) != 1) continue;
        try {
          rows.push_back({cyclotome::duadic_quantum(n, q, cfg), -1});
        } catch (const Error& e) {
          if (e.code() != Errc::OrderNotOdd && e.code() != Errc::NotCoprime)
            note_skip("duadic_theorem14", n, q, "n", "q", e);
        }
        try {
          rows.push_back({cyclotome::degenerate_duadic_family(n, q, cfg), -1});
        } catch (const Error& e) {
          if (e.code() != Errc::PreconditionFailed &&
              e.code() != Errc::InvalidParameters &&
              e.code() != Errc::NotCoprime)
            note_skip("duadic_theorem15", n, q, "n", "q", e);
        }
      }
  }

  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.rec.family, a.rec.q, a.rec.n, a.j) <
           std::tie(b.rec.family, b.rec.q, b.rec.n, b.j);
  });

  for (const auto& note : notes) std::cerr << note.dump() << "\n";

  if (format == "json") {
    for (const auto& row : rows)
      out << cyclotome::record_json(row.rec).dump() << "\n";
  } else {
    out << cyclotome::csv_header() << "\n";
    for (const auto& row : rows)
      out << cyclotome::csv_row(row.rec, row.j) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cyclotome: maximal affine-invariant extended cyclic codes, duadic "
      "pairs, and the quantum codes built from them"};
  app.require_subcommand(1);

  long long p = 0, n = 0, q = 0;
  int r = 1, m = 1;
  bool quantum = false, degenerate = false;
  std::string format;
  std::string out_path;
  std::string suite = "all";
  std::uint64_t budget_enum = 0;
  int budget_weight = 0;

  std::vector<CLI::Option*> enum_opts, weight_opts;
  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format,
                    "output format: json or csv (default json, csv for "
                    "catalogs)")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", out_path, "write standard output to this file");
    enum_opts.push_back(cmd->add_option(
        "--budget-enum", budget_enum,
        "exact-enumeration budget in codewords (default 2^24)"));
    weight_opts.push_back(cmd->add_option(
        "--budget-weight", budget_weight,
        "highest weight the support search certifies (default 8)"));
  };

  CLI::App* affine = app.add_subcommand(
      "affine", "classify the maximal affine-invariant codes for (p, r, m)");
  affine->add_option("--p", p, "characteristic")->required();
  affine->add_option("--r", r, "alphabet degree: the field is GF(p^r)")
      ->required();
  affine->add_option("--m", m, "length exponent: codes of length p^m")
      ->required();
  affine->add_flag("--quantum", quantum, "emit the derived quantum record");
  add_common(affine);

  CLI::App* duadic = app.add_subcommand(
      "duadic", "splittings, duadic pairs, and their records for (n, q)");
  duadic->add_option("--n", n, "odd modulus")->required();
  duadic->add_option("--q", q, "alphabet size, a prime power")->required();
  duadic->add_flag("--quantum", quantum, "emit the derived quantum record");
  duadic->add_flag("--degenerate", degenerate,
                   "build the degenerate family instead of the odd-like pair");
  add_common(duadic);

  CLI::App* verify = app.add_subcommand(
      "verify", "run a property suite: orders, affine, duadic, css, or all");
  verify->add_option("suite", suite, "suite name")
      ->check(CLI::IsMember({"orders", "affine", "duadic", "css", "all"}));
  add_common(verify);

  CLI::App* catalog = app.add_subcommand(
      "catalog", "tabulate every record over a parameter grid");
  std::string p_list = "2,3,5", q_list = "2,3", family = "all";
  catalog->add_option("--p", p_list, "characteristics, comma separated");
  catalog->add_option("--r", r, "alphabet degree for the affine grid");
  catalog->add_option("--m", m, "largest length exponent for the affine grid")
      ->default_val(3);
  catalog->add_option("--n", n, "largest odd modulus for the duadic grid")
      ->default_val(30);
  catalog->add_option("--q", q_list, "duadic alphabet sizes, comma separated");
  catalog->add_option("--family", family, "which families to tabulate")
      ->check(CLI::IsMember({"affine", "duadic", "all"}));
  add_common(catalog);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    ojson err = {{"error", "InvalidParameters"}, {"detail", e.what()}};
    std::cerr << err.dump() << "\n";
    return 2;
  }

  try {
    if (format.empty()) format = *catalog ? "csv" : "json";
    RunConfig cfg = RunConfig::from_env();
    for (const CLI::Option* o : enum_opts)
      if (o->count() > 0) cfg.enumeration_budget = budget_enum;
    for (const CLI::Option* o : weight_opts)
      if (o->count() > 0) cfg.support_weight_max = budget_weight;
    if (cfg.enumeration_budget == 0 || cfg.support_weight_max < 1)
      cyclotome::fail(Errc::InvalidParameters, "budgets must be positive");

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file)
        cyclotome::fail(Errc::InvalidParameters,
                        "cannot open '" + out_path + "' for writing");
      out = &file;
    }

    if (*affine) return cmd_affine(p, r, m, quantum, format, *out, cfg);
    if (*duadic)
      return cmd_duadic(n, q, quantum, degenerate, format, *out, cfg);
    if (*verify) return cmd_verify(suite, *out, cfg);
    return cmd_catalog(parse_list(p_list), r, m, n, parse_list(q_list), family,
                       format, *out, cfg);
  } catch (const Error& e) {
    std::cerr << cyclotome::error_json(e).dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    ojson err = {{"error", "Internal"}, {"detail", e.what()}};
    std::cerr << err.dump() << "\n";
    return 2;
  }
}
