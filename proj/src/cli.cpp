#include "staircase/cli.hpp"

#include "staircase/recurrence.hpp"
#include "staircase/transfer.hpp"
#include "staircase/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace staircase {

namespace {

using nlohmann::json;

const std::vector<std::string> kFamilyNames{"path", "cycle", "grid", "rt", "kg"};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Family family_of(const std::string& name) {
  if (auto f = parse_family(name)) return *f;
  throw UsageError("unknown family '" + name + "'");
}

json count_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::int64_t>::max()) return static_cast<std::int64_t>(v);
  return v.str();
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

struct Invocation {
  CliConfig config;
  std::string command;
  std::string family;
  int k = 3;
  int n = 1;
  int n_max = 7;
  int terms = 40;
  std::string method = "transfer";
  bool refined = false;
  bool check_printed = false;
  std::string suite = "all";
  std::vector<int> ks;
  std::vector<std::string> xs;
  int lemma_n_max = 30;
  std::string output_path;

  json config_json() const {
    json j = {{"precision", config.precision},
              {"order", config.order},
              {"tolerance", config.tolerance},
              {"budget", config.budget},
              {"format", config.format}};
    if (config.timestamp) j["generated"] = utc_now();
    return j;
  }

  std::string header(char comment = '#') const {
    std::ostringstream h;
    h << comment << " staircase " << command << '\n';
    h << comment << " precision=" << config.precision << " order=" << config.order << " tolerance=" << config.tolerance
      << " budget=" << config.budget << '\n';
    if (config.timestamp) h << comment << " generated " << utc_now() << '\n';
    return h.str();
  }

  json wrap(json result) const { return {{"command", command}, {"config", config_json()}, {"result", std::move(result)}}; }

  void require_format(std::initializer_list<std::string_view> allowed) const {
    if (std::find(allowed.begin(), allowed.end(), config.format) == allowed.end())
      throw UsageError("--format " + config.format + " is not available for " + command);
  }
};

std::string run_count(const Invocation& in) {
  const Family family = family_of(in.family);
  const FamilySpec spec{family, in.n};
  spec.validate();
  if (in.k < 1) throw UsageError("--k must be at least 1");
  const bool oracle = in.method == "oracle";
  std::ostringstream out;
  if (in.refined) {
    if (!is_ladder(family)) throw UsageError("--refined needs a two-row family (grid, rt, kg)");
    const RefinedTable t = oracle ? refined_oracle(spec, in.k, in.config.budget) : transfer_refined(family, in.k, in.n);
    if (in.config.format == "json") {
      json entries = json::object();
      for (const auto& [s, c] : t.entries) entries[to_string(s)] = count_json(c);
      out << in.wrap({{"family", in.family}, {"k", in.k}, {"n", in.n}, {"method", in.method}, {"refined", entries}})
                 .dump(2)
          << '\n';
    } else if (in.config.format == "csv") {
      out << "family,k,n,state,count\n";
      for (const auto& [s, c] : t.entries) out << in.family << ',' << in.k << ',' << in.n << ',' << to_string(s) << ',' << c << '\n';
    } else {
      out << in.header();
      for (const auto& [s, c] : t.entries) out << to_string(s) << ' ' << c << '\n';
    }
    return out.str();
  }
  const BigInt c = oracle ? enumerate_count(spec, in.k, in.config.budget) : transfer_count(family, in.k, in.n);
  if (in.config.format == "json")
    out << in.wrap({{"family", in.family}, {"k", in.k}, {"n", in.n}, {"method", in.method}, {"count", count_json(c)}})
               .dump(2)
        << '\n';
  else if (in.config.format == "csv")
    out << "family,k,n,count\n" << in.family << ',' << in.k << ',' << in.n << ',' << c << '\n';
  else
    out << in.header() << c << '\n';
  return out.str();
}

std::string run_table(const Invocation& in) {
  if (in.k < 1 || in.n_max < 1) throw UsageError("--k and --n-max must be at least 1");
  std::vector<std::pair<Family, std::vector<BigInt>>> rows;
  for (Family f : kLadderFamilies) {
    std::vector<BigInt> counts;
    if (in.method == "oracle") {
      for (int n = 1; n <= in.n_max; ++n) counts.push_back(enumerate_count({f, n}, in.k, in.config.budget));
    } else {
      counts = transfer_counts(f, in.k, in.n_max);
    }
    rows.emplace_back(f, std::move(counts));
  }
  std::ostringstream out;
  if (in.config.format == "json") {
    json result = {{"k", in.k}, {"n_max", in.n_max}, {"method", in.method}};
    for (const auto& [f, counts] : rows) {
      json arr = json::array();
      for (const auto& c : counts) arr.push_back(count_json(c));
      result[std::string(family_name(f))] = arr;
    }
    out << in.wrap(result).dump(2) << '\n';
  } else if (in.config.format == "csv") {
    out << "family,k,n,count\n";
    for (const auto& [f, counts] : rows)
      for (int n = 1; n <= in.n_max; ++n) out << family_name(f) << ',' << in.k << ',' << n << ',' << counts[static_cast<std::size_t>(n - 1)] << '\n';
  } else {
    std::size_t width = 2;
    for (const auto& [f, counts] : rows)
      for (const auto& c : counts) width = std::max(width, c.str().size());
    out << in.header() << std::left << std::setw(6) << "n";
    for (int n = 1; n <= in.n_max; ++n) out << ' ' << std::right << std::setw(static_cast<int>(width)) << n;
    out << '\n';
    for (const auto& [f, counts] : rows) {
      out << std::left << std::setw(6) << family_name(f);
      for (const auto& c : counts) out << ' ' << std::right << std::setw(static_cast<int>(width)) << c.str();
      out << '\n';
    }
  }
  return out.str();
}

std::string run_gf(const Invocation& in, int& status) {
  const Family family = family_of(in.family);
  if (in.k < 1) throw UsageError("--k must be at least 1");
  const RationalFunction gf = transfer_gf(family, in.k);
  std::ostringstream out;
  json result = {{"family", in.family}, {"k", in.k}, {"gf", to_json(gf)}, {"text", to_string(gf)}};
  std::string printed_block;
  if (in.check_printed) {
    const PublishedGF e = published_gf(family, in.k);
    if (e.status == GFStatus::Discrepant) status = kExitFailedCheck;
    json check = {{"printed", std::string(e.printed_text)},
                  {"status", std::string(to_string(e.status))},
                  {"numerator_matches", e.numerator_matches}};
    if (e.denominator_sign_flips) check["denominator_sign_flips"] = *e.denominator_sign_flips;
    if (!e.known_erratum.empty()) check["known_misprint"] = std::string(e.known_erratum);
    result["check"] = check;
    std::ostringstream b;
    b << "printed: " << e.printed_text << '\n' << "status: " << to_string(e.status) << '\n';
    if (e.status == GFStatus::Discrepant) {
      b << "numerator: " << (e.numerator_matches ? "matches" : "differs") << '\n';
      if (e.denominator_sign_flips) b << "denominator: differs in " << *e.denominator_sign_flips << " sign(s)\n";
    }
    if (!e.known_erratum.empty()) b << "known misprint: " << e.known_erratum << '\n';
    printed_block = b.str();
  }
  if (in.config.format == "json") {
    out << in.wrap(result).dump(2) << '\n';
  } else {
    out << in.header();
    if (family == Family::Cycle) out << "# sum over n >= 1 of trace(A^n) x^n\n";
    out << (in.check_printed ? "derived: " : "") << to_string(gf) << '\n' << printed_block;
  }
  return out.str();
}

std::string run_recurrence(const Invocation& in, int& status) {
  const Family family = family_of(in.family);
  if (in.k < 1) throw UsageError("--k must be at least 1");
  if (in.terms < 5) throw UsageError("--terms must be at least 5");
  const std::size_t max_order = static_cast<std::size_t>(in.terms - 3) / 2;
  const std::vector<BigInt> seq = transfer_counts(family, in.k, in.terms);
  const std::optional<Recurrence> r = minimal_recurrence(seq, max_order);
  std::ostringstream out;
  if (!r) {
    status = kExitFailedCheck;
    if (in.config.format == "json") out << in.wrap({{"found", false}, {"max_order", max_order}}).dump(2) << '\n';
    else out << in.header() << "no recurrence of order <= " << max_order << " in " << in.terms << " terms\n";
    return out.str();
  }
  if (in.config.format == "json") {
    json coeffs = json::array();
    for (const auto& c : r->coefficients) coeffs.push_back(c.str());
    out << in.wrap({{"found", true},
                    {"family", in.family},
                    {"k", in.k},
                    {"order", r->order()},
                    {"coefficients", coeffs},
                    {"denominator", to_json(r->denominator())}})
               .dump(2)
        << '\n';
    return out.str();
  }
  std::string rhs;
  for (std::size_t i = 0; i < r->order(); ++i) {
    const Rational& c = r->coefficients[i];
    if (c == 0) continue;
    const Rational m = c < 0 ? Rational(-c) : c;
    rhs += rhs.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    if (m != 1) rhs += m.str() + "*";
    rhs += "a(n-" + std::to_string(i + 1) + ")";
  }
  out << in.header() << "a(n) = " << rhs << '\n'
      << "order " << r->order() << '\n'
      << "denominator " << to_string(r->denominator()) << '\n';
  return out.str();
}

std::string run_verify(const Invocation& in, int& status) {
  in.require_format({"text", "json"});
  SuiteOptions options;
  options.ks = in.ks;
  for (const auto& x : in.xs) options.xs.push_back(parse_rational(x));
  options.order = in.config.order;
  options.tolerance = in.config.tolerance;
  options.lemma_n_max = in.lemma_n_max;
  const std::vector<VerificationReport> reports = run_suite(in.suite, options);
  if (!std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; })) status = kExitFailedCheck;
  if (in.config.format == "json")
    return in.wrap({{"suite", in.suite}, {"reports", to_json(std::span<const VerificationReport>(reports))}}).dump(2) + "\n";
  return in.header() + render_text(reports);
}

std::string run_bfile(const Invocation& in) {
  in.require_format({"text"});
  const Family family = family_of(in.family);
  if (in.k < 1 || in.n_max < 1) throw UsageError("--k and --n-max must be at least 1");
  const std::vector<BigInt> counts = transfer_counts(family, in.k, in.n_max);
  std::ostringstream out;
  out << in.header() << "# " << family_notation(family) << ", k=" << in.k << '\n';
  for (int n = 1; n <= in.n_max; ++n) out << n << ' ' << counts[static_cast<std::size_t>(n - 1)] << '\n';
  if (in.output_path.empty()) return out.str();
  std::ofstream file(in.output_path);
  if (!file) throw std::runtime_error("cannot write " + in.output_path);
  file << out.str();
  return "";
}

unsigned default_precision() {
  const char* env = std::getenv("STAIRCASE_PRECISION");
  if (!env || !*env) return kDefaultPrecision;
  try {
    const long v = std::stol(env);
    if (v >= 20 && v <= 10000) return static_cast<unsigned>(v);
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("STAIRCASE_PRECISION must be an integer in 20..10000, got '") + env + "'");
}

std::string family_footer() {
  std::string s = "Families:";
  for (const auto& name : kFamilyNames) {
    const Family f = *parse_family(name);
    s += "\n  " + name + std::string(8 - name.size(), ' ') + std::string(family_notation(f));
  }
  return s + "\n\nExit status: 0 success, 1 a check failed or a printed form is discrepant, 2 usage error.";
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CommandResult result;
  std::ostringstream out, err;
  Invocation in;

  CLI::App app{"Count staircase words on paths, cycles and 2 x n graphs, derive their generating functions and "
               "check closed forms.",
               "staircase"};
  app.footer(family_footer());
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--precision", in.config.precision, "Working precision in significant digits")
      ->check(CLI::Range(20u, 10000u));
  app.add_option("--order", in.config.order, "Series order N for closed-form checks")->check(CLI::PositiveNumber);
  app.add_option("--tol", in.config.tolerance, "Relative tolerance for closed-form checks");
  app.add_option("--budget", in.config.budget, "Maximum number of words the oracle may visit");
  app.add_option("--format", in.config.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--no-timestamp", [&](std::int64_t) { in.config.timestamp = false; }, "Omit the generation time");

  auto family_option = [&](CLI::App* sub) {
    sub->add_option("--family", in.family, "Graph family")->required()->check(CLI::IsMember(kFamilyNames));
  };
  auto k_option = [&](CLI::App* sub) { sub->add_option("--k", in.k, "Alphabet size")->required(); };

  CLI::App* count = app.add_subcommand("count", "Number of staircase words on one graph");
  family_option(count);
  k_option(count);
  count->add_option("--n", in.n, "Graph length")->required();
  count->add_option("--method", in.method, "Counting method")->check(CLI::IsMember({"oracle", "transfer"}));
  count->add_flag("--refined", in.refined, "Split the count by first column");

  CLI::App* table = app.add_subcommand("table", "Counts for grid, rt and kg side by side");
  k_option(table);
  table->add_option("--n-max", in.n_max, "Largest length")->required();
  table->add_option("--method", in.method, "Counting method")->check(CLI::IsMember({"oracle", "transfer"}));

  CLI::App* gf = app.add_subcommand("gf", "Generating function from the transfer matrix");
  family_option(gf);
  k_option(gf);
  gf->add_flag("--check-printed", in.check_printed, "Compare with the published closed form (exit 1 if discrepant)");

  CLI::App* rec = app.add_subcommand("recurrence", "Minimal linear recurrence of the counts");
  family_option(rec);
  k_option(rec);
  rec->add_option("--terms", in.terms, "Number of counts to fit");

  CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", in.suite, "Suite")->check(CLI::IsMember({"lemmas", "examples", "theorems", "chebyshev", "all"}));
  verify->add_option("--k", in.ks, "Alphabet sizes for lemma and theorem checks");
  verify->add_option("--x", in.xs, "Evaluation points for theorem checks (e.g. 1/64)");
  verify->add_option("--n-max", in.lemma_n_max, "Largest length for lemma checks");

  CLI::App* bfile = app.add_subcommand("bfile", "Counts as OEIS b-file lines \"n a(n)\"");
  family_option(bfile);
  k_option(bfile);
  bfile->add_option("--n-max", in.n_max, "Largest index")->required();
  bfile->add_option("-o,--output", in.output_path, "Write to this file instead of standard output");

  try {
    in.config.precision = default_precision();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    result.status = code == 0 ? 0 : kExitUsage;
    result.out = out.str();
    result.err = err.str();
    return result;
  } catch (const UsageError& e) {
    result.status = kExitUsage;
    result.err = std::string("error: ") + e.what() + "\n";
    return result;
  }

  in.command = app.get_subcommands().front()->get_name();
  if (in.config.format == "csv" && in.command != "count" && in.command != "table") {
    result.status = kExitUsage;
    result.err = "error: --format csv is available for count and table only\n";
    return result;
  }
  int status = 0;
  try {
    ScopedPrecision precision(in.config.precision);
    if (in.command == "count") out << run_count(in);
    else if (in.command == "table") out << run_table(in);
    else if (in.command == "gf") out << run_gf(in, status);
    else if (in.command == "recurrence") out << run_recurrence(in, status);
    else if (in.command == "verify") out << run_verify(in, status);
    else out << run_bfile(in);
  } catch (const OracleOutOfRange& e) {
    result.status = kExitUsage;
    result.err = std::string("error: ") + e.what() + " (try --method transfer)\n";
    return result;
  } catch (const UsageError& e) {
    result.status = kExitUsage;
    result.err = std::string("error: ") + e.what() + "\n" + app.get_subcommands().front()->help();
    return result;
  } catch (const std::exception& e) {
    result.status = kExitUsage;
    result.err = std::string("error: ") + e.what() + "\n";
    return result;
  }
  result.status = status;
  result.out = out.str();
  return result;
}

}  // namespace staircase
