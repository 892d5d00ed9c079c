// ffsubsum: subset-sum counts over finite fields and Reed-Solomon deep holes.
//
// Exit status: 0 success, 1 invariant failure, 2 usage error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffsubsum/counts.hpp"
#include "ffsubsum/errors.hpp"
#include "ffsubsum/gf.hpp"
#include "ffsubsum/oracle.hpp"
#include "ffsubsum/record.hpp"
#include "ffsubsum/rscodes.hpp"
#include "ffsubsum/verify.hpp"

namespace {

using namespace ffsubsum;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kInvariant = 1;
constexpr int kUsage = 2;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Global {
  std::uint32_t p = 0;
  std::uint32_t e = 1;
  std::string format = "table";
  std::uint64_t seed = 0;

  Field field() const {
    if (p == 0) throw Usage("--p is required");
    return Field::make(p, e);
  }
};

struct CountArgs {
  std::string exclude;
  std::uint64_t k = 0;
  std::string b;
  std::string method = "closed_form";
};

struct TableArgs {
  std::string exclude;
  std::string k_range;
};

struct VerifyArgs {
  std::uint32_t max_q = 27;
  std::size_t max_c = 3;
  bool inject_fault = false;
  bool identities_only = false;
};

struct RsArgs {
  std::string n_mode = "full";
  std::string points;
  std::size_t k = 0;
  std::string word;
  bool exhaustive = false;
};

void emit_count(const Global& g, const CountRecord& rec) {
  if (g.format == "json") {
    std::cout << json(rec).dump() << '\n';
  } else if (g.format == "csv") {
    std::cout << count_csv_header() << '\n' << to_csv_row(rec) << '\n';
  } else {
    std::cout << "q = " << rec.q << " (p = " << rec.p << ", e = " << rec.e << ")\n";
    std::cout << "exclusions: {";
    for (std::size_t i = 0; i < rec.exclusions.size(); ++i) std::cout << (i ? ", " : "") << rec.exclusions[i];
    std::cout << "}\n";
    write_count_table(std::cout, {rec});
  }
}

int cmd_count(const Global& g, const CountArgs& a) {
  const Field f = g.field();
  const CountQuery query{ExclusionSet(f, parse_element_list(a.exclude, f)), a.k, parse_element(a.b, f)};
  validate(query);
  if (a.method == "oracle") {
    const CountTable t = dp_count_table(query.exclusions);
    emit_count(g, make_count_record(make_report(query, t.at(query.k, query.b), CountMethod::oracle)));
    return kOk;
  }
  const CountReport r = count_excluded(query);
  emit_count(g, make_count_record(r));
  if (a.method == "both") {
    const BigInt oracle = dp_count_table(query.exclusions).at(query.k, query.b);
    std::ostream& note = g.format == "table" ? std::cout : std::cerr;
    if (oracle != r.n_count) {
      std::cerr << "error: " << to_string(r.method) << " gives N = " << r.n_count << " but the oracle gives "
                << oracle << '\n';
      return kInvariant;
    }
    note << (g.format == "table" ? "" : "# ") << "methods agree: " << to_string(r.method) << " = oracle = "
         << oracle << '\n';
  }
  return kOk;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s, std::uint64_t n) {
  if (s.empty()) return {0, n};
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw Usage("--k-range expects lo:hi");
  try {
    const std::uint64_t lo = colon == 0 ? 0 : std::stoull(s.substr(0, colon));
    const std::uint64_t hi = colon + 1 == s.size() ? n : std::stoull(s.substr(colon + 1));
    if (lo > hi || hi > n) throw Usage("--k-range " + s + " outside 0:" + std::to_string(n));
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw Usage("--k-range expects lo:hi, got " + s);
  }
}

int cmd_table(const Global& g, const TableArgs& a) {
  const Field f = g.field();
  const ExclusionSet set(f, parse_element_list(a.exclude, f));
  const auto [lo, hi] = parse_range(a.k_range, set.n());
  ExclusionCounter counter(set);
  int status = kOk;
  if (g.format == "csv") std::cout << count_csv_header() << '\n';
  std::ostream& note = g.format == "table" ? std::cout : std::cerr;
  const std::string prefix = g.format == "table" ? "" : "# ";
  for (std::uint64_t k = lo; k <= hi; ++k) {
    std::vector<CountRecord> rows;
    BigInt sum = 0;
    for (const Element& b : f.elements()) {
      auto [n, method] = counter.count(k, b);
      sum += n;
      rows.push_back(make_count_record(make_report(CountQuery{set, k, b}, std::move(n), method)));
    }
    if (g.format == "json") {
      for (const auto& r : rows) std::cout << json(r).dump() << '\n';
    } else if (g.format == "csv") {
      for (const auto& r : rows) std::cout << to_csv_row(r) << '\n';
    } else {
      write_count_table(std::cout, rows);
    }
    const BigInt want = binom(static_cast<std::int64_t>(set.n()), k);
    note << prefix << "k = " << k << ": sum_b N = " << sum << (sum == want ? " = " : " != ") << "C(" << set.n()
         << "," << k << ") = " << want << '\n';
    if (sum != want) status = kInvariant;
  }
  return status;
}

int cmd_verify(const Global& g, const VerifyArgs& a) {
  verify::Options opts;
  opts.max_q = a.max_q;
  opts.max_c = a.max_c;
  opts.seed = g.seed;
  opts.inequalities = !a.identities_only;
  if (a.inject_fault) {
    // deliberately wrong for k = 2, b = 0
    opts.count = [](ExclusionCounter& c, std::uint64_t k, const Element& b) {
      BigInt n = c.count(k, b).n;
      if (k == 2 && b.is_zero()) n += 1;
      return n;
    };
  }
  const verify::Summary s = verify::run_all(opts, std::cout);
  if (s.ok()) {
    std::cout << "all checks passed (" << s.checks << " assertions)\n";
    return kOk;
  }
  for (const auto& m : s.failures) std::cout << "  " << m << '\n';
  if (s.failed > s.failures.size()) std::cout << "  ...\n";
  std::cout << s.failed << " of " << s.checks << " checks failed\n";
  return kInvariant;
}

EvalMode parse_mode(const std::string& s) {
  if (s == "full") return EvalMode::full;
  if (s == "punctured") return EvalMode::punctured;
  throw Usage("--n-mode must be full or punctured");
}

RSCode make_code(const Field& f, const RsArgs& a) {
  if (!a.points.empty()) return RSCode(f, parse_element_list(a.points, f), a.k);
  return RSCode::over(f, parse_mode(a.n_mode), a.k);
}

void emit_rs(const Global& g, const RsRecord& r) {
  if (g.format == "json") {
    std::cout << json(r).dump() << '\n';
  } else if (g.format == "csv") {
    std::cout << rs_csv_header() << '\n' << to_csv_row(r) << '\n';
  } else {
    write_rs_text(std::cout, r);
  }
}

RsRecord base_record(const RSCode& code, const Word& u) {
  RsRecord r;
  r.q = code.field().q();
  r.n = code.n();
  r.k = code.k();
  r.degree = code.word_degree(u);
  const DistanceBounds b = code.theorem_5_1_bounds(u);
  if (!b.codeword) {
    r.lower = b.lower;
    r.upper = b.upper;
  }
  return r;
}

int cmd_rs_classify(const Global& g, const RsArgs& a) {
  const Field f = g.field();
  const RSCode code = make_code(f, a);
  if (a.word.empty()) throw Usage("--word is required");
  const Word u = code.parse_word(a.word);
  RsRecord r = base_record(code, u);
  if (!r.degree || *r.degree < code.k()) {
    r.verdict = "codeword";
    r.distance = 0;
  } else if (*r.degree <= code.k() + 1) {
    r.verdict = std::string(to_string(code.classify_m1(u)));
  } else {
    r.verdict = "unclassified";
  }
  if (a.exhaustive) r.distance = code.distance_to_code(u);
  emit_rs(g, r);
  return kOk;
}

int cmd_rs_distance(const Global& g, const RsArgs& a) {
  const Field f = g.field();
  const RSCode code = make_code(f, a);
  if (a.word.empty()) throw Usage("--word is required");
  const Word u = code.parse_word(a.word);
  RsRecord r = base_record(code, u);
  r.distance = code.distance_to_code(u);
  emit_rs(g, r);
  if (r.lower && (*r.distance < *r.lower || *r.distance > *r.upper)) {
    std::cerr << "error: distance outside the degree bounds\n";
    return kInvariant;
  }
  return kOk;
}

int cmd_rs_scan(const Global& g, const RsArgs& a) {
  const Field f = g.field();
  if (!a.points.empty()) throw Usage("scan works on D = F_q or F_q*; use --n-mode");
  ScanOptions opts;
  opts.exhaustive_check = a.exhaustive;
  const ScanReport r = deep_hole_scan(f, parse_mode(a.n_mode), a.k, opts);
  if (g.format == "json") {
    std::cout << scan_to_json(r).dump() << '\n';
  } else if (g.format == "csv") {
    write_scan_csv(std::cout, r);
  } else {
    write_scan_text(std::cout, r);
  }
  for (const ScanEntry& e : r.entries) {
    if (e.exhaustive_deep_hole && *e.exhaustive_deep_hole != e.deep_hole) {
      std::cerr << "error: exhaustive distance disagrees with the count at b1 = " << format_element(e.b1) << '\n';
      return kInvariant;
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subset sums over finite fields and Reed-Solomon deep holes"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--p", g.p, "field characteristic");
  app.add_option("--e", g.e, "extension degree")->capture_default_str();
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "seed for randomized checks")->capture_default_str();

  CountArgs ca;
  auto* count = app.add_subcommand("count", "N(k, b, D) for D = F_q minus the excluded points");
  count->fallthrough();
  count->add_option("--exclude", ca.exclude, "excluded points, comma separated");
  count->add_option("--k", ca.k, "subset size")->required();
  count->add_option("--b", ca.b, "target sum")->required();
  count->add_option("--method", ca.method, "closed_form, oracle or both")
      ->check(CLI::IsMember({"closed_form", "oracle", "both"}))
      ->capture_default_str();

  TableArgs ta;
  auto* table = app.add_subcommand("table", "N(k, b, D) for every k and b");
  table->fallthrough();
  table->add_option("--exclude", ta.exclude, "excluded points, comma separated");
  table->add_option("--k-range", ta.k_range, "lo:hi (default: all k)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "cross-check every formula against the oracle");
  verify->fallthrough();
  verify->add_option("--max-q", va.max_q, "largest field order checked")->capture_default_str();
  verify->add_option("--max-c", va.max_c, "largest exclusion set size")->capture_default_str();
  verify->add_flag("--identities-only", va.identities_only,
                   "skip the claimed inequalities (error bounds, unimodality)");
  verify->add_flag("--inject-fault", va.inject_fault)->group("");

  RsArgs ra;
  auto* rs = app.add_subcommand("rs", "Reed-Solomon distance and deep holes");
  rs->fallthrough();
  rs->require_subcommand(1);
  std::vector<CLI::App*> rs_subs;
  for (const char* name : {"classify", "scan", "distance"}) {
    auto* sub = rs->add_subcommand(name);
    sub->fallthrough();
    sub->add_option("--n-mode", ra.n_mode, "full (D = F_q) or punctured (D = F_q*)")
        ->check(CLI::IsMember({"full", "punctured"}))
        ->capture_default_str();
    sub->add_option("--k", ra.k, "code dimension")->required();
    if (std::string(name) != "scan") {
      sub->add_option("--points", ra.points, "explicit evaluation set");
      sub->add_option("--word", ra.word, "received word, comma separated");
    }
    if (std::string(name) != "distance") {
      sub->add_flag("--exhaustive", ra.exhaustive, "also compute the distance by enumeration");
    }
    rs_subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*count) return cmd_count(g, ca);
    if (*table) return cmd_table(g, ta);
    if (*verify) return cmd_verify(g, va);
    if (*rs_subs[0]) return cmd_rs_classify(g, ra);
    if (*rs_subs[1]) return cmd_rs_scan(g, ra);
    if (*rs_subs[2]) return cmd_rs_distance(g, ra);
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
