#include "ffsubsum/record.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace ffsubsum {

using nlohmann::json;

namespace {

std::string degree_text(const std::optional<std::size_t>& d) { return d ? std::to_string(*d) : "-inf"; }

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

template <class T>
json opt(const std::optional<T>& x) {
  return x ? json(*x) : json(nullptr);
}

template <class T>
std::optional<T> opt_from(const json& j, const char* key) {
  const json& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

// main term as a decimal with 3 places, from the exact fraction
std::string display_ratio(const std::string& frac) {
  const auto slash = frac.find('/');
  if (slash == std::string::npos) return frac;
  const BigInt num(frac.substr(0, slash));
  const BigInt den(frac.substr(slash + 1));
  const BigInt scaled = (num * 1000 * 2 + den) / (den * 2);
  std::string digits = scaled.get_str();
  while (digits.size() < 4) digits.insert(digits.begin(), '0');
  return digits.substr(0, digits.size() - 3) + "." + digits.substr(digits.size() - 3);
}

}  // namespace

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

CountRecord make_count_record(const CountReport& r) {
  const Field& f = r.query.exclusions.field();
  CountRecord rec;
  rec.p = f.p();
  rec.e = f.e();
  rec.q = f.q();
  for (const Element& x : r.query.exclusions.excluded()) rec.exclusions.push_back(format_element(x));
  rec.k = r.query.k;
  rec.b = format_element(r.query.b);
  rec.N = r.n_count.get_str();
  rec.M = r.m_count.get_str();
  rec.main_term = r.main_term_num.get_str() + "/" + r.main_term_den.get_str();
  rec.error = r.error.get_str();
  if (r.bound) rec.bound = r.bound->get_str();
  if (r.bound_mode) rec.bound_mode = std::string(to_string(*r.bound_mode));
  rec.method = std::string(to_string(r.method));
  return rec;
}

void to_json(json& j, const CountRecord& r) {
  j = json{{"p", r.p},         {"e", r.e},         {"q", r.q},
           {"exclusions", r.exclusions},           {"k", r.k},
           {"b", r.b},         {"N", r.N},         {"M", r.M},
           {"main_term", r.main_term},             {"error", r.error},
           {"bound", opt(r.bound)},                {"bound_mode", r.bound_mode},
           {"method", r.method}};
}

void from_json(const json& j, CountRecord& r) {
  j.at("p").get_to(r.p);
  j.at("e").get_to(r.e);
  j.at("q").get_to(r.q);
  j.at("exclusions").get_to(r.exclusions);
  j.at("k").get_to(r.k);
  j.at("b").get_to(r.b);
  j.at("N").get_to(r.N);
  j.at("M").get_to(r.M);
  j.at("main_term").get_to(r.main_term);
  j.at("error").get_to(r.error);
  r.bound = opt_from<std::string>(j, "bound");
  j.at("bound_mode").get_to(r.bound_mode);
  j.at("method").get_to(r.method);
}

const std::string& count_csv_header() {
  static const std::string h = "p,e,q,exclusions,k,b,N,M,main_term,error,bound,bound_mode,method";
  return h;
}

std::string to_csv_row(const CountRecord& r) {
  const std::vector<std::string> cells{std::to_string(r.p), std::to_string(r.e), std::to_string(r.q),
                                       join(r.exclusions, ";"), std::to_string(r.k), r.b, r.N, r.M,
                                       r.main_term, r.error, r.bound.value_or(""), r.bound_mode, r.method};
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += csv_field(cells[i]);
  }
  return out;
}

void write_count_table(std::ostream& os, const std::vector<CountRecord>& rows) {
  const std::vector<std::string> head{"k", "b", "N", "main_term", "~", "error", "bound", "bound_mode", "method"};
  std::vector<std::vector<std::string>> cells{head};
  for (const CountRecord& r : rows) {
    cells.push_back({std::to_string(r.k), r.b, r.N, r.main_term, display_ratio(r.main_term), r.error,
                     r.bound.value_or("-"), r.bound_mode, r.method});
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << row[i];
    }
    os << '\n';
  }
}

// ---------------------------------------------------------------------------

void to_json(json& j, const RsRecord& r) {
  j = json{{"q", r.q},
           {"n", r.n},
           {"k", r.k},
           {"degree", opt(r.degree)},
           {"distance", opt(r.distance)},
           {"verdict", opt(r.verdict)},
           {"bounds", (r.lower && r.upper) ? json::array({*r.lower, *r.upper}) : json(nullptr)}};
}

void from_json(const json& j, RsRecord& r) {
  j.at("q").get_to(r.q);
  j.at("n").get_to(r.n);
  j.at("k").get_to(r.k);
  r.degree = opt_from<std::size_t>(j, "degree");
  r.distance = opt_from<std::size_t>(j, "distance");
  r.verdict = opt_from<std::string>(j, "verdict");
  const json& b = j.at("bounds");
  if (b.is_null()) {
    r.lower.reset();
    r.upper.reset();
  } else {
    r.lower = b.at(0).get<std::size_t>();
    r.upper = b.at(1).get<std::size_t>();
  }
}

const std::string& rs_csv_header() {
  static const std::string h = "q,n,k,degree,distance,verdict,lower,upper";
  return h;
}

std::string to_csv_row(const RsRecord& r) {
  auto num = [](const std::optional<std::size_t>& x) { return x ? std::to_string(*x) : std::string(); };
  return std::to_string(r.q) + "," + std::to_string(r.n) + "," + std::to_string(r.k) + "," +
         degree_text(r.degree) + "," + num(r.distance) + "," + r.verdict.value_or("") + "," + num(r.lower) + "," +
         num(r.upper);
}

void write_rs_text(std::ostream& os, const RsRecord& r) {
  os << "q = " << r.q << ", n = " << r.n << ", k = " << r.k << "\n";
  os << "degree: " << degree_text(r.degree) << "\n";
  if (r.verdict) os << "verdict: " << *r.verdict << "\n";
  if (r.distance) os << "distance: " << *r.distance << "\n";
  if (r.lower && r.upper) os << "bounds: " << *r.lower << " <= d(u, C) <= " << *r.upper << "\n";
}

// ---------------------------------------------------------------------------

json scan_to_json(const ScanReport& r) {
  json entries = json::array();
  for (const ScanEntry& e : r.entries) {
    json row{{"b1", format_element(e.b1)}, {"solutions", e.solutions.get_str()}, {"deep_hole", e.deep_hole}};
    row["exhaustive_deep_hole"] = opt(e.exhaustive_deep_hole);
    entries.push_back(std::move(row));
  }
  return json{{"q", r.q}, {"n", r.n}, {"k", r.k}, {"deep_holes", r.deep_holes}, {"entries", std::move(entries)}};
}

const std::string& scan_csv_header() {
  static const std::string h = "q,n,k,b1,solutions,deep_hole,exhaustive_deep_hole";
  return h;
}

void write_scan_csv(std::ostream& os, const ScanReport& r) {
  os << scan_csv_header() << '\n';
  for (const ScanEntry& e : r.entries) {
    os << r.q << ',' << r.n << ',' << r.k << ',' << csv_field(format_element(e.b1)) << ',' << e.solutions << ','
       << (e.deep_hole ? "true" : "false") << ','
       << (e.exhaustive_deep_hole ? (*e.exhaustive_deep_hole ? "true" : "false") : "") << '\n';
  }
}

void write_scan_text(std::ostream& os, const ScanReport& r) {
  os << "q = " << r.q << ", n = " << r.n << ", k = " << r.k << ": degree-" << r.k + 1 << " words\n";
  for (const ScanEntry& e : r.entries) {
    os << "  b1 = " << std::setw(12) << std::left << format_element(e.b1) << std::right
       << " N(k+1, b1, D) = " << e.solutions << (e.deep_hole ? "  deep hole" : "");
    if (e.exhaustive_deep_hole) os << "  (exhaustive: " << (*e.exhaustive_deep_hole ? "deep hole" : "ordinary") << ")";
    os << '\n';
  }
  os << r.deep_holes << " deep holes of degree " << r.k + 1 << "\n";
}

}  // namespace ffsubsum
