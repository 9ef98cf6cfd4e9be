#include "cli.hpp"

#include "json_io.hpp"
#include "oddlen/chess.hpp"
#include "oddlen/enumerate.hpp"
#include "oddlen/errors.hpp"
#include "oddlen/genfun.hpp"
#include "oddlen/rootsys.hpp"
#include "oddlen/sperm.hpp"
#include "oddlen/verify.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>

namespace oddlen::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

IntPoly parse_coeffs(const std::string& text) {
  std::vector<IntPoly::Coeff> cs;
  for (const auto& tok : split(text, ',')) {
    IntPoly::Coeff v = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size())
      throw std::invalid_argument("bad coefficient '" + tok + "'");
    cs.push_back(v);
  }
  return IntPoly(cs);
}

std::set<Family> parse_families(const std::string& text) {
  std::set<Family> out;
  for (const auto& tok : split(text, ','))
    if (!tok.empty()) out.insert(parse_family(tok));
  if (out.empty()) throw std::invalid_argument("no families given");
  return out;
}

// Flag beats environment; neither leaves the OpenMP default alone.
void apply_workers(int flag) {
  int workers = flag;
  if (workers <= 0)
    if (const char* env = std::getenv("ODDLEN_WORKERS")) {
      std::string s(env);
      auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), workers);
      if (ec != std::errc() || end != s.data() + s.size() || workers < 1)
        throw std::invalid_argument("ODDLEN_WORKERS must be a positive integer");
    }
  if (workers > 0) omp_set_num_threads(workers);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string set_label(const IndexSet& I) {
  std::string s;
  for (int i : I.members()) s += (s.empty() ? "" : " ") + std::to_string(i);
  return s;
}

void print_report(const GenFunReport& r, std::ostream& out) {
  out << to_string(r.family) << "_" << r.n << "^" << to_string(r.set) << " (" << to_string(r.method) << ")\n";
  if (r.closed) out << "closed: " << *r.closed << '\n';
  if (r.brute) out << "brute:  " << *r.brute << '\n';
  if (r.equal) out << "equal: " << yes_no(*r.equal) << '\n';
  out << "cyclotomic product: " << yes_no(r.cyclotomic_product);
  if (r.factorization) out << " (" << to_string(*r.factorization) << ")";
  out << '\n';
  if (r.M) out << "M: " << *r.M << '\n';
}

struct GenfunOpts {
  std::string family, set, method = "closed", format = "text";
  int n = 0;
};

int cmd_genfun(const GenfunOpts& o, std::ostream& out) {
  const Family f = parse_family(o.family);
  const IndexSet I = parse_index_set(o.set, o.n);
  if (f == Family::A && I.contains(0)) throw std::invalid_argument("type A index sets live in [1, n-1]");
  const GenFunReport r = make_report(f, o.n, I, parse_method(o.method));
  if (o.format == "json") out << report_to_json(r).dump() << '\n';
  else print_report(r, out);
  return r.equal && !*r.equal ? kMismatch : kOk;
}

struct VerifyOpts {
  std::string tier = "fast", families = "A,B,D", format = "text", output;
  std::optional<int> n;
  std::vector<std::string> only;
  int workers = 0;
  bool list = false;
};

int cmd_verify(const VerifyOpts& o, std::ostream& out, std::ostream& err) {
  if (o.list) {
    for (const auto& c : check_catalog()) out << c.name << "  " << c.summary << '\n';
    return kOk;
  }
  SweepConfig cfg;
  cfg.tier = parse_tier(o.tier);
  cfg.families = parse_families(o.families);
  cfg.n_override = o.n;
  for (const auto& s : o.only)
    for (const auto& tok : split(s, ','))
      if (!tok.empty()) cfg.only.push_back(tok);
  validate_check_names(cfg.only);
  apply_workers(o.workers);

  std::ofstream file;
  if (!o.output.empty()) {
    file.open(o.output);
    if (!file) throw std::invalid_argument("cannot open " + o.output);
  }
  std::ostream& sink_out = o.output.empty() ? out : file;
  if (o.format == "csv") sink_out << "family,n,set,check,status\n";

  std::vector<CheckRecord> failed;
  auto sink = [&](const CheckRecord& r) {
    if (!r.ok) failed.push_back(r);
    if (o.format == "json") {
      sink_out << record_to_json(r).dump() << '\n';
    } else if (o.format == "csv") {
      sink_out << (r.family ? to_string(*r.family) : "") << ',' << r.n << ",\"" << (r.set ? set_label(*r.set) : "")
               << "\"," << r.check << ',' << (r.ok ? "pass" : "fail") << '\n';
    } else {
      sink_out << (r.ok ? "PASS " : "FAIL ") << r.check;
      if (r.family) sink_out << ' ' << to_string(*r.family);
      sink_out << " n=" << r.n;
      if (r.set) sink_out << " I=" << to_string(*r.set);
      sink_out << "  " << r.detail << '\n';
    }
    sink_out.flush();
  };
  const VerifySummary s = run_verify(cfg, sink);
  if (o.format == "text") sink_out << s.records << " checks, " << s.failures << " failed\n";
  for (const auto& r : failed) {
    err << "mismatch: " << r.check;
    if (r.family) err << " family " << to_string(*r.family);
    err << " n " << r.n;
    if (r.set) err << " I " << to_string(*r.set);
    err << ": " << r.detail << '\n';
  }
  return s.ok() ? kOk : kMismatch;
}

struct CycloOpts {
  std::string coeffs, format = "text";
  std::vector<int> trinomial;
};

int cmd_cyclo(const CycloOpts& o, std::ostream& out) {
  if (o.coeffs.empty() == o.trinomial.empty()) throw std::invalid_argument("give exactly one of --coeffs or --trinomial");
  IntPoly p;
  std::optional<bool> criterion;
  if (!o.trinomial.empty()) {
    const int n = o.trinomial[0], m = o.trinomial[1];
    if (m < 1 || n <= m) throw std::invalid_argument("trinomial needs 1 <= m < n");
    p = trinomial(n, m);
    criterion = trinomial_cyclotomic(n, m);
  } else {
    p = parse_coeffs(o.coeffs);
  }
  const auto fac = cyclotomic_factorization(p);
  if (o.format == "json") {
    nlohmann::ordered_json j{{"poly", p}, {"cyclotomicProduct", fac.has_value()}};
    if (fac) j["factorization"] = factorization_to_json(*fac);
    if (criterion) j["criterion"] = *criterion;
    out << j.dump() << '\n';
  } else {
    out << p << '\n' << yes_no(fac.has_value());
    if (fac) out << ", " << (fac->factors.empty() && fac->sign == 1 ? "1 (empty product)" : to_string(*fac));
    out << '\n';
    if (criterion) out << "n = 2m criterion: " << yes_no(*criterion) << '\n';
  }
  return kOk;
}

struct TableOpts {
  std::string family, kernel = "parallel", format = "text";
  int n = 0, workers = 0;
};

int cmd_table(const TableOpts& o, std::ostream& out) {
  const Family f = parse_family(o.family);
  check_budget(f, o.n);
  apply_workers(o.workers);
  const DescentTable t = o.kernel == "serial" ? brute_table_serial(f, o.n) : brute_table_parallel(f, o.n);
  if (o.format == "json") {
    nlohmann::ordered_json buckets = nlohmann::ordered_json::array();
    for (std::uint32_t m = 0; m < t.buckets.size(); ++m)
      if (!t.buckets[m].is_zero()) buckets.push_back({{"descents", IndexSet(o.n, m).members()}, {"poly", t.buckets[m]}});
    out << nlohmann::ordered_json{{"family", to_string(f)}, {"n", o.n}, {"buckets", buckets}, {"total", t.total()}}.dump() << '\n';
    return kOk;
  }
  for (std::uint32_t m = 0; m < t.buckets.size(); ++m)
    if (!t.buckets[m].is_zero()) out << "Des " << to_string(IndexSet(o.n, m)) << ": " << t.buckets[m] << '\n';
  out << "total: " << t.total() << '\n';
  return kOk;
}

struct StatsOpts {
  std::string family = "D", perm, cycles;
  int n = 0;
};

int cmd_stats(const StatsOpts& o, std::ostream& out) {
  const Family f = parse_family(o.family);
  if (o.perm.empty() == o.cycles.empty()) throw std::invalid_argument("give exactly one of --perm or --cycles");
  const SignedPerm s = o.perm.empty() ? parse_cycles(o.cycles, o.n) : parse_signed_perm(o.perm);
  if (!s.in_group(f)) throw std::invalid_argument(to_string(s) + " is not in type " + to_string(f));
  const auto st = stats(s);
  const auto rs = build_root_system(f, s.n());
  out << "sigma: " << to_string(s) << '\n'
      << "inv " << st.inv << "  nsp " << st.nsp << "  oinv " << st.oinv << "  onsp " << st.onsp << '\n'
      << "length " << length(s, f) << "  odd length " << odd_length(s, f) << '\n'
      << "root count: length " << length_via_roots(rs, s) << "  odd length " << odd_length_via_roots(rs, s) << '\n'
      << "descents " << to_string(descent_set(s, f)) << '\n';
  if (f == Family::D && s.n() >= 2) {
    auto [w, u] = parabolic_factorize(s, IndexSet::interval(s.n(), 1, s.n() - 1), f);
    out << "[n-1] factorization: " << to_string(w) << " | " << to_string(u) << '\n'
        << "chessboard " << yes_no(is_chessboard(s)) << "  L additive " << yes_no(check_L_additivity(s)) << '\n';
  }
  return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Odd length generating functions on Weyl groups of types A, B and D"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "json", "csv"};

  GenfunOpts g;
  auto* genfun = app.add_subcommand("genfun", "Generating function of a parabolic quotient");
  genfun->add_option("-f,--family", g.family, "A, B or D")->required();
  genfun->add_option("-n", g.n, "rank")->required();
  genfun->add_option("-I,--set", g.set, "index set, e.g. 0,2 or 0-3,6");
  genfun->add_option("-m,--method", g.method, "closed, brute or both");
  genfun->add_option("--format", g.format)->check(CLI::IsMember({"text", "json"}));

  VerifyOpts v;
  auto* verify = app.add_subcommand("verify", "Run the verification sweeps");
  verify->add_option("--tier", v.tier, "fast, full or extended");
  verify->add_option("--families", v.families, "comma list out of A,B,D");
  verify->add_option("--n", v.n, "rank ceiling for every sweep");
  verify->add_option("--only", v.only, "check names (see --list)");
  verify->add_option("--format", v.format)->check(CLI::IsMember(formats));
  verify->add_option("--output", v.output, "write records here instead of stdout");
  verify->add_option("--workers", v.workers, "OpenMP threads");
  verify->add_flag("--list", v.list, "list check names");

  CycloOpts c;
  auto* cyclo = app.add_subcommand("cyclo", "Decide whether a polynomial is a product of cyclotomic polynomials");
  cyclo->add_option("--coeffs", c.coeffs, "ascending coefficients, e.g. 1,0,2,0,1");
  cyclo->add_option("--trinomial", c.trinomial, "n m for x^n + 2x^m + 1")->expected(2);
  cyclo->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));

  TableOpts t;
  auto* table = app.add_subcommand("table", "Dump the descent-class table of a group");
  table->add_option("-f,--family", t.family)->required();
  table->add_option("-n", t.n)->required();
  table->add_option("--kernel", t.kernel)->check(CLI::IsMember({"serial", "parallel"}));
  table->add_option("--workers", t.workers);
  table->add_option("--format", t.format)->check(CLI::IsMember({"text", "json"}));

  StatsOpts st;
  auto* statc = app.add_subcommand("stats", "Statistics of one signed permutation");
  statc->add_option("-f,--family", st.family);
  statc->add_option("--perm", st.perm, "one-line notation, e.g. \"3 -2 5 1 -4\"");
  statc->add_option("--cycles", st.cycles, "signed cycles, e.g. \"(1,-2)(2,-1)\"");
  statc->add_option("-n", st.n, "degree for --cycles");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (genfun->parsed()) return cmd_genfun(g, out);
    if (verify->parsed()) return cmd_verify(v, out, err);
    if (cyclo->parsed()) return cmd_cyclo(c, out);
    if (table->parsed()) return cmd_table(t, out);
    if (statc->parsed()) return cmd_stats(st, out);
  } catch (const BudgetExceeded& e) {
    err << "budget: " << e.what() << '\n';
    return kBudget;
  } catch (const InexactDivision& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::invalid_argument& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

} // namespace oddlen::cli
