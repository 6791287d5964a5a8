#include "commands.hpp"

#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "alcovekit/alcove.hpp"
#include "alcovekit/ideals.hpp"
#include "alcovekit/series.hpp"
#include "alcovekit/typea.hpp"
#include "report.hpp"
#include "suites.hpp"

namespace alcovekit::cli {

namespace {

struct Args {
  bool summary = false;
  bool allow_big = false;
  std::string type;
  int kmax = -1;
  int max_length = -1;
  int max_cas = -1;
  int m = -1;
  std::string method = "series";
  bool wf2_only = false;
  std::string eval;
  bool lehmer = false;
  std::string partition;
  std::string suite;
};

RootSystem parse_type(const std::string& label) {
  if (label.empty()) throw std::invalid_argument("--type is required");
  return RootSystem::build(CartanType::parse(label));
}

Report cmd_coeffs(const Args& a, const Config& cfg) {
  RootSystem rs = parse_type(a.type);
  if (a.kmax < 0) throw std::invalid_argument("--kmax is required");
  cfg.require(static_cast<std::size_t>(a.kmax) <= cfg.max_kmax, "series order");
  const auto K = static_cast<std::size_t>(a.kmax);
  Report r("coeffs", rs.label());
  r.parameters()["kmax"] = dec(a.kmax);
  r.parameters()["method"] = a.method;
  std::optional<IntSeries> series, alcove;
  if (a.method == "series" || a.method == "both") series = euler_power(static_cast<unsigned long>(rs.dim()), K);
  if (a.method == "alcove" || a.method == "both") {
    require_enumerable(rs, a.kmax, cfg);
    alcove = alcove_coeffs(rs, K);
  }
  if (series) r.data()["series"] = dec_list(series->coeffs());
  if (alcove) r.data()["alcove"] = dec_list(alcove->coeffs());
  const IntSeries& b = series ? *series : *alcove;
  r.check("constant-term", "b_0 = 1", b[0] == 1, {{"b0", dec(b[0])}});
  if (series && alcove) {
    std::size_t first_diff = K + 1;
    for (std::size_t k = 0; k <= K && first_diff > K; ++k)
      if ((*series)[k] != (*alcove)[k]) first_diff = k;
    r.check("series-equals-alcove", "Euler product power equals the signed alcove sum", first_diff > K,
            {{"first_difference", first_diff > K ? std::string("none") : dec(first_diff)}});
  }
  if (rs.type() == CartanType{Family::A, 4} && K >= 4)
    r.data()["note"] = "b_4 = " + dec(b[4]) + " from the expansion (tau(5)); the value 4870 sometimes quoted for dim C_4 is a misprint";
  return r;
}

Report cmd_alcoves(const Args& a, const Config& cfg) {
  RootSystem rs = parse_type(a.type);
  if (a.max_length < 0) throw std::invalid_argument("--max-length is required");
  require_enumerable(rs, a.max_length, cfg);
  Report r("alcoves", rs.label());
  r.parameters()["max_length"] = dec(a.max_length);
  r.parameters()["wf2_only"] = a.wf2_only;
  auto elems = a.wf2_only ? enumerate_dominant(rs, a.max_length, 1) : enumerate_dominant(rs, a.max_length);
  json list = json::array();
  std::set<std::vector<std::int64_t>> lambdas;
  std::uint64_t cas_bad = 0;
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(a.max_length) + 1, 0);
  for (const auto& e : elems) {
    list.push_back({{"length", dec(e.length)},
                    {"n_vec", dec_list(e.n_vec)},
                    {"lambda", dec_list(e.lambda)},
                    {"cas", dec(e.cas)},
                    {"dim", dec(rs.weyl_dimension(e.lambda))},
                    {"sign", dec(e.sign())},
                    {"in_wf2", in_Wf2(e)}});
    lambdas.insert(e.lambda);
    if (e.cas < e.length || e.cas != rs.casimir_eigenvalue(e.lambda_weight())) ++cas_bad;
    ++counts[e.length];
  }
  r.data()["elements"] = list;
  r.data()["positive_roots"] = json::array();
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) r.data()["positive_roots"].push_back(dec_list(rs.root(k)));
  r.check("lambda-injective", "sigma determines lambda^sigma", lambdas.size() == elems.size(),
          {{"elements", dec(elems.size())}, {"distinct", dec(lambdas.size())}});
  r.check("casimir-consistent", "Casimir from n-vector, at least the length", cas_bad == 0,
          {{"failures", dec(cas_bad)}});
  if (!a.wf2_only) {
    auto p = bott_series(rs, static_cast<std::size_t>(a.max_length));
    bool ok = true;
    for (int k = 0; k <= a.max_length; ++k) ok = ok && p[k] == counts[k];
    r.check("count-by-length", "Poincare series of dominant alcoves", ok, {{"counts", dec_list(counts)}});
  } else {
    r.check("wf2-count", "2^rank alcoves in twice the fundamental alcove",
            mpz_class(elems.size()) == (mpz_class(1) << rs.rank()) || a.max_length < static_cast<int>(rs.num_positive_roots()),
            {{"count", dec(elems.size())}});
  }
  return r;
}

Report cmd_ideals(const Args& a, const Config& cfg) {
  RootSystem rs = parse_type(a.type);
  cfg.require(rs.rank() <= cfg.max_ideal_rank, "rank for ideal enumeration");
  Report r("ideals", rs.label());
  auto ideals = enumerate_abelian_ideals(rs);
  Wf2Table table(rs);
  json list = json::array();
  std::uint64_t bad = 0;
  for (const auto& ideal : ideals) {
    json roots = json::array();
    for (auto k : ideal.roots) roots.push_back(dec_list(rs.root(k)));
    auto sigma = ideal_to_sigma(rs, table, ideal);
    if (!(sigma_to_ideal(rs, sigma) == ideal) || static_cast<std::size_t>(sigma.length) != ideal.k()) ++bad;
    list.push_back({{"k", dec(ideal.k())},
                    {"roots", roots},
                    {"lambda", dec_list(ideal.lambda)},
                    {"dim", dec(rs.weyl_dimension(ideal.lambda))},
                    {"sigma", {{"length", dec(sigma.length)}, {"n_vec", dec_list(sigma.n_vec)}}}});
  }
  r.data()["ideals"] = list;
  r.check("ideal-count", "abelian ideal count is 2^rank", mpz_class(ideals.size()) == (mpz_class(1) << rs.rank()),
          {{"count", dec(ideals.size())}});
  r.check("bijection-round-trip", "ideal to alcove bijection", bad == 0, {{"failures", dec(bad)}});
  return r;
}

mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational number: " + s);
  q.canonicalize();
  return q;
}

// Integer roots of p, by divisors of the lowest nonzero coefficient.
std::vector<mpz_class> integer_roots(const RatPoly& p) {
  std::vector<mpz_class> out;
  std::size_t low = 0;
  while (low <= static_cast<std::size_t>(p.degree()) && p.coeff(low) == 0) ++low;
  if (low > 0) out.push_back(0);
  if (static_cast<int>(low) >= p.degree()) return out;
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  mpz_class c0 = abs(mpz_class(p.coeff(low) * l));
  if (c0 > mpz_class("1000000000000")) return out;
  const unsigned long n = c0.get_ui();
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    for (unsigned long cand : {d, n / d})
      for (int sgn : {1, -1}) {
        mpz_class r = sgn * mpz_class(cand);
        if (p(mpq_class(r)) == 0 && std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Report cmd_fk(const Args& a, const Config& cfg) {
  if (a.kmax < 0) throw std::invalid_argument("--kmax is required");
  cfg.require(static_cast<std::size_t>(a.kmax) <= cfg.max_kmax, "polynomial order");
  Report r("fk", "");
  r.parameters()["kmax"] = dec(a.kmax);
  auto f = f_polys(static_cast<std::size_t>(a.kmax));
  std::optional<mpq_class> s;
  if (!a.eval.empty()) {
    s = parse_rational(a.eval);
    r.parameters()["eval"] = dec(*s);
  }
  json list = json::array();
  bool degrees_ok = true;
  for (int k = 0; k <= a.kmax; ++k) {
    json entry = {{"k", dec(k)}, {"coeffs", dec_list(f[k].coeffs())}, {"poly", f[k].to_string()}};
    if (k <= 12) entry["integer_roots"] = dec_list(integer_roots(f[k]));
    if (s) entry["value"] = dec(f[k](*s));
    degrees_ok = degrees_ok && f[k].degree() == k && (k == 0 || f[k].coeff(0) == 0);
    list.push_back(entry);
  }
  r.data()["f"] = list;
  r.check("degree-and-constant-term", "deg f_k = k and f_k(0) = 0", degrees_ok);
  if (a.lehmer) {
    r.parameters()["lehmer"] = true;
    if (a.kmax < 1) throw std::invalid_argument("--lehmer needs --kmax >= 1");
    auto rep = lehmer_probe(static_cast<std::size_t>(a.kmax));
    r.check("no-zero-at-24", "whether 24 is a root of some f_k", rep.zeros.empty(),
            {{"zeros", dec_list(rep.zeros)}});
    r.check("values-match-expansion", "f_k(24) against the 24th power expansion", rep.agrees_with_series);
    r.data()["lehmer_values"] = dec_list(rep.values);
  }
  return r;
}

Report cmd_mcore(const Args& a, const Config& cfg) {
  if (a.m < 2) throw std::invalid_argument("--m must be at least 2");
  Report r("mcore", "A" + std::to_string(a.m - 1));
  r.parameters()["m"] = dec(a.m);
  if (!a.partition.empty()) {
    std::vector<int> parts;
    std::stringstream ss(a.partition);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("bad partition part: " + tok);
      parts.push_back(v);
    }
    Partition p(parts);
    Partition core = m_core(p, a.m);
    r.parameters()["partition"] = p.to_string();
    r.data()["core"] = core.to_string();
    r.data()["beta_numbers"] = dec_list(beta_numbers(p, a.m));
    r.data()["null_core"] = core.empty();
    if (static_cast<int>(p.length()) <= a.m - 1) r.data()["weight"] = dec_list(partition_to_weight(p, a.m));
    r.check("core-idempotent", "the m-core has no removable m-hook", m_core(core, a.m) == core,
            {{"core", core.to_string()}});
  }
  const int kmax = a.kmax < 0 ? 3 : a.kmax;
  r.parameters()["kmax"] = dec(kmax);
  for (int k = 0; k <= kmax; ++k) {
    auto c = count_null_cores(a.m, k, cfg.partition_ceiling);
    r.check("null-core-count-k=" + std::to_string(k), "null m-cores of size mk", c.matches(),
            {{"count", dec(c.count)}, {"binomial", dec(c.expected)}});
  }
  if (a.max_length >= 0) {
    r.parameters()["max_length"] = dec(a.max_length);
    require_enumerable(RootSystem::build(Family::A, a.m - 1), a.max_length, cfg);
    auto rep = verify_null_core_correspondence(a.m, a.max_length);
    json unhit = json::array();
    for (const auto& p : rep.unhit) unhit.push_back(p.to_string());
    r.check("alcove-null-core", "dominant alcoves map injectively to null m-cores", rep.pass(),
            {{"alcoves", dec(rep.alcoves)},
             {"non_null_core", dec(rep.non_null_core)},
             {"duplicates", dec(rep.duplicate_images)},
             {"sign_mismatches", dec(rep.sign_mismatches)},
             {"unhit", unhit}});
  }
  return r;
}

Report cmd_verify(const Args& a, const Config& cfg) {
  SuiteOptions o;
  if (!a.type.empty()) o.type = CartanType::parse(a.type);
  if (suite_needs_type(a.suite) && !o.type) throw std::invalid_argument("suite " + a.suite + " needs --type");
  if (a.kmax >= 0) o.kmax = a.kmax;
  if (a.max_length >= 0) o.max_length = a.max_length;
  if (a.max_cas >= 0) o.max_cas = a.max_cas;
  if (a.m >= 0) o.m = a.m;
  return run_suite(a.suite, o, cfg);
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args, const Config& base) {
  CliResult res;
  std::ostringstream out, err;
  Args a;
  CLI::App app{"Exact alcove, abelian ideal and Euler product computations", "alcovekit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--summary", a.summary, "Human-readable table instead of JSON");
  app.add_flag("--allow-big", a.allow_big, "Lift every scale ceiling");

  auto* coeffs = app.add_subcommand("coeffs", "Coefficients of the dim g-th power of the Euler product");
  coeffs->add_option("--type", a.type, "Cartan type, e.g. A4")->required();
  coeffs->add_option("--kmax", a.kmax, "Truncation order")->required();
  coeffs->add_option("--method", a.method, "series, alcove or both")
      ->check(CLI::IsMember({"series", "alcove", "both"}));

  auto* alcoves = app.add_subcommand("alcoves", "Dominant alcoves by length");
  alcoves->add_option("--type", a.type)->required();
  alcoves->add_option("--max-length", a.max_length)->required();
  alcoves->add_flag("--wf2-only", a.wf2_only, "Only alcoves inside twice the fundamental alcove");

  auto* ideals = app.add_subcommand("ideals", "Abelian ideals of the Borel subalgebra");
  ideals->add_option("--type", a.type)->required();

  auto* fk = app.add_subcommand("fk", "Polynomials f_k(s)");
  fk->add_option("--kmax", a.kmax)->required();
  fk->add_option("--eval", a.eval, "Evaluate at s (integer or p/q)");
  fk->add_flag("--lehmer", a.lehmer, "Check f_k(24) != 0");

  auto* mc = app.add_subcommand("mcore", "m-cores and the null-core correspondence");
  mc->add_option("--m", a.m)->required();
  mc->add_option("--partition", a.partition, "Comma-separated parts");
  mc->add_option("--kmax", a.kmax, "Null-core counts for k = 0..kmax");
  mc->add_option("--max-length", a.max_length, "Check alcoves of A_{m-1} up to this length");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", a.suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--type", a.type);
  verify->add_option("--kmax", a.kmax);
  verify->add_option("--max-length", a.max_length);
  verify->add_option("--max-cas", a.max_cas);
  verify->add_option("--m", a.m);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    res.exit_code = app.exit(e, out, err);
    if (res.exit_code != 0) res.exit_code = 2;
    res.out = out.str();
    res.err = err.str();
    return res;
  }

  const Config cfg = a.allow_big ? base.unbounded() : base;
  try {
    std::optional<Report> report;
    if (coeffs->parsed()) report = cmd_coeffs(a, cfg);
    else if (alcoves->parsed()) report = cmd_alcoves(a, cfg);
    else if (ideals->parsed()) report = cmd_ideals(a, cfg);
    else if (fk->parsed()) report = cmd_fk(a, cfg);
    else if (mc->parsed()) report = cmd_mcore(a, cfg);
    else report = cmd_verify(a, cfg);
    res.out = a.summary ? report->summary() : report->canonical();
    res.exit_code = report->failed() ? 1 : 0;
  } catch (const std::length_error& e) {
    res.err = std::string("scale error: ") + e.what() + "\n";
    res.exit_code = 2;
  } catch (const std::invalid_argument& e) {
    res.err = std::string("usage error: ") + e.what() + "\n";
    res.exit_code = 2;
  }
  return res;
}

}  // namespace alcovekit::cli
