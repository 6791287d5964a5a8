// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance            run all criteria
//   acceptance N          run criterion N only
//   acceptance --with-e78 also count ideals for E7 and E8

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <set>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "alcovekit/alcove.hpp"
#include "alcovekit/ideals.hpp"
#include "alcovekit/rootsys.hpp"
#include "alcovekit/series.hpp"
#include "alcovekit/typea.hpp"
#include "alcovekit/wedge.hpp"

using namespace alcovekit;

namespace {

bool with_e78 = false;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "  mismatch: " << what << "\n";
    }
  }
};

RootSystem rs_of(const char* label) { return RootSystem::build(CartanType::parse(label)); }

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

void ramanujan(Outcome& o) {
  const std::vector<long> stated{-24, 252, -1472, 4830, -6048};
  auto series = euler_power(24, 15);
  for (std::size_t k = 1; k <= 5; ++k)
    o.expect(series[k] == stated[k - 1], "b_" + std::to_string(k) + " = " + series[k].get_str());
  auto rs = rs_of("A4");
  auto alcove = alcove_coeffs(rs, 15);
  for (std::size_t k = 0; k <= 15; ++k)
    o.expect(alcove[k] == series[k], "alcove b_" + std::to_string(k) + " = " + alcove[k].get_str() +
                                         " vs series " + series[k].get_str());
  o.detail << "  b_1..b_5 = -24 252 -1472 4830 -6048; series and alcove sums agree for k <= 15\n";
}

void peterson(Outcome& o) {
  std::vector<const char*> types{"A1", "A2", "A3", "A4", "B2", "C2", "B3", "C3", "D4", "G2", "F4", "A5", "D5", "E6"};
  if (with_e78) types.insert(types.end(), {"E7", "E8"});
  for (const char* t : types) {
    auto rs = rs_of(t);
    const std::size_t count = enumerate_abelian_ideals(rs).size();
    const std::size_t alcoves = Wf2Table(rs).elements().size();
    const std::size_t expected = std::size_t{1} << rs.rank();
    o.expect(count == expected && alcoves == expected,
             std::string(t) + ": " + std::to_string(count) + " ideals, " + std::to_string(alcoves) + " alcoves");
  }
  o.detail << "  " << types.size() << " types" << (with_e78 ? " including E7, E8" : "") << "\n";
}

void seven_numbers(Outcome& o) {
  for (const char* t : {"A1", "A2", "B2", "G2"}) {
    auto rs = rs_of(t);
    const int hv = rs.dual_coxeter_number();
    auto b = euler_power(static_cast<unsigned long>(rs.dim()), static_cast<std::size_t>(hv));
    auto ideals = enumerate_abelian_ideals(rs);
    auto table = LieAlgebraTable::build(rs);
    WedgeOracle oracle(table);
    std::vector<mpz_class> full(static_cast<std::size_t>(hv) + 1, 0), graded(full);
    for (const auto& e : enumerate_dominant(rs, hv)) {
      mpz_class d = rs.weyl_dimension(e.lambda);
      full[e.length] += d;
      if (e.cas == e.length) graded[e.length] += d;
    }
    for (int k = 0; k <= hv; ++k) {
      mpz_class series = (k % 2) ? mpz_class(-b[k]) : mpz_class(b[k]);
      mpz_class ck = dim_Ck(rs, ideals, static_cast<std::size_t>(k));
      mpz_class eig = oracle.casimir_eigenspace_dim(k);
      mpz_class quot = binomial(static_cast<unsigned long>(rs.dim()), static_cast<unsigned long>(k)) -
                       mpz_class(oracle.dg_ideal_dim(k));
      std::ostringstream row;
      row << t << " k=" << k << ": series " << series << ", ideals " << ck << ", eigenspace " << eig
          << ", quotient " << quot << ", length-k sum " << full[k] << " (Cas = k part " << graded[k] << ")";
      const bool ok = series == ck && series == eig && series == quot && series == full[k];
      o.expect(ok, row.str());
      if (ok) o.detail << "  " << row.str() << "\n";
    }
  }
}

void vanishing(Outcome& o) {
  o.expect(euler_power(3, 2)[2] == 0, "A1 b_2");
  o.expect(euler_power(8, 3)[3] == 0, "A2 b_3");
  o.expect(euler_power(14, 4)[4] == 0, "G2 b_4");
  o.expect(alcove_coeffs(rs_of("A1"), 2)[2] == 0, "A1 alcove b_2");
  o.expect(alcove_coeffs(rs_of("A2"), 3)[3] == 0, "A2 alcove b_3");
  o.expect(alcove_coeffs(rs_of("G2"), 4)[4] == 0, "G2 alcove b_4");
  o.expect(dim_Ck(rs_of("G2"), 4) == 0, "G2 C_4");
}

void factorizations(Outcome& o) {
  auto f = f_polys(12);
  o.expect(f[2] == RatPoly::from_roots({0, 3}, mpq_class(1, 2)), "f_2 = " + f[2].to_string());
  o.expect(f[3] == RatPoly::from_roots({0, 1, 8}, mpq_class(-1, 6)), "f_3 = " + f[3].to_string());
  o.expect(f[4] == RatPoly::from_roots({0, 1, 3, 14}, mpq_class(1, 24)), "f_4 = " + f[4].to_string());
  for (std::size_t k = 0; k <= 12; ++k)
    o.expect(f[k] == f_poly_direct(k), "recurrence vs direct at k=" + std::to_string(k));
  o.detail << "  f_2 = s(s-3)/2, f_3 = -s(s-1)(s-8)/6, f_4 = s(s-1)(s-3)(s-14)/24\n";
}

void bott_betti(Outcome& o) {
  for (const char* t : {"A1", "A2", "A3", "B2", "G2", "C3", "D4"}) {
    auto rs = rs_of(t);
    auto p = bott_series(rs, 12);
    std::vector<long> by_length(13, 0);
    for (const auto& e : enumerate_dominant(rs, 12)) ++by_length[e.length];
    for (std::size_t k = 0; k <= 12; ++k)
      o.expect(p[k] == by_length[k], std::string(t) + " length " + std::to_string(k) + ": " +
                                         std::to_string(by_length[k]) + " vs " + p[k].get_str());
    std::vector<long> by_dim(rs.num_positive_roots() + 1, 0);
    for (const auto& i : enumerate_abelian_ideals(rs)) ++by_dim[i.k()];
    for (int k = 0; k < rs.dual_coxeter_number() && k < static_cast<int>(by_dim.size()); ++k)
      o.expect(p[k] == by_dim[k], std::string(t) + " ideals of dim " + std::to_string(k));
  }
}

void kostant(Outcome& o) {
  auto sweep = [&](const char* t, std::size_t kmax) {
    auto rs = rs_of(t);
    std::uint64_t subsets = 0;
    for (std::size_t k = 0; k <= kmax; ++k) {
      auto rep = verify_kostant_inequality(rs, k);
      subsets += rep.subsets;
      o.expect(rep.pass(), std::string(t) + " k=" + std::to_string(k) + ": " + std::to_string(rep.violations) +
                               " violations");
    }
    o.detail << "  " << t << ": " << subsets << " subsets\n";
  };
  sweep("A2", 3);
  sweep("B2", 4);
  sweep("G2", 6);
  sweep("A3", 4);
}

void root_partitions(Outcome& o) {
  for (const char* t : {"A1", "A2", "B2"}) {
    auto rep = verify_root_partition_bound(rs_of(t), 6);
    o.expect(rep.pass(), std::string(t) + ": " + std::to_string(rep.violations) + " violations, " +
                             std::to_string(rep.equality_cases) + " equality cases vs " +
                             std::to_string(rep.expected_equality_cases));
    o.detail << "  " << t << ": " << rep.partitions << " partitions\n";
  }
}

void signs(Outcome& o) {
  for (const char* t : {"A1", "A2", "A3", "B2", "G2"}) {
    auto rs = rs_of(t);
    for (const auto& e : enumerate_dominant(rs, 8))
      o.expect(chi_at_aP(rs, e.lambda) == e.sign(), std::string(t) + " lambda " + e.lambda_weight().to_string());
  }
  auto a2 = rs_of("A2");
  std::set<std::vector<std::int64_t>> image;
  for (const auto& e : enumerate_by_casimir(a2, 6)) image.insert(e.lambda);
  std::size_t others = 0;
  for (const auto& w : dominant_weights_up_to_casimir(a2, 6)) {
    if (image.count(w)) continue;
    ++others;
    o.expect(chi_at_aP(a2, w) == 0, "A2 weight outside the alcove image has nonzero character value");
  }
  o.detail << "  A2: " << others << " weights with Cas <= 6 outside the image, " << image.size() << " inside\n";
}

void euler_char(Outcome& o) {
  const std::vector<std::pair<unsigned long, int>> dims{{3, 2}, {8, 3}, {14, 4}, {24, 5}};
  for (auto [d, hv] : dims) {
    auto t = bigraded_dims(d, 12, 12);
    auto b = euler_power(d, 12);
    for (std::size_t k = 0; k <= 12; ++k)
      o.expect(t.euler_characteristic(k) == b[k], "dim " + std::to_string(d) + " k=" + std::to_string(k));
    for (int k = 0; k <= hv; ++k) {
      mpz_class signed_b = (k % 2) ? mpz_class(-b[k]) : mpz_class(b[k]);
      o.expect(t.at(k, k) >= signed_b, "dim " + std::to_string(d) + " concentration at k=" + std::to_string(k));
    }
  }
}

void mcores(Outcome& o) {
  for (int m = 3; m <= 6; ++m)
    for (int k = 0; k <= 3; ++k) {
      auto c = count_null_cores(m, k);
      o.expect(c.matches(), "m=" + std::to_string(m) + " k=" + std::to_string(k) + ": " + std::to_string(c.count) +
                                " vs " + std::to_string(c.expected));
    }
  for (int m = 3; m <= 5; ++m) {
    auto rep = verify_null_core_correspondence(m, 6);
    o.expect(rep.pass(), "null-core correspondence m=" + std::to_string(m));
    o.detail << "  m=" << m << ": " << rep.alcoves << " alcoves, " << rep.unhit.size()
             << " null cores of size <= " << rep.surjectivity_bound << " not reached\n";
  }
}

void structural(Outcome& o) {
  std::size_t elements = 0;
  for (auto type : standard_types(6)) {
    auto rs = RootSystem::build(type);
    o.expect(rs.heisenberg_count() == rs.dual_coxeter_number() - 2, rs.label() + " heisenberg count");
    const int len = rs.rank() >= 5 ? 6 : 8;
    for (const auto& e : enumerate_dominant(rs, len)) {
      ++elements;
      const std::string id = rs.label() + " " + e.lambda_weight().to_string();
      o.expect(e.cas >= e.length, id + ": Cas below length");
      o.expect((e.cas == e.length) == in_Wf2(e), id + ": equality case outside twice the fundamental alcove");
      o.expect(e.length + linear_part_length(rs, e) == two_rho_on_translation(rs, e), id + ": parity identity");
      o.expect(rs.in_root_lattice(e.lambda_weight()), id + ": not in the root lattice");
      o.expect(rs.weyl_dimension(e.lambda) > 0, id + ": dimension");
      o.expect(rs.casimir_eigenvalue(e.lambda_weight()) == e.cas, id + ": Casimir value");
    }
  }
  for (const char* t : {"A1", "A2", "B2", "C2", "G2"}) {
    auto table = LieAlgebraTable::build(rs_of(t));
    o.expect(table.jacobi_failures() == 0 && table.antisymmetry_failures() == 0, std::string(t) + " bracket table");
  }
  o.detail << "  " << elements << " dominant alcoves checked\n";
}

void lehmer(Outcome& o) {
  auto rep = lehmer_probe(50);
  o.expect(rep.values.size() == 50, "probe size");
  o.expect(rep.agrees_with_series, "f_k(24) disagrees with the series");
  for (auto k : rep.zeros) o.expect(false, "ZERO FOUND: f_" + std::to_string(k) + "(24) = 0");
  o.detail << "  no zero of f_k(24) for 1 <= k <= 50\n";
}

struct Criterion {
  const char* name;
  double limit_seconds;  // 0 for no limit
  void (*run)(Outcome&);
};

const std::vector<Criterion> criteria{
    {"Ramanujan coefficients for A4", 60, ramanujan},
    {"abelian ideal count 2^rank", 300, peterson},
    {"seven equal numbers for A1, A2, B2, G2 up to h^vee", 600, seven_numbers},
    {"vanishing coefficients", 0, vanishing},
    {"f_2, f_3, f_4 factorizations and recurrence", 30, factorizations},
    {"Bott series and ideal counts", 0, bott_betti},
    {"Kostant inequality sweep", 120, kostant},
    {"root-partition bound", 0, root_partitions},
    {"character signs at the element of type rho", 0, signs},
    {"Euler characteristic of the bigraded wedge", 0, euler_char},
    {"null m-cores", 120, mcores},
    {"structural invariants", 0, structural},
    {"Lehmer probe", 30, lehmer},
};

bool run_one(std::size_t n) {
  const Criterion& c = criteria[n - 1];
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.run(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << "  exception: " << e.what() << "\n";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (c.limit_seconds > 0 && secs > c.limit_seconds) {
    o.pass = false;
    o.detail << "  runtime " << secs << " s exceeds " << c.limit_seconds << " s\n";
  }
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << c.name << " (" << secs << " s)\n"
            << o.detail.str();
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> selected;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--with-e78") == 0) {
      with_e78 = true;
      continue;
    }
    const long n = std::strtol(argv[i], nullptr, 10);
    if (n < 1 || n > static_cast<long>(criteria.size())) {
      std::cerr << "usage: acceptance [--with-e78] [1.." << criteria.size() << "]\n";
      return 2;
    }
    selected.push_back(static_cast<std::size_t>(n));
  }
  if (selected.empty())
    for (std::size_t n = 1; n <= criteria.size(); ++n) selected.push_back(n);
  std::size_t failed = 0;
  for (auto n : selected)
    if (!run_one(n)) ++failed;
  if (selected.size() > 1) std::cout << (selected.size() - failed) << "/" << selected.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
