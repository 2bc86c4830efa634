// Command-line front end: freeness certification, shuffle-map kernel
// dimensions, Lyndon/necklace counts, P_m/A_m/Q_m serialization and the
// diophantine box search, with JSON output for machine consumption.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nichols/analyzer.hpp"
#include "nichols/braiding_spec.hpp"
#include "nichols/pm.hpp"
#include "nichols/report_json.hpp"
#include "nichols/shuffle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNotFree = 2;

nichols::DegreeVector degree_from_args(const std::vector<int>& entries) {
  if (entries.empty()) throw CLI::ValidationError("degree", "no degree entries given");
  for (int e : entries)
    if (e < 0) throw CLI::ValidationError("degree", "degree entries must be nonnegative");
  return nichols::DegreeVector(entries);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json degree_json(const nichols::DegreeVector& m) { return nlohmann::json(m.entries()); }

// ---- lyndon ----------------------------------------------------------------

void print_lyndon_row(const nichols::DegreeVector& m, bool with_words, bool as_json,
                      nlohmann::json* sink) {
  const long ell = nichols::lyndon_count(m);
  const long nm = nichols::necklace_count(m);
  const long g = m.gcd();
  const bool has_n = m.total() >= 2;
  if (as_json) {
    nlohmann::json row;
    row["m"] = degree_json(m);
    row["lyndon_count"] = ell;
    row["necklace_count"] = nm;
    row["gcd"] = g;
    if (has_n) row["N"] = m.big_n();
    if (with_words) {
      nlohmann::json words = nlohmann::json::array();
      for (const nichols::Word& w : nichols::lyndon_words(m))
        words.push_back(nichols::word_to_string(w));
      row["words"] = words;
    }
    sink->push_back(row);
    return;
  }
  std::printf("%-10s ell=%-6ld N_m=%-6ld gcd=%-4ld", m.to_string().c_str(), ell, nm, g);
  if (has_n)
    std::printf(" N(m)=%ld\n", m.big_n());
  else
    std::printf("\n");
  if (with_words)
    for (const nichols::Word& w : nichols::lyndon_words(m))
      std::printf("  %s\n", nichols::word_to_string(w).c_str());
}

int cmd_lyndon(const std::vector<int>& entries, int n_letters, int all_upto, bool words,
               bool json) {
  nlohmann::json sink = nlohmann::json::array();
  if (all_upto > 0) {
    for (int s = 1; s <= all_upto; ++s)
      for (const nichols::DegreeVector& m : nichols::degrees_with_total(n_letters, s))
        if (!m.is_zero()) print_lyndon_row(m, words, json, &sink);
  } else {
    print_lyndon_row(degree_from_args(entries), words, json, &sink);
  }
  if (json) std::printf("%s\n", sink.dump().c_str());
  return kExitOk;
}

// ---- poly ------------------------------------------------------------------

int cmd_poly(const std::vector<int>& entries, const std::string& which, bool json) {
  const nichols::DegreeVector m = degree_from_args(entries);
  if (which == "qm") {
    const nichols::LaurentMonomial q = nichols::q_monomial(m);
    std::printf("%s\n", json ? nichols::LaurentPolynomial::term(1, q).to_json_string().c_str()
                             : q.to_string().c_str());
    return kExitOk;
  }
  if (which == "pm" || which == "am") {
    if (which == "am" && m.nonzero_letters() < 2) {
      // single-letter A_m is a genuine quotient; report its factor form
      const nichols::CyclotomicProductForm a = nichols::a_form(m);
      std::printf("%s\n", a.to_string().c_str());
      return kExitOk;
    }
    const nichols::LaurentPolynomial p =
        which == "pm" ? nichols::p_poly(m) : nichols::a_form(m).expand();
    std::printf("%s\n", json ? p.to_json_string().c_str() : p.to_string().c_str());
    return kExitOk;
  }
  // factors
  const nichols::CyclotomicProductForm pf = nichols::p_factor_form(m);
  const nichols::CyclotomicProductForm af = nichols::a_form(m);
  const nichols::PmCase shape = nichols::classify(m);
  if (json) {
    auto form_json = [](const nichols::CyclotomicProductForm& f) {
      nlohmann::json j;
      j["sign"] = f.sign;
      nlohmann::json mult = nlohmann::json::object();
      for (const auto& [d, k] : f.multiplicities) mult[std::to_string(d)] = k;
      j["multiplicities"] = mult;
      return j;
    };
    nlohmann::json j;
    j["m"] = degree_json(m);
    j["case"] = nichols::pm_case_name(shape.tag);
    j["Q"] = nichols::LaurentPolynomial::term(1, nichols::q_monomial(m)).to_json_string();
    j["P"] = form_json(pf);
    j["A"] = form_json(af);
    std::printf("%s\n", j.dump().c_str());
  } else {
    std::printf("case = %s\n", nichols::pm_case_name(shape.tag));
    std::printf("Q = %s\n", nichols::q_monomial(m).to_string().c_str());
    std::printf("P = %s\n", pf.to_string().c_str());
    std::printf("A = %s\n", af.to_string().c_str());
  }
  return kExitOk;
}

// ---- free / kernel / dioph --------------------------------------------------

int cmd_free(const std::string& spec_path, int maxdeg, bool verify) {
  const auto spec = nichols::BraidingSpec::from_json_string(read_file(spec_path));
  const nichols::BraidingMatrix q = spec.braiding();
  const nichols::FreenessReport report = nichols::freeness_check(q, maxdeg);
  if (!verify) {
    std::printf("%s\n", nichols::to_json_string(report).c_str());
    return report.free_up_to_bound ? kExitOk : kExitNotFree;
  }
  // augment the report with brute-force symmetrizer kernels at the witnesses
  nlohmann::json j = nlohmann::json::parse(nichols::to_json_string(report));
  nlohmann::json kernels = nlohmann::json::array();
  for (const nichols::DegreeVector& m : report.witnesses) {
    nichols::HomogeneousComponent comp(m);
    kernels.push_back({{"m", degree_json(m)},
                       {"relation_dim", nichols::symmetrizer_matrix(comp, q).kernel_dim()}});
  }
  j["witness_kernels"] = kernels;
  std::printf("%s\n", j.dump().c_str());
  return report.free_up_to_bound ? kExitOk : kExitNotFree;
}

int cmd_kernel(const std::string& spec_path, const std::vector<int>& entries, bool brute,
               bool dump_shuffle) {
  const auto spec = nichols::BraidingSpec::from_json_string(read_file(spec_path));
  const nichols::BraidingMatrix q = spec.braiding();
  const nichols::DegreeVector m = degree_from_args(entries);
  const nichols::KernelReport report = nichols::kernel_dim(q, m, brute);
  if (!dump_shuffle) {
    std::printf("%s\n", nichols::to_json_string(report).c_str());
    return kExitOk;
  }
  nlohmann::json j = nlohmann::json::parse(nichols::to_json_string(report));
  const nichols::HomogeneousComponent comp(m);
  const nichols::OperatorMatrix s = nichols::s1_matrix(m.total() - 1, comp, q);
  nlohmann::json basis = nlohmann::json::array();
  for (const nichols::Word& w : comp.basis()) basis.push_back(nichols::word_to_string(w));
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < s.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int col = 0; col < s.cols(); ++col)
      row.push_back(nlohmann::json::parse(nichols::to_json_string(s.at(r, col))));
    rows.push_back(row);
  }
  j["shuffle_matrix"] = {{"basis", basis}, {"rows", rows}};
  std::printf("%s\n", j.dump().c_str());
  return kExitOk;
}

int cmd_dioph(const std::string& spec_path, int box) {
  const auto spec = nichols::BraidingSpec::from_json_string(read_file(spec_path));
  const auto eb = spec.exponent_braiding();
  if (!eb) throw std::invalid_argument("dioph needs an exponent-form spec");
  const std::vector<nichols::DegreeVector> sols = nichols::diophantine_search(*eb, box);
  nlohmann::json j;
  j["box"] = box;
  nlohmann::json arr = nlohmann::json::array();
  for (const nichols::DegreeVector& m : sols) arr.push_back(degree_json(m));
  j["solutions"] = arr;
  std::printf("%s\n", j.dump().c_str());
  return sols.empty() ? kExitOk : kExitNotFree;
}

// ---- selftest ---------------------------------------------------------------

int cmd_selftest(std::uint64_t seed) {
  using namespace nichols;
  std::printf("seed = 0x%llX\n", static_cast<unsigned long long>(seed));
  Rng rng(seed);
  int failures = 0;
  auto check = [&](const char* name, bool ok) {
    std::printf("%-34s %s\n", name, ok ? "ok" : "FAIL");
    if (!ok) ++failures;
  };

  {
    // Laurent ring axioms on random polynomials
    auto random_poly = [&] {
      LaurentPolynomial p;
      for (int t = rng.between(1, 4); t > 0; --t) {
        LaurentMonomial mono;
        for (int v = rng.between(0, 2); v > 0; --v)
          mono *= LaurentMonomial::variable(static_cast<int>(rng.between(1, 2)),
                                            static_cast<int>(rng.between(1, 2)),
                                            rng.between(-2, 2));
        p += LaurentPolynomial::term(Int(rng.between(-3, 3)), mono);
      }
      return p;
    };
    bool ok = true;
    for (int it = 0; it < 40 && ok; ++it) {
      LaurentPolynomial a = random_poly(), b = random_poly(), c = random_poly();
      ok = (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && a + b == b + a &&
           a * LaurentPolynomial::one() == a;
    }
    check("laurent ring axioms", ok);
  }

  {
    // necklace identity N_m = sum over d | gcd(m) of ell_{m/d}
    bool ok = true;
    for (int s = 1; s <= 7 && ok; ++s)
      for (const DegreeVector& m : degrees_with_total(2, s))
        if (!m.is_zero() && necklace_count(m) != static_cast<long>(necklaces(m).size())) ok = false;
    check("necklace count identity", ok);
  }

  {
    // braid relations and the shuffle identity at a random rational braiding
    bool ok = true;
    const BraidingMatrix q = BraidingMatrix::random_rational(2, rng);
    for (const DegreeVector& m : degrees_with_total(2, 4)) {
      if (m.is_zero()) continue;
      HomogeneousComponent comp(m);
      ok = ok && braid_product_matrix({1, 2, 1}, comp, q) == braid_product_matrix({2, 1, 2}, comp, q);
      for (int k = 1; k < m.total(); ++k) ok = ok && braid_identity_check(k, m, q);
    }
    check("braid relations + shuffle identity", ok);
  }

  {
    // field axioms in Q(zeta_5) and Q(t)
    bool ok = true;
    const auto c5 = FieldContext::make_cyclotomic(5);
    const auto tr = FieldContext::make_transcendental();
    for (int it = 0; it < 25 && ok; ++it) {
      ExactScalar a = ExactScalar::zeta_power(c5, rng.between(0, 4)) *
                      ExactScalar::from_rational(c5, rng.nonzero_rational());
      ExactScalar b = ExactScalar::zeta_power(c5, rng.between(0, 4)) +
                      ExactScalar::from_rational(c5, rng.nonzero_rational());
      ok = (a * b) * a == a * (b * a) && a * a.inverse() == ExactScalar::one(c5);
      ExactScalar x = ExactScalar::t_power(tr, rng.between(-3, 3)) +
                      ExactScalar::from_rational(tr, rng.nonzero_rational());
      if (!x.is_zero()) ok = ok && x * x.inverse() == ExactScalar::one(tr);
    }
    check("field axioms", ok);
  }

  {
    // closed-form determinants against brute force
    bool ok = true;
    const BraidingMatrix q = BraidingMatrix::random_rational(2, rng);
    for (const DegreeVector& m : degrees_with_total(2, 4)) {
      if (m.is_zero()) continue;
      HomogeneousComponent comp(m);
      ok = ok && cycle_det(m, q) == cycle_matrix(comp, q).det();
      if (m.total() >= 2) ok = ok && cycle2_det(m, q) == cycle2_matrix(comp, q).det();
    }
    check("cycle determinants", ok);
  }

  {
    // rank + kernel = dim, det multiplicative
    bool ok = true;
    const auto c4 = FieldContext::make_cyclotomic(4);
    for (int it = 0; it < 10 && ok; ++it) {
      const int n = 4;
      OperatorMatrix a(c4, n, n), b(c4, n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          a.at(i, j) = ExactScalar::from_integer(c4, rng.between(-2, 2)) *
                       ExactScalar::zeta_power(c4, rng.between(0, 3));
          b.at(i, j) = ExactScalar::from_integer(c4, rng.between(-2, 2));
        }
      ok = a.rank() + a.kernel_dim() == n && (a * b).det() == a.det() * b.det();
    }
    check("exact linear algebra", ok);
  }

  return failures == 0 ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact freeness and shuffle-kernel analysis of diagonal Nichols algebras"};
  app.require_subcommand(1);

  // lyndon
  auto* lyndon = app.add_subcommand("lyndon", "Lyndon word and necklace counts for a degree");
  std::vector<int> lyndon_m;
  int lyndon_n = 2, lyndon_upto = 0;
  bool lyndon_words_flag = false, lyndon_json = false;
  lyndon->add_option("m", lyndon_m, "degree entries m_1 ... m_n");
  lyndon->add_option("--n", lyndon_n, "alphabet size for --all-upto")->check(CLI::PositiveNumber);
  lyndon->add_option("--all-upto", lyndon_upto, "list every degree with |m| <= D");
  lyndon->add_flag("--words", lyndon_words_flag, "also list the Lyndon words");
  lyndon->add_flag("--json", lyndon_json, "JSON output");

  // poly
  auto* poly = app.add_subcommand("poly", "P_m, A_m, Q_m and their cyclotomic factor forms");
  std::vector<int> poly_m;
  bool poly_pm = false, poly_am = false, poly_qm = false, poly_factors = false, poly_json = false;
  poly->add_option("m", poly_m, "degree entries m_1 ... m_n")->required();
  poly->add_flag("--pm", poly_pm, "print P_m");
  poly->add_flag("--am", poly_am, "print A_m (expanded)");
  poly->add_flag("--qm", poly_qm, "print Q_m");
  poly->add_flag("--factors", poly_factors, "print the Phi-multiplicity forms of P_m and A_m");
  poly->add_flag("--json", poly_json, "JSON output");

  // free
  auto* free_cmd = app.add_subcommand("free", "freeness report up to a degree bound");
  std::string free_spec;
  int free_maxdeg = 0;
  bool free_verify = false;
  free_cmd->add_option("spec", free_spec, "braiding spec JSON file")->required();
  free_cmd->add_option("--maxdeg", free_maxdeg, "degree bound D")->required();
  free_cmd->add_flag("--verify", free_verify, "brute-force symmetrizer kernels at the witnesses");

  // kernel
  auto* kernel = app.add_subcommand("kernel", "shuffle-map kernel dimension at a degree");
  std::string kernel_spec;
  std::vector<int> kernel_m;
  bool kernel_brute = false, kernel_dump = false;
  kernel->add_option("spec", kernel_spec, "braiding spec JSON file")->required();
  kernel->add_option("m", kernel_m, "degree entries m_1 ... m_n")->required();
  kernel->add_flag("--brute", kernel_brute, "verify by exact rank computations");
  kernel->add_flag("--dump-shuffle", kernel_dump,
                   "include the shuffle matrix (basis header + row-major scalars)");

  // dioph
  auto* dioph = app.add_subcommand("dioph", "diophantine freeness criterion box search");
  std::string dioph_spec;
  int dioph_box = 0;
  dioph->add_option("spec", dioph_spec, "braiding spec JSON file")->required();
  dioph->add_option("--box", dioph_box, "search box bound")->required();

  // selftest
  auto* selftest = app.add_subcommand("selftest", "run the randomized invariant suites");
  std::uint64_t seed = nichols::Rng::kDefaultSeed;
  selftest->add_option("--seed", seed, "RNG seed (printed for replay)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (lyndon->parsed()) {
      if (lyndon_m.empty() && lyndon_upto == 0)
        throw std::invalid_argument("lyndon needs a degree or --all-upto");
      return cmd_lyndon(lyndon_m, lyndon_n, lyndon_upto, lyndon_words_flag, lyndon_json);
    }
    if (poly->parsed()) {
      const int picks = int(poly_pm) + int(poly_am) + int(poly_qm) + int(poly_factors);
      if (picks != 1) throw std::invalid_argument("pick exactly one of --pm --am --qm --factors");
      const std::string which = poly_pm ? "pm" : poly_am ? "am" : poly_qm ? "qm" : "factors";
      return cmd_poly(poly_m, which, poly_json);
    }
    if (free_cmd->parsed()) return cmd_free(free_spec, free_maxdeg, free_verify);
    if (kernel->parsed()) return cmd_kernel(kernel_spec, kernel_m, kernel_brute, kernel_dump);
    if (dioph->parsed()) return cmd_dioph(dioph_spec, dioph_box);
    if (selftest->parsed()) return cmd_selftest(seed);
  } catch (const nichols::HypothesisViolation& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitError;
  }
  return kExitError;
}
