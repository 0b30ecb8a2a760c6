// ezeta: command-line evaluator for zeta-family constants through the
// Euler-transformed series, with certified error bounds.

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cache.hpp"
#include "eulerzeta/bernoulli.hpp"
#include "eulerzeta/closed_forms.hpp"
#include "eulerzeta/genfun.hpp"
#include "eulerzeta/harmonic.hpp"
#include "eulerzeta/zeta_accel.hpp"
#include "report.hpp"

namespace {

using namespace eulerzeta;
using ezeta::CacheEntry;
using ezeta::ConstantsCache;
using ezeta::digits_for;
using ezeta::OutputFormat;
using ezeta::Report;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalidParams = 2;
constexpr int kExitNotConverged = 3;

struct GlobalOptions {
  unsigned precision_bits = 128;
  std::string eps = "1e-30";
  unsigned max_terms = 10000;
  std::string format = "plain";
  std::string cache_path;

  PrecisionConfig config() const {
    return PrecisionConfig(precision_bits, eps, max_terms);
  }
  OutputFormat output() const { return ezeta::parse_format(format); }
};

double ms_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   start)
      .count();
}

std::string generator_line(const GlobalOptions& globals, const std::string& command) {
  return "ezeta " + command + " --prec " + std::to_string(globals.precision_bits) +
         " --eps " + globals.eps + " --max-terms " + std::to_string(globals.max_terms);
}

// Keep pi and ln2 alongside computed constants; they are the references
// everything else leans on and cost nothing to refresh.
void refresh_reference_constants(ConstantsCache& cache, const GlobalOptions& globals) {
  for (const char* name : {"pi", "ln2"}) {
    if (cache.lookup(name, globals.precision_bits)) continue;
    const BigReal value = std::string(name) == "pi"
                              ? BigReal::pi(globals.precision_bits)
                              : BigReal::ln2(globals.precision_bits);
    cache.store(CacheEntry{name, value.to_string(digits_for(globals.precision_bits)),
                           globals.precision_bits, "internal: elementary constant", "",
                           "0", 0});
  }
}

int emit_scalar(const GlobalOptions& globals, const std::string& command,
                std::vector<std::pair<std::string, std::string>> parameters,
                const std::string& cache_name,
                const std::function<SeriesResult()>& compute) {
  std::optional<ConstantsCache> cache;
  if (!globals.cache_path.empty()) cache.emplace(globals.cache_path);

  if (cache) {
    if (auto hit = cache->lookup(cache_name, globals.precision_bits)) {
      Report report;
      report.command = command;
      report.parameters = std::move(parameters);
      report.value = hit->value;
      report.error_bound = hit->error_bound.empty() ? "0" : hit->error_bound;
      report.terms_used = hit->terms_used;
      report.precision_bits = globals.precision_bits;
      report.elapsed_ms = 0.0;
      report.from_cache = true;
      std::cout << ezeta::render(report, globals.output());
      return kExitOk;
    }
  }

  const auto start = std::chrono::steady_clock::now();
  const SeriesResult result = compute();
  const Report report = ezeta::make_report(command, std::move(parameters), result,
                                           globals.precision_bits, ms_since(start));
  std::cout << ezeta::render(report, globals.output());
  if (cache && result.converged) {
    cache->store(CacheEntry{cache_name, report.value, globals.precision_bits,
                            generator_line(globals, command), "", report.error_bound,
                            report.terms_used});
    refresh_reference_constants(*cache, globals);
  }
  return result.converged ? kExitOk : kExitNotConverged;
}

int cmd_harmonic(const GlobalOptions& globals, unsigned n, unsigned k, bool exact) {
  const auto start = std::chrono::steady_clock::now();
  const Rational value = harmonic_generalized(n, k);
  Report report;
  report.command = "harmonic";
  report.parameters = {{"n", std::to_string(n)}, {"k", std::to_string(k)}};
  report.value = exact ? value.to_string()
                       : rational_to_real(value, globals.precision_bits)
                             .to_string(digits_for(globals.precision_bits));
  report.error_bound = "0";
  report.terms_used = n;
  report.precision_bits = globals.precision_bits;
  report.elapsed_ms = ms_since(start);
  std::cout << ezeta::render(report, globals.output());
  return kExitOk;
}

int cmd_table(const GlobalOptions& globals, const std::string& what, long m, long i,
              long k, unsigned terms, const std::string& reference) {
  const PrecisionConfig cfg = globals.config();
  const unsigned wp = cfg.working_bits();
  const size_t digits = digits_for(globals.precision_bits);

  std::optional<BigReal> ref;
  if (!reference.empty()) ref = BigReal::from_string(reference, wp);

  // Exact n-th term and the printed series index for each table kind.
  std::function<Rational(unsigned)> exact_term;
  unsigned first_index = 0;
  if (what == "zetahat" || what == "zeta") {
    if (what == "zeta" && k < 2) throw std::invalid_argument("table zeta: need k >= 2");
    if (k < 1) throw std::invalid_argument("table zetahat: need k >= 1");
    auto table = std::make_shared<HarmonicTable>(terms + 1, static_cast<unsigned>(k - 1));
    Rational prefactor(1);
    if (what == "zeta") {
      const Integer tp = Integer(1) << (k - 1);
      prefactor = Rational(tp, tp - 1);
    }
    first_index = 1;
    exact_term = [table, k, prefactor](unsigned n) {
      return prefactor * table->at(n, static_cast<unsigned>(k - 1)) /
             Rational(Integer(n) * (Integer(1) << n));
    };
  } else if (what == "catalan") {
    exact_term = [](unsigned n) { return catalan_series_coefficient(n); };
  } else if (what == "m") {
    const RationalArgument arg(m, i, k);
    arg.validate();
    if (k < 1) throw std::invalid_argument("table m: need k >= 1");
    auto table = std::make_shared<DiffTable>(arg.m, arg.i, terms ? terms : 1,
                                             static_cast<unsigned>(k));
    exact_term = [table, arg](unsigned n) { return m_series_term(arg, n, *table); };
  } else if (what == "naive-m") {
    const RationalArgument arg(m, i, k);
    arg.validate();
    exact_term = [arg](unsigned j) {
      const Integer base = arg.m * j + arg.i;
      Rational t = arg.k >= 0
                       ? Rational(Integer(1), pow(base, static_cast<unsigned long>(arg.k)))
                       : Rational(pow(base, static_cast<unsigned long>(-arg.k)));
      return (j % 2 == 0) ? t : -t;
    };
  } else {
    throw std::invalid_argument("table: unknown series '" + what + "'");
  }

  std::cout << "n,term,partial_sum,abs_error_vs_reference,term_times_2pow_n\n";
  BigReal partial(wp);
  for (unsigned row = 0; row < terms; ++row) {
    const unsigned n = row + first_index;
    const Rational term = exact_term(n);
    const BigReal term_real = BigReal::from_rational(term, wp);
    partial += term_real;
    std::cout << n << "," << term_real.to_string(digits) << ","
              << partial.to_string(digits) << ",";
    if (ref) std::cout << abs(partial - *ref).to_string(3);
    std::cout << "," << ldexp2(term_real, n).to_string(6) << "\n";
  }
  return kExitOk;
}

// First omitted index N with naive-term(N) <= 10^-digits; Leibniz gives the
// matching error bound for the defining alternating series.
Integer naive_leibniz_terms(const std::string& what, long m, long i, long k,
                            unsigned digits) {
  BigReal threshold = pow(BigReal(10, 192),
                          BigReal::from_double(static_cast<double>(digits) /
                                                   static_cast<double>(k), 192));
  Integer bound;
  mpfr_get_z(bound.get_mpz_t(), threshold.raw(), MPFR_RNDD);
  if (what == "catalan") return (bound - 1) / 2;
  if (what == "m") return (bound - i) / m;
  return bound;  // zeta / zetahat over j^{-k}
}

int cmd_bench(const GlobalOptions& globals, const std::string& what, long m, long i,
              long k, unsigned digits) {
  GlobalOptions tuned = globals;
  tuned.eps = "1e-" + std::to_string(digits);
  tuned.precision_bits =
      std::max<unsigned>(globals.precision_bits, static_cast<unsigned>(digits * 4) + 32);
  const PrecisionConfig cfg = tuned.config();

  const auto start = std::chrono::steady_clock::now();
  SeriesResult accel;
  long eff_k = k;
  if (what == "zetahat") {
    accel = zetahat(k, cfg);
  } else if (what == "zeta") {
    accel = zeta_int(k, cfg);
  } else if (what == "catalan") {
    accel = catalan(cfg);
    eff_k = 2;
  } else if (what == "m") {
    accel = m_accel(RationalArgument(m, i, k), cfg);
  } else {
    throw std::invalid_argument("bench: unknown series '" + what + "'");
  }
  Report fast = ezeta::make_report(
      "accelerated",
      {{"series", what}, {"digits", std::to_string(digits)}},
      accel, tuned.precision_bits, ms_since(start));

  Report naive;
  naive.command = "naive-leibniz";
  naive.parameters = {{"series", what}, {"digits", std::to_string(digits)}};
  naive.value = naive_leibniz_terms(what, m, i, eff_k, digits).get_str() +
                " terms required (lower bound)";
  naive.error_bound = "1e-" + std::to_string(digits);
  naive.precision_bits = tuned.precision_bits;
  std::cout << ezeta::render_pair(fast, naive, globals.output());
  return accel.converged ? kExitOk : kExitNotConverged;
}

int cmd_check(const GlobalOptions& globals) {
  const PrecisionConfig cfg = globals.config();
  const unsigned wp = cfg.working_bits();
  std::vector<std::pair<std::string, bool>> results;

  {
    bool ok = true;
    for (unsigned n = 1; n <= 20; ++n) ok = ok && symmetric_identity_check(n).all();
    results.emplace_back("symmetric identities of generalized harmonic numbers", ok);
  }
  {
    bool ok = true;
    for (long m = 1; m <= 3 && ok; ++m) {
      for (long i = 1; i <= m && ok; ++i) {
        const DiffTable table(Integer(m), Integer(i), 10, 5);
        for (long k = 1; k <= 5 && ok; ++k)
          for (unsigned n = 0; n <= 10 && ok; ++n)
            ok = diff_power_closed(Integer(m), Integer(i), k, n, table) ==
                 diff_power_direct(Integer(m), Integer(i), k, n);
      }
    }
    results.emplace_back("closed difference form equals binomial sums", ok);
  }
  {
    const BigReal half = BigReal::from_rational(Rational(1, 2), wp);
    results.emplace_back("integral recursion of harmonic generating functions",
                         f_recursion_check(1, half, cfg).ok &&
                             f_recursion_check(2, BigReal::from_string("0.25", wp), cfg).ok);
    bool ok = true;
    for (long k = 1; k <= 6 && ok; ++k) {
      const SeriesResult f = f_eval(static_cast<unsigned>(k), half, cfg);
      const SeriesResult zh = zetahat(k, cfg);
      ok = abs(f.value - BigReal(4, wp) * zh.value) <=
           f.tail_bound + BigReal(4, wp) * zh.tail_bound +
               ldexp2(BigReal(1, wp), -static_cast<long>(cfg.precision_bits) + 8);
    }
    results.emplace_back("f_k(1/2) = 4 zetahat(k)", ok);
  }
  {
    const EvenGfCheck e3 = even_gf_check(BigReal::from_string("0.3", wp), cfg);
    const EvenGfCheck e5 = even_gf_check(BigReal::from_string("0.5", wp), cfg);
    results.emplace_back("even generating identity (pi t / sin)", bool(e3) && bool(e5));
    const IdentityCheck o3 = odd_gf_check(BigReal::from_string("0.3", wp), cfg);
    const IdentityCheck o3n = odd_gf_check(BigReal::from_string("-0.3", wp), cfg);
    results.emplace_back("odd generating identity", o3.ok && o3n.ok);
  }
  {
    const CatalanHurwitzRelation relation = catalan_hurwitz_relation(cfg);
    results.emplace_back("16K = zeta(2,1/4) - zeta(2,3/4)", relation.difference_ok);
    results.emplace_back("zeta(2,1/4) + zeta(2,3/4) = 2 pi^2", relation.sum_ok);
  }
  {
    bool ok = true;
    for (unsigned l = 1; l <= 3 && ok; ++l) {
      const ClosedValue closed = zeta_even_closed(l, cfg);
      const SeriesResult series = zeta_int(2 * l, cfg);
      ok = abs(closed.value - series.value) <=
           series.tail_bound + ldexp2(abs(closed.value),
                                      -static_cast<long>(cfg.precision_bits) + 8);
    }
    results.emplace_back("zeta at even integers matches Bernoulli closed forms", ok);
  }
  {
    bool ok = true;
    for (unsigned l = 1; l <= 2 && ok; ++l) {
      const SeriesResult series = pi_power_series(l, cfg);
      ok = abs(series.value - pow_int(BigReal::pi(wp), 2 * static_cast<long>(l))) <=
           series.tail_bound + ldexp2(abs(series.value),
                                      -static_cast<long>(cfg.precision_bits) + 8);
    }
    results.emplace_back("pi power expansions", ok);
  }
  results.emplace_back("alternating sums close against hurwitz differences",
                       m_hurwitz_identity_check(RationalArgument(2, 1, 2), cfg) &&
                           m_hurwitz_identity_check(RationalArgument(3, 2, 3), cfg));
  {
    const auto values = monotonicity_report(Integer(2), 8, cfg);
    bool ok = true;
    for (size_t idx = 1; idx < values.size(); ++idx) ok = ok && values[idx] > values[idx - 1];
    results.emplace_back("M(2,1,k) increases in k", ok);
  }

  bool all_ok = true;
  for (const auto& [name, ok] : results) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
    all_ok = all_ok && ok;
  }
  std::cout << (all_ok ? "all checks passed\n" : "some checks FAILED\n");
  return all_ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  GlobalOptions globals;

  CLI::App app{"zeta-family constants via Euler-transformed series with certified bounds"};
  app.require_subcommand(1);
  app.fallthrough();  // let global flags appear after the subcommand
  app.add_option("--prec", globals.precision_bits, "working precision in bits (>= 53)")
      ->capture_default_str();
  app.add_option("--eps", globals.eps, "target truncation bound (decimal)")
      ->capture_default_str();
  app.add_option("--max-terms", globals.max_terms, "series term budget")
      ->capture_default_str();
  app.add_option("--format", globals.format, "output format: plain|json|csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--cache", globals.cache_path, "JSON constants cache file");

  long k = 2, m_arg = 2, i_arg = 1;
  unsigned n_arg = 1, terms = 10, digits = 12;
  bool exact = false;
  std::string what, reference;

  auto* zeta_cmd = app.add_subcommand("zeta", "Riemann zeta at an integer k >= 2");
  zeta_cmd->add_option("k", k, "argument")->required();

  auto* zetahat_cmd =
      app.add_subcommand("zetahat", "alternating zeta (Dirichlet eta) at k >= 0");
  zetahat_cmd->add_option("k", k, "argument")->required();

  app.add_subcommand("catalan", "Catalan's constant");

  auto* m_cmd = app.add_subcommand(
      "m", "alternating sum over the progression i, i+m, ... of order k");
  m_cmd->add_option("m", m_arg, "progression step")->required();
  m_cmd->add_option("i", i_arg, "progression offset, 1 <= i <= m")->required();
  m_cmd->add_option("k", k, "order, k >= 1")->required();

  auto* hurwitz_cmd =
      app.add_subcommand("hurwitz", "Hurwitz zeta(k, i/m) for integer k >= 2");
  hurwitz_cmd->add_option("k", k, "order, k >= 2")->required();
  hurwitz_cmd->add_option("i", i_arg, "numerator, 1 <= i <= m")->required();
  hurwitz_cmd->add_option("m", m_arg, "denominator")->required();

  auto* harmonic_cmd =
      app.add_subcommand("harmonic", "generalized harmonic number H_n^(k)");
  harmonic_cmd->add_option("n", n_arg, "index, n >= 1")->required();
  harmonic_cmd->add_option("k", k, "order, k >= 0")->required();
  harmonic_cmd->add_flag("--exact", exact, "print the exact rational");

  auto* table_cmd = app.add_subcommand("table", "CSV convergence table of a series");
  table_cmd->add_option("what", what, "zeta|zetahat|catalan|m|naive-m")->required();
  table_cmd->add_option("--terms", terms, "rows to emit")->capture_default_str();
  table_cmd->add_option("-k,--k", k, "order")->capture_default_str();
  table_cmd->add_option("-m,--m", m_arg, "progression step")->capture_default_str();
  table_cmd->add_option("-i,--i", i_arg, "progression offset")->capture_default_str();
  table_cmd->add_option("--reference", reference,
                        "decimal reference value for the error column");

  auto* bench_cmd = app.add_subcommand(
      "bench", "accelerated term count vs naive Leibniz lower bound");
  bench_cmd->add_option("what", what, "zeta|zetahat|catalan|m")->required();
  bench_cmd->add_option("--digits", digits, "target decimal digits (>= 4)")
      ->check(CLI::Range(4u, 1000000u))
      ->capture_default_str();
  bench_cmd->add_option("-k,--k", k, "order")->capture_default_str();
  bench_cmd->add_option("-m,--m", m_arg, "progression step")->capture_default_str();
  bench_cmd->add_option("-i,--i", i_arg, "progression offset")->capture_default_str();

  app.add_subcommand("check", "run the identity suites and print pass/fail lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidParams;
  }

  try {
    if (globals.precision_bits < 53)
      throw std::invalid_argument("--prec must be at least 53 bits");
    if (globals.max_terms < 1) throw std::invalid_argument("--max-terms must be >= 1");
    if (!(BigReal::from_string(globals.eps, 64) > BigReal(0, 64)))
      throw std::invalid_argument("--eps must be positive");
    const PrecisionConfig cfg = globals.config();

    if (app.got_subcommand("zeta")) {
      return emit_scalar(globals, "zeta", {{"k", std::to_string(k)}},
                         "zeta(" + std::to_string(k) + ")",
                         [&] { return zeta_int(k, cfg); });
    }
    if (app.got_subcommand("zetahat")) {
      return emit_scalar(globals, "zetahat", {{"k", std::to_string(k)}},
                         "zetahat(" + std::to_string(k) + ")",
                         [&] { return zetahat(k, cfg); });
    }
    if (app.got_subcommand("catalan")) {
      return emit_scalar(globals, "catalan", {}, "catalan",
                         [&] { return catalan(cfg); });
    }
    if (app.got_subcommand("m")) {
      return emit_scalar(
          globals, "m",
          {{"m", std::to_string(m_arg)}, {"i", std::to_string(i_arg)},
           {"k", std::to_string(k)}},
          "m(" + std::to_string(m_arg) + "," + std::to_string(i_arg) + "," +
              std::to_string(k) + ")",
          [&] { return m_accel(RationalArgument(m_arg, i_arg, k), cfg); });
    }
    if (app.got_subcommand("hurwitz")) {
      return emit_scalar(
          globals, "hurwitz",
          {{"k", std::to_string(k)}, {"i", std::to_string(i_arg)},
           {"m", std::to_string(m_arg)}},
          "hurwitz(" + std::to_string(k) + "," + std::to_string(i_arg) + "/" +
              std::to_string(m_arg) + ")",
          [&] { return hurwitz_rational(k, Integer(i_arg), Integer(m_arg), cfg); });
    }
    if (app.got_subcommand("harmonic"))
      return cmd_harmonic(globals, n_arg, static_cast<unsigned>(k), exact);
    if (app.got_subcommand("table"))
      return cmd_table(globals, what, m_arg, i_arg, k, terms, reference);
    if (app.got_subcommand("bench"))
      return cmd_bench(globals, what, m_arg, i_arg, k, digits);
    if (app.got_subcommand("check")) return cmd_check(globals);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidParams;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidParams;
  }
  return kExitOk;
}
