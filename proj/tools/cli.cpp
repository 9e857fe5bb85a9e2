#include "cli.hpp"

#include <algorithm>
#include <complex>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hcn/arith.hpp"
#include "hcn/cusp.hpp"
#include "hcn/gauss.hpp"
#include "hcn/hurwitz.hpp"
#include "hcn/moments.hpp"
#include "hcn/qseries.hpp"
#include "hcn/verify.hpp"

namespace hcn::cli {

namespace {

std::string fmt_rational(const Rational& v, bool exact, bool decimal) {
  if (decimal) {
    std::ostringstream os;
    os << std::setprecision(12) << v.to_double();
    return os.str();
  }
  return exact ? v.to_string_exact() : v.to_string();
}

std::string fmt_complex(std::complex<double> z) {
  std::ostringstream os;
  os << std::setprecision(12) << z.real() << (z.imag() < 0 ? " - " : " + ")
     << std::abs(z.imag()) << "i";
  return os.str();
}

int run_hurwitz(std::int64_t n, bool exact, bool decimal, std::ostream& out) {
  out << fmt_rational(hurwitz_class_number(n), exact, decimal) << "\n";
  return 0;
}

int run_table(std::int64_t max_n, const std::string& out_file, int jobs,
              std::ostream& out, std::ostream& err) {
  HurwitzTable::BuildOptions opts;
  opts.jobs = jobs;
  err << "building Hurwitz table to " << max_n << "\n";
  const HurwitzTable table = HurwitzTable::load_or_build(max_n, opts);
  if (out_file.empty()) {
    table.write(out);
  } else {
    std::ofstream f(out_file);
    if (!f) {
      err << "error: cannot open " << out_file << "\n";
      return 2;
    }
    table.write(f);
  }
  return 0;
}

// Closed-form dispatch for the moment subcommand; empty optional means the
// (kappa, M) combination has no implemented closed form.
std::optional<Rational> moment_closed(std::int64_t kappa, std::int64_t m,
                                      std::int64_t M, std::int64_t n) {
  if (kappa == 0 && M == 1) return zeroth_m1_closed(n);
  if (kappa == 0 && M == 3) return zeroth_m3_closed(static_cast<int>(m), n);
  if (kappa == 2 && M == 3) {
    const QSeries eta = eta_quotient_pow8_v3(n + 1);
    return second_m3_closed(static_cast<int>(m), n, eta);
  }
  return std::nullopt;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact Hurwitz class number moments, Gauss sums and q-series"};
  app.name("hcn");
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print help");

  // hurwitz <n>
  auto* sub_h = app.add_subcommand("hurwitz", "Print the Hurwitz class number H(n)");
  std::int64_t h_n = 0;
  bool h_exact = false, h_decimal = false;
  sub_h->add_option("n", h_n, "Index n >= 0")->required();
  sub_h->add_flag("--exact", h_exact, "Always print p/q");
  sub_h->add_flag("--decimal", h_decimal, "Print 12 significant digits");

  // table --max N [--out FILE]
  auto* sub_t = app.add_subcommand("table", "Build the H table and emit it");
  std::int64_t t_max = 0;
  std::string t_out;
  int t_jobs = 1;
  sub_t->add_option("--max", t_max, "Largest n in the table")->required();
  sub_t->add_option("--out", t_out, "Write to this file instead of stdout");
  sub_t->add_option("--jobs", t_jobs, "Worker threads for the build")
      ->default_val(1);

  // moment
  auto* sub_m = app.add_subcommand("moment", "Moments of class numbers in progressions");
  std::int64_t m_kappa = 0, m_m = 0, m_M = 1, m_n = 0, m_to = -1;
  bool m_closed = false, m_brute = false, m_both = false;
  bool m_exact = false, m_decimal = false;
  sub_m->add_option("--kappa", m_kappa, "Moment power")->default_val(0);
  sub_m->add_option("--m", m_m, "Residue class")->default_val(0);
  sub_m->add_option("--M", m_M, "Modulus")->default_val(1);
  sub_m->add_option("--n", m_n, "Argument n >= 1")->required();
  sub_m->add_option("--to", m_to, "Emit CSV rows for n..to over all residues");
  auto* f_closed = sub_m->add_flag("--closed", m_closed, "Closed form only");
  auto* f_brute = sub_m->add_flag("--brute", m_brute, "Brute force only");
  auto* f_both = sub_m->add_flag("--both", m_both, "Both, with a match flag");
  f_closed->excludes(f_brute)->excludes(f_both);
  f_brute->excludes(f_both);
  sub_m->add_flag("--exact", m_exact, "Always print p/q");
  sub_m->add_flag("--decimal", m_decimal, "Print 12 significant digits");

  // gauss <a> <b> <c>
  auto* sub_g = app.add_subcommand("gauss", "Generalized quadratic Gauss sum G(a,b;c)");
  std::int64_t g_a = 0, g_b = 0, g_c = 1;
  sub_g->add_option("a", g_a)->required();
  sub_g->add_option("b", g_b)->required();
  sub_g->add_option("c", g_c, "Modulus c >= 1")->required();

  // cusp --h H --k K --m M0 --M MOD
  auto* sub_c = app.add_subcommand("cusp", "Cusp growth constants at h/k");
  sub_c->set_help_flag("--help", "Print help");
  std::int64_t c_h = 0, c_k = 1, c_m = 0, c_M = 3;
  sub_c->add_option("--h", c_h, "Cusp numerator")->required();
  sub_c->add_option("--k", c_k, "Cusp denominator >= 1")->required();
  sub_c->add_option("--m", c_m, "Theta residue class")->default_val(0);
  sub_c->add_option("--M", c_M, "Theta modulus")->default_val(3);

  // qexp <series-id> --prec P
  auto* sub_q = app.add_subcommand("qexp", "Print a q-expansion");
  std::string q_id;
  std::int64_t q_prec = 10, q_kappa = 0, q_m = 0, q_M = 1, q_ell = 1;
  std::string q_format = "text";
  int q_jobs = 1;
  sub_q->add_option("series-id", q_id,
                    "One of: hcal, theta, eta8v3, e2, lambda, g1m3, e2lhs")
      ->required();
  sub_q->add_option("--prec", q_prec, "Coefficients below this exponent")
      ->required();
  sub_q->add_option("--kappa", q_kappa, "theta only")->default_val(0);
  sub_q->add_option("--m", q_m, "theta/lambda/g1m3")->default_val(0);
  sub_q->add_option("--M", q_M, "theta/lambda")->default_val(1);
  sub_q->add_option("--ell", q_ell, "lambda only")->default_val(1);
  sub_q->add_option("--format", q_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");
  sub_q->add_option("--jobs", q_jobs, "Worker threads for table builds")
      ->default_val(1);

  // verify <check-id|all>
  auto* sub_v = app.add_subcommand("verify", "Run identity checks");
  std::string v_id = "all";
  std::string v_profile = "default", v_format = "json";
  int v_jobs = 1;
  std::int64_t v_max = 0, v_prec = 0, v_kmax = 0, v_mmax = 0, v_count = 0,
               v_seed = 0, v_calib = 0;
  sub_v->add_option("check", v_id, "Check id or 'all'")->default_val("all");
  sub_v->add_option("--profile", v_profile, "default or ci")
      ->check(CLI::IsMember({"default", "ci"}))
      ->default_val("default");
  sub_v->add_option("--format", v_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->default_val("json");
  sub_v->add_option("--jobs", v_jobs, "Concurrent checks")->default_val(1);
  auto* ov_max = sub_v->add_option("--max", v_max, "Range override");
  auto* ov_prec = sub_v->add_option("--prec", v_prec, "Precision override");
  auto* ov_kmax = sub_v->add_option("--kmax", v_kmax, "Cusp k bound override");
  auto* ov_mmax = sub_v->add_option("--mmax", v_mmax, "Theta M bound override");
  auto* ov_count = sub_v->add_option("--count", v_count, "Sample size override");
  auto* ov_seed = sub_v->add_option("--seed", v_seed, "Sampling seed");
  auto* ov_calib =
      sub_v->add_option("--calib-max", v_calib, "Calibration range override");

  std::vector<std::string> argv_s;
  argv_s.reserve(args.size() + 1);
  argv_s.emplace_back("hcn");
  argv_s.insert(argv_s.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_s.size());
  for (const auto& s : argv_s) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(sub_h)) return run_hurwitz(h_n, h_exact, h_decimal, out);

    if (app.got_subcommand(sub_t)) return run_table(t_max, t_out, t_jobs, out, err);

    if (app.got_subcommand(sub_m)) {
      if (m_n < 1) {
        err << "error: --n must be >= 1\n";
        return 2;
      }
      if (m_to >= 0) {
        if (m_closed || m_brute || m_both) {
          err << "error: --to emits brute CSV and excludes mode flags\n";
          return 2;
        }
        if (m_to < m_n) {
          err << "error: --to must be >= --n\n";
          return 2;
        }
        const HurwitzTable table = HurwitzTable::load_or_build(4 * m_to);
        write_moment_csv(out, m_kappa, m_M, m_n, m_to, table);
        return 0;
      }
      const bool want_closed = m_closed || m_both;
      const bool want_brute = m_brute || m_both || (!m_closed && !m_both);
      std::optional<Rational> closed;
      if (want_closed) {
        // Validate the combination before any table work.
        if (!(m_kappa == 0 && (m_M == 1 || m_M == 3)) &&
            !(m_kappa == 2 && m_M == 3)) {
          err << "error: no closed form for kappa=" << m_kappa
              << ", M=" << m_M << " (have kappa=0 M in {1,3}; kappa=2 M=3)\n";
          return 2;
        }
        closed = moment_closed(m_kappa, ((m_m % m_M) + m_M) % m_M, m_M, m_n);
      }
      std::optional<Rational> brute;
      if (want_brute) {
        const HurwitzTable table = HurwitzTable::load_or_build(4 * m_n);
        brute = moment_brute(MomentQuery(m_kappa, m_m, m_M, m_n), table);
      }
      if (m_both) {
        out << "brute=" << fmt_rational(*brute, m_exact, m_decimal)
            << " closed=" << fmt_rational(*closed, m_exact, m_decimal)
            << " match=" << (*brute == *closed ? "true" : "false") << "\n";
        return *brute == *closed ? 0 : 1;
      }
      out << fmt_rational(m_closed ? *closed : *brute, m_exact, m_decimal)
          << "\n";
      return 0;
    }

    if (app.got_subcommand(sub_g)) {
      const CyclotomicSum s = gauss_brute(g_a, g_b, g_c);
      out << "mult = [";
      for (std::int64_t j = 0; j < s.modulus; ++j) {
        if (j) out << ",";
        out << s.mult[static_cast<std::size_t>(j)];
      }
      out << "]\n";
      out << "brute  = " << fmt_complex(s.eval()) << "\n";
      out << "closed = " << fmt_complex(gauss_closed(g_a, g_b, g_c)) << "\n";
      return 0;
    }

    if (app.got_subcommand(sub_c)) {
      const CuspPoint p(c_h, c_k);
      out << "conventions: i^(3/2) = e^(3*pi*i/4), i^(-1/2) = e^(-pi*i/4), "
             "2-power Gauss forms use eps^(-1)\n";
      out << "hhat_growth      = " << fmt_complex(hhat_growth(p)) << "\n";
      out << "theta_growth     = " << fmt_complex(theta_growth(p, c_m, c_M))
          << "\n";
      out << "product_growth   = " << fmt_complex(product_growth(p, c_m, c_M))
          << "\n";
      out << "c_mM             = " << fmt_complex(c_mM(p, c_m, c_M)) << "\n";
      const std::complex<double> pushed = push_u(
          4,
          [&](const CuspPoint& q) { return product_growth(q, c_m, c_M); }, p);
      out << "push_u4(product) = " << fmt_complex(pushed) << "\n";
      return 0;
    }

    if (app.got_subcommand(sub_q)) {
      std::optional<QSeries> series;
      if (q_id == "hcal") {
        const HurwitzTable table = HurwitzTable::load_or_build(q_prec - 1);
        series = hurwitz_generating_series(table, q_prec);
      } else if (q_id == "theta") {
        series = theta_series(q_kappa, q_m, q_M, q_prec);
      } else if (q_id == "eta8v3") {
        series = eta_quotient_pow8_v3(q_prec);
      } else if (q_id == "e2") {
        series = e2_series(q_prec);
      } else if (q_id == "lambda") {
        series = lambda_series(q_ell, q_m, q_M, q_prec);
      } else if (q_id == "g1m3") {
        const HurwitzTable table = HurwitzTable::load_or_build(4 * q_prec - 4);
        series = verify::g1m3_series(static_cast<int>(q_m), q_prec, table);
      } else if (q_id == "e2lhs") {
        const HurwitzTable table = HurwitzTable::load_or_build(12 * q_prec - 12);
        series = verify::e2_identity_lhs(q_prec, table);
      } else {
        err << "error: unknown series-id " << q_id << "\n";
        return 2;
      }
      out << (q_format == "json" ? to_json(*series)
                                 : to_display_string(*series))
          << "\n";
      return 0;
    }

    // verify
    std::vector<std::string> ids;
    if (v_id == "all") {
      ids = verify::registered_checks();
    } else if (verify::is_registered(v_id)) {
      ids = {v_id};
    } else {
      err << "error: unknown check " << v_id << "; known:";
      for (const auto& id : verify::registered_checks()) err << " " << id;
      err << "\n";
      return 2;
    }
    verify::SuiteOptions opts;
    opts.jobs = v_jobs;
    if (v_profile == "ci") opts.params["profile"] = "ci";
    const auto set_if = [&](const CLI::Option* o, const char* key,
                            std::int64_t val) {
      if (o->count() > 0) opts.params[key] = std::to_string(val);
    };
    set_if(ov_max, "max", v_max);
    set_if(ov_prec, "prec", v_prec);
    set_if(ov_kmax, "kmax", v_kmax);
    set_if(ov_mmax, "mmax", v_mmax);
    set_if(ov_count, "count", v_count);
    set_if(ov_seed, "seed", v_seed);
    set_if(ov_calib, "calib_max", v_calib);
    err << "running " << ids.size() << " check(s), profile " << v_profile
        << "\n";
    const auto reports = verify::run_suite(ids, opts);
    out << (v_format == "csv" ? verify::reports_to_csv(reports)
                              : verify::reports_to_json(reports));
    if (v_format == "json") out << "\n";
    return verify::all_passed(reports) ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hcn::cli
