#include "cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "checks.hpp"
#include "hybrid/error.hpp"
#include "hybrid/ext.hpp"
#include "hybrid/hilbert.hpp"
#include "hybrid/lattice.hpp"
#include "hybrid/model.hpp"
#include "hybrid/serredim.hpp"

namespace hybrid::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::int64_t n = 0;
  std::vector<std::int64_t> degrees;
  std::string output;
  std::optional<int> float_digits;

  std::int64_t from = 0;
  std::int64_t to = 30;

  std::int64_t a = 0;
  std::optional<std::int64_t> b;
  std::optional<std::int64_t> m;

  std::int64_t horizon = 600;
  std::optional<std::int64_t> check_horizon;
  std::string csv;
  int threads = 0;
  bool serial = false;
};

Json functor_json(const LatticeFunctor& f) { return Json{{"twist", f.twist}, {"shift", f.shift}}; }

double to_double(const Rational& q, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, q.get_d());
  return std::stod(buf);
}

void put_rational(Json& doc, const std::string& key, const Rational& q, const Options& opt) {
  doc[key] = q.get_str();
  if (opt.float_digits) doc[key + "_float"] = to_double(q, *opt.float_digits);
}

Json model_json(const CompleteIntersectionModel& model) {
  return Json{{"n", model.n()},
              {"degrees", model.degrees()},
              {"d_total", model.d_total()},
              {"codim", model.codim()},
              {"dim_x", model.dim_x()},
              {"index", model.index()},
              {"dim_y_minus", model.dim_y_minus()},
              {"d_max", model.d_max()},
              {"d_min", model.d_min()}};
}

Json document(const char* command) {
  return Json{{"schema", kSchemaVersion}, {"command", command}};
}

CompleteIntersectionModel load_model(const Options& opt) {
  const auto [n, degrees] = reduce_linear(opt.n, opt.degrees);
  return CompleteIntersectionModel::validate(n, degrees);
}

void emit(const std::string& text, const Options& opt, std::ostream& out) {
  if (opt.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.output, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open " + opt.output);
  file << text;
}

std::string cmd_info(const Options& opt) {
  const auto model = load_model(opt);
  Json doc = document("info");
  doc["input"] = Json{{"n", opt.n}, {"degrees", opt.degrees}};
  doc["model"] = model_json(model);
  doc["serre_functor"] = functor_json(serre_functor(model, Side::YMinus));
  doc["serre_functor_y_plus"] = functor_json(serre_functor(model, Side::YPlus));
  doc["canonical_bundle"] = functor_json(canonical_bundle(model));
  const auto closed = sdim_closed_form(model);
  put_rational(doc, "sdim_upper", closed.upper, opt);
  put_rational(doc, "sdim_lower", closed.lower, opt);
  if (model.codim() >= 2) {
    const auto tc = twist_cotwist(model);
    const auto r = power_identity_report(model);
    doc["spherical_twist"] = functor_json(tc.twist);
    doc["spherical_cotwist"] = functor_json(tc.cotwist);
    doc["power_identity"] = Json{{"sliced_degree", r.sliced_degree},
                                 {"c", r.c},
                                 {"index_m", r.index_m},
                                 {"dim_m", r.dim_m},
                                 {"serre_power", r.serre_power},
                                 {"twist_power", r.twist_power},
                                 {"cotwist_power", r.cotwist_power},
                                 {"y_extra_shift", r.y_extra_shift},
                                 {"z_extra_shift", r.z_extra_shift},
                                 {"gcd_agrees", r.gcd_agrees},
                                 {"y_identity_holds", r.y_identity_holds},
                                 {"z_identity_holds", r.z_identity_holds}};
  } else {
    const auto cy = fractional_cy(model);
    Json frac{{"p", cy.p}, {"q", cy.q}, {"note", "lattice period (upper bound for the categorical period)"}};
    put_rational(frac, "cy_dimension", cy.dimension(), opt);
    doc["fractional_cy"] = std::move(frac);
  }
  return doc.dump(2) + "\n";
}

std::string cmd_hilbert(const Options& opt) {
  const auto model = load_model(opt);
  if (opt.to < opt.from) throw Error(ErrorCode::InvalidArgument, "--to must be >= --from");
  const HilbertTable table(model.degrees(), std::max<std::int64_t>(opt.to, 0));
  const KnapsackExtremes knap(model.degrees(), std::max<std::int64_t>(opt.to, 0));
  std::ostringstream csv;
  csv << "j,dim,min_r,max_r\n";
  for (std::int64_t j = opt.from; j <= opt.to; ++j) {
    const auto range = knap.rcharge(j);
    csv << j << ',' << table.h0(j).total().get_str() << ',';
    if (range) csv << range->min_r << ',' << range->max_r;
    else csv << ',';
    csv << '\n';
  }
  return csv.str();
}

std::string cmd_ext(const Options& opt) {
  const auto model = load_model(opt);
  if (opt.b.has_value() == opt.m.has_value()) {
    throw Error(ErrorCode::InvalidArgument, "give exactly one of --b and --m");
  }
  const std::int64_t b = opt.b ? *opt.b : opt.a + *opt.m;
  std::ostringstream csv;
  csv << "t,dim\n";
  for (const auto& [t, c] : hom_table(model, opt.a, b).entries()) {
    csv << t << ',' << c.get_str() << '\n';
  }
  return csv.str();
}

std::string cmd_sdim(const Options& opt) {
  const auto model = load_model(opt);
  if (opt.threads > 0) omp_set_num_threads(opt.threads);
  const auto report =
      sdim_estimates(model, opt.horizon, opt.serial ? Execution::Serial : Execution::Parallel);

  if (!opt.csv.empty()) {
    std::ofstream file(opt.csv, std::ios::binary);
    if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open " + opt.csv);
    file << "m,e_minus,e_plus,upper_sample,lower_sample";
    if (opt.float_digits) file << ",upper_float,lower_float";
    file << '\n';
    for (const auto& p : report.series) {
      file << p.m << ',' << p.e_minus << ',' << p.e_plus << ',' << p.upper_sample.get_str()
           << ',' << p.lower_sample.get_str();
      if (opt.float_digits) {
        file << ',' << Json(to_double(p.upper_sample, *opt.float_digits)).dump() << ','
             << Json(to_double(p.lower_sample, *opt.float_digits)).dump();
      }
      file << '\n';
    }
  }

  Json doc = document("sdim");
  doc["model"] = model_json(model);
  doc["horizon"] = report.horizon;
  doc["window"] = Json{{"m_first", report.series.front().m}, {"m_last", report.series.back().m}};
  put_rational(doc, "upper_estimate", report.upper_estimate, opt);
  put_rational(doc, "lower_estimate", report.lower_estimate, opt);
  put_rational(doc, "upper_closed", report.closed.upper, opt);
  put_rational(doc, "lower_closed", report.closed.lower, opt);
  const Rational upper_gap = abs(report.upper_estimate - report.closed.upper);
  const Rational lower_gap = abs(report.lower_estimate - report.closed.lower);
  put_rational(doc, "upper_gap", upper_gap, opt);
  put_rational(doc, "lower_gap", lower_gap, opt);
  return doc.dump(2) + "\n";
}

std::string cmd_check(const Options& opt, bool& all_passed) {
  const auto model = load_model(opt);
  const auto results = run_checks(model, opt.degrees, opt.check_horizon);
  Json doc = document("check");
  doc["model"] = model_json(model);
  Json checks = Json::array();
  all_passed = true;
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    Json entry{{"name", r.name}, {"passed", r.passed}};
    if (r.skipped) entry["skipped"] = true;
    if (!r.detail.empty()) entry["detail"] = r.detail;
    checks.push_back(std::move(entry));
  }
  doc["checks"] = std::move(checks);
  doc["passed"] = all_passed;
  return doc.dump(2) + "\n";
}

void report_error(std::ostream& err, std::string_view code, const std::string& message) {
  Json doc{{"schema", kSchemaVersion}, {"error", Json{{"code", code}, {"message", message}}}};
  err << doc.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hom tables, Serre functors and Serre dimensions of residual categories"};
  app.name("hybridsd");
  app.require_subcommand(1);
  Options opt;

  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--n", opt.n, "ambient dimension of P^n")->required();
    sub->add_option("--degrees", opt.degrees, "comma-separated degrees d_1,...,d_k")
        ->required()
        ->delimiter(',');
    sub->add_option("--output", opt.output, "write the primary document here instead of stdout");
    sub->add_option("--float", opt.float_digits, "also render rationals as decimals")
        ->check(CLI::Range(0, 30));
  };

  auto* info = app.add_subcommand("info", "model invariants, functors and closed forms (JSON)");
  add_model(info);

  auto* hilbert = app.add_subcommand("hilbert", "H^0 dimensions and R-charge range per degree (CSV)");
  add_model(hilbert);
  hilbert->add_option("--from", opt.from, "first weighted degree");
  hilbert->add_option("--to", opt.to, "last weighted degree");

  auto* ext = app.add_subcommand("ext", "graded Hom(O(a), O(b)) table (CSV)");
  add_model(ext);
  ext->add_option("--a", opt.a, "source twist");
  ext->add_option("--b", opt.b, "target twist");
  ext->add_option("--m", opt.m, "twist difference b - a");

  auto* sdim = app.add_subcommand("sdim", "Serre orbit series and dimension estimates (JSON + CSV)");
  add_model(sdim);
  sdim->add_option("--horizon", opt.horizon, "horizon M; samples m in (M/2, M]");
  sdim->add_option("--csv", opt.csv, "write the orbit series here");
  sdim->add_option("--threads", opt.threads, "OpenMP threads (0 = runtime default)")
      ->check(CLI::NonNegativeNumber);
  sdim->add_flag("--serial", opt.serial, "use the serial reference kernel");

  auto* check = app.add_subcommand("check", "run the invariant suite on a model (JSON)");
  add_model(check);
  check->add_option("--horizon", opt.check_horizon, "horizon for the Serre orbit checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    report_error(err, "usage", e.what());
    return 1;
  }

  try {
    std::string text;
    bool passed = true;
    if (info->parsed()) text = cmd_info(opt);
    else if (hilbert->parsed()) text = cmd_hilbert(opt);
    else if (ext->parsed()) text = cmd_ext(opt);
    else if (sdim->parsed()) text = cmd_sdim(opt);
    else text = cmd_check(opt, passed);
    emit(text, opt, out);
    if (!passed) {
      report_error(err, "invariant_failure", "at least one invariant failed");
      return 2;
    }
    return 0;
  } catch (const Error& e) {
    report_error(err, error_code_name(e.code()), e.what());
    return 1;
  } catch (const std::exception& e) {
    report_error(err, "internal", e.what());
    return 2;
  }
}

}  // namespace hybrid::cli
