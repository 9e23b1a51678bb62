// Command-line front end: bound tables, coefficient expansions, inversion,
// the product identity sweep, and sampling campaigns.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <janowski/janowski.hpp>

namespace {

using namespace janowski;

struct ParamInput {
  Rational value;
  bool decimal = false;
};

ParamInput parse_param(const std::string& text) {
  return {parse_rational(text), text.find('.') != std::string::npos};
}

void warn_decimal(bool any_decimal) {
  if (any_decimal)
    std::cerr << "warning: decimal input converted to the nearest exact "
                 "rational; computation routed through the float backend\n";
}

struct BoundRow {
  std::string A, B, lambda_or_n;
  long l;
  std::string bound;
  std::string case_fired;
  long M;
};

void emit_rows(const std::vector<BoundRow>& rows, const std::string& format) {
  if (format == "csv") {
    std::cout << "A,B,lambda_or_n,l,bound,case_fired,M\n";
    for (const auto& r : rows)
      std::cout << r.A << "," << r.B << "," << r.lambda_or_n << "," << r.l
                << "," << r.bound << "," << r.case_fired << "," << r.M << "\n";
    return;
  }
  json arr = json::array();
  for (const auto& r : rows)
    arr.push_back({{"A", r.A},
                   {"B", r.B},
                   {"lambda_or_n", r.lambda_or_n},
                   {"l", r.l},
                   {"bound", r.bound},
                   {"case_fired", r.case_fired},
                   {"M", r.M}});
  std::cout << arr.dump(2) << "\n";
}

std::optional<SchwarzSpec> load_spec(const std::string& path) {
  if (path.empty()) return std::nullopt;
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open spec file '" + path + "'");
  json j;
  in >> j;
  return schwarz_from_json(j);
}

int run(int argc, char** argv) {
  CLI::App app{"Coefficient bounds and inverse coefficients for Janowski "
               "starlike classes"};
  app.require_subcommand(1);

  std::string a_text = "1", b_text = "-1", lambda_text = "1";
  std::string format = "csv";
  std::string spec_path;
  long l_max = 8, n_max = 8;
  int order = 12, root = 1;

  auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--A", a_text, "parameter A, rational p/q")->required();
    cmd->add_option("--B", b_text, "parameter B, rational p/q")->required();
  };

  auto* bounds = app.add_subcommand("bounds", "negative-power bound table");
  add_params(bounds);
  bounds->add_option("--lambda", lambda_text, "exponent lambda > 0")->required();
  bounds->add_option("--l-max", l_max, "largest coefficient index");
  bounds->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  auto* inv_bounds =
      app.add_subcommand("inverse-bounds", "inverse coefficient bound table");
  add_params(inv_bounds);
  inv_bounds->add_option("--n-max", n_max, "largest index n");
  inv_bounds->add_option("--format", format)
      ->check(CLI::IsMember({"csv", "json"}));

  auto* mero_bounds = app.add_subcommand(
      "mero-bounds", "meromorphic inverse coefficient bound table");
  add_params(mero_bounds);
  mero_bounds->add_option("--n-max", n_max, "largest index n");
  mero_bounds->add_option("--format", format)
      ->check(CLI::IsMember({"csv", "json"}));

  auto* coeffs = app.add_subcommand(
      "coeffs", "coefficients of (f/z)^{-lambda} for a class member");
  add_params(coeffs);
  coeffs->add_option("--lambda", lambda_text)->required();
  coeffs->add_option("--order", order, "truncation order");
  coeffs->add_option("--root", root, "use the n-th root transform extremal");
  coeffs->add_option("--spec", spec_path, "JSON Schwarz spec file");

  auto* invert =
      app.add_subcommand("invert", "inverse function coefficients");
  add_params(invert);
  invert->add_option("--order", order, "truncation order");
  invert->add_option("--spec", spec_path, "JSON Schwarz spec file");

  auto* identity =
      app.add_subcommand("identity-check", "exact product identity sweep");
  add_params(identity);
  identity->add_option("--lambda", lambda_text)->required();
  identity->add_option("--l-max", l_max, "largest index l");

  auto* verify = app.add_subcommand("verify", "sampling campaign");
  add_params(verify);
  std::string theorem = "negpow", backend = "exact", corpus = "sampled";
  int trials = 200;
  std::uint64_t seed = 1;
  long index_max = 8;
  std::vector<std::string> lambda_list;
  bool summary_only = false;
  verify->add_option("--theorem", theorem)
      ->check(CLI::IsMember({"negpow", "inverse", "mero"}));
  verify->add_option("--trials", trials);
  verify->add_option("--order", order);
  verify->add_option("--index-max", index_max);
  verify->add_option("--seed", seed);
  verify->add_option("--backend", backend)
      ->check(CLI::IsMember({"exact", "float"}));
  verify->add_option("--corpus", corpus)
      ->check(CLI::IsMember({"sampled", "extremal"}));
  verify->add_option("--lambda", lambda_list, "lambda grid entries");
  verify->add_flag("--summary-only", summary_only,
                   "print only the JSON summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const ParamInput A = parse_param(a_text);
  const ParamInput B = parse_param(b_text);
  const JanowskiParams p(A.value, B.value);
  const bool decimal_input = A.decimal || B.decimal;

  if (bounds->parsed()) {
    const Rational lambda = parse_rational(lambda_text);
    std::vector<BoundRow> rows;
    for (long l = 1; l <= l_max; ++l) {
      const BoundValue b = bound_neg_power(p, lambda, l);
      rows.push_back({format_rational(p.A()), format_rational(p.B()),
                      format_rational(lambda), l, format_rational(b.value),
                      b.case_fired, b.cutoff_M});
    }
    emit_rows(rows, format);
    return 0;
  }

  if (inv_bounds->parsed()) {
    std::vector<BoundRow> rows;
    for (long n = 2; n <= n_max; ++n) {
      const BoundValue b = bound_inverse(p, n);
      rows.push_back({format_rational(p.A()), format_rational(p.B()),
                      std::to_string(n), n, format_rational(b.value),
                      b.case_fired, b.cutoff_M});
    }
    emit_rows(rows, format);
    return 0;
  }

  if (mero_bounds->parsed()) {
    std::vector<BoundRow> rows;
    for (long n = 1; n <= n_max; ++n) {
      const BoundValue b = bound_mero_inverse(p, n);
      rows.push_back({format_rational(p.A()), format_rational(p.B()),
                      std::to_string(n), n, format_rational(b.value),
                      b.case_fired, b.cutoff_M});
    }
    emit_rows(rows, format);
    return 0;
  }

  if (coeffs->parsed() || invert->parsed()) {
    warn_decimal(decimal_input);
    const auto spec = load_spec(spec_path);
    const bool exact = !decimal_input && (!spec || spec->is_real());
    json out;
    if (exact) {
      StarlikeFunction<Rational> f =
          spec ? from_schwarz<Rational>(*spec, p, order)
               : extremal_root<Rational>(p, root, order);
      if (coeffs->parsed())
        out = series_to_json(
            neg_power_coeffs(f, parse_rational(lambda_text), order - 1));
      else {
        json j = series_to_json(inverse_direct(f).F);
        j["method"] = "direct-reversion";
        out = j;
      }
      out["source"] = starlike_to_json(f);
    } else {
      StarlikeFunction<Complex> f =
          spec ? from_schwarz<Complex>(*spec, p, order)
               : extremal_root<Complex>(p, root, order);
      if (coeffs->parsed())
        out = series_to_json(
            neg_power_coeffs(f, parse_rational(lambda_text), order - 1));
      else {
        json j = series_to_json(inverse_direct(f).F);
        j["method"] = "direct-reversion";
        out = j;
      }
      out["source"] = starlike_to_json(f);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (identity->parsed()) {
    const Rational lambda = parse_rational(lambda_text);
    bool all_equal = true;
    json arr = json::array();
    for (long l = 1; l <= l_max; ++l) {
      const IdentitySides sides = lemma_identity_check(p, lambda, l);
      all_equal = all_equal && sides.equal;
      arr.push_back({{"l", l},
                     {"lhs", format_rational(sides.lhs)},
                     {"rhs", format_rational(sides.rhs)},
                     {"equal", sides.equal}});
    }
    std::cout << arr.dump(2) << "\n";
    return all_equal ? 0 : 1;
  }

  // verify
  CampaignConfig cfg;
  cfg.trials = trials;
  cfg.order = order;
  cfg.index_max = static_cast<int>(index_max);
  cfg.seed = seed;
  cfg.backend = backend == "exact" ? Backend::exact : Backend::floating;
  cfg.corpus = corpus == "sampled" ? Corpus::sampled : Corpus::extremal;
  cfg.parameter_grid = {p};
  if (!lambda_list.empty()) {
    cfg.lambda_grid.clear();
    for (const auto& s : lambda_list) cfg.lambda_grid.push_back(parse_rational(s));
  }
  warn_decimal(decimal_input);
  if (decimal_input) cfg.backend = Backend::floating;

  std::vector<VerificationRecord> records;
  if (theorem == "negpow")
    records = run_negpow_campaign(cfg);
  else if (theorem == "inverse")
    records = run_inverse_campaign(cfg);
  else
    records = run_mero_campaign(cfg);

  const CampaignSummary summary = report(records);
  if (summary_only) {
    std::cout << summary_to_json(summary).dump(2) << "\n";
  } else {
    for (const auto& r : records) std::cout << record_to_json(r).dump() << "\n";
    std::cout << summary_to_json(summary).dump() << "\n";
  }
  return summary.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const janowski::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
