#include "ellint/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ellint/catalog.hpp"
#include "ellint/elliptic.hpp"
#include "ellint/errors.hpp"
#include "ellint/report.hpp"

namespace ellint::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_k_list(const std::string& text) {
  std::vector<double> ks;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("invalid --k value '" + item + "'");
    }
    if (used != item.size() || !std::isfinite(v)) throw UsageError("invalid --k value '" + item + "'");
    ks.push_back(v);
  }
  return ks;
}

std::string render(const std::vector<VerificationResult>& results, const std::string& format) {
  if (format == "json") return to_json(results);
  if (format == "csv") return to_csv(results);
  return to_text(results);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

int exit_code(const std::vector<VerificationResult>& results) {
  const bool ok = std::all_of(results.begin(), results.end(), [](const VerificationResult& r) {
    return r.pass || r.status == Status::skipped_domain;
  });
  return ok ? kOk : kFail;
}

std::string list_text(const std::string& format) {
  const auto& entries = list_entries();
  if (format == "text") {
    std::ostringstream out;
    for (const EntryRecord& e : entries) {
      out << e.id << "  [" << e.group << "]  " << e.domain_description
          << (e.principal_value ? "  (principal value)" : "") << "\n";
      out << "    lhs: " << e.lhs_recipe << "\n    rhs: " << e.rhs_closed_form << "\n";
      if (e.errata) out << "    errata: " << *e.errata << "\n";
    }
    return out.str();
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const EntryRecord& e : entries) {
    nlohmann::ordered_json rec;
    rec["id"] = e.id;
    rec["group"] = e.group;
    rec["lhs_recipe"] = e.lhs_recipe;
    rec["rhs_closed_form"] = e.rhs_closed_form;
    rec["domain"] = e.domain_description;
    rec["default_tol"] = e.default_tol;
    rec["principal_value"] = e.principal_value;
    rec["errata"] = e.errata ? nlohmann::ordered_json(*e.errata) : nlohmann::ordered_json(nullptr);
    arr.push_back(rec);
  }
  if (format == "json") return arr.dump(2) + "\n";
  std::ostringstream out;
  out << "id,group,domain,default_tol,principal_value\n";
  for (const EntryRecord& e : entries) {
    out << e.id << ",\"" << e.group << "\",\"" << e.domain_description << "\","
        << format_double(e.default_tol) << "," << (e.principal_value ? "true" : "false") << "\n";
  }
  return out.str();
}

double eval_function(const std::string& fn, double k, double n) {
  if (fn == "imagK") return imag_modulus_k(k);
  const Modulus mod = k == 1.0 ? Modulus::unit() : Modulus::from_k(k);
  if (fn == "K") return ellip_k(mod);
  if (fn == "E") return ellip_e(mod);
  if (fn == "Kp") return comp_k(mod);
  if (fn == "Ep") return comp_e(mod);
  if (fn == "Pi") return ellip_pi(n, mod);
  if (fn == "legendre") return legendre_residual(mod);
  throw UsageError("unknown function '" + fn + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verify complete elliptic integral table entries", "ellint"};
  app.require_subcommand(1);

  std::string k_text;
  double tol = 1e-9;
  bool tol_given = false;
  std::string format;
  std::string output;
  bool no_timing = false;
  unsigned threads = 0;

  const auto add_format = [&](CLI::App* sub, const std::string& fallback) {
    sub->add_option("--format", format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->default_str(fallback);
  };

  CLI::App* list = app.add_subcommand("list", "list catalog entries");
  add_format(list, "text");

  std::string fn;
  double n = 0.0;
  CLI::App* eval = app.add_subcommand("eval", "evaluate K, E, Kp, Ep, Pi, legendre or imagK");
  eval->add_option("function", fn, "K|E|Kp|Ep|Pi|legendre|imagK")->required();
  eval->add_option("--k", k_text, "comma-separated moduli")->required();
  eval->add_option("--n", n, "characteristic for Pi");

  std::string id;
  CLI::App* verify = app.add_subcommand("verify", "verify one entry");
  verify->add_option("id", id, "entry id")->required();

  CLI::App* verify_all_cmd = app.add_subcommand("verify-all", "verify every entry");

  for (CLI::App* sub : {verify, verify_all_cmd}) {
    sub->add_option("--k", k_text, "comma-separated moduli (default grid otherwise)");
    sub->add_option("--tol", tol, "tolerance override")
        ->check(CLI::PositiveNumber)
        ->each([&](const std::string&) { tol_given = true; });
    add_format(sub, "json");
    sub->add_option("--output,-o", output, "write the report to a file");
    sub->add_flag("--no-timing", no_timing, "report elapsed_ms as 0");
    sub->add_option("--threads", threads, "worker threads (0: all cores)");
  }

  std::string input;
  CLI::App* report = app.add_subcommand("report", "re-render or summarize a JSON report");
  report->add_option("input", input, "JSON report file")->required()->check(CLI::ExistingFile);
  add_format(report, "text");
  report->add_option("--output,-o", output, "write to a file");

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
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (list->parsed()) {
      out << list_text(format.empty() ? "text" : format);
      return kOk;
    }
    if (eval->parsed()) {
      for (double k : parse_k_list(k_text)) {
        out << format_double(eval_function(fn, k, n)) << "\n";
      }
      return kOk;
    }
    const std::optional<double> run_tol = tol_given ? std::optional<double>(tol) : std::nullopt;
    VerifyOptions options{run_tol, threads, !no_timing};
    const std::string fmt = format.empty() ? "json" : format;
    if (verify->parsed()) {
      const EntryRecord& entry = find_entry(id);
      std::vector<double> grid = k_text.empty() ? default_k_grid() : parse_k_list(k_text);
      if (!k_text.empty() && entry.domain_kind == DomainKind::modulus) {
        const ParameterPlan plan = plan_parameters(entry, grid);
        if (!plan.skipped.empty()) {
          throw DomainError("parameters outside the domain of " + id + " (" +
                            entry.domain_description + ")");
        }
      }
      const auto results = verify_entry_plan(entry, grid, options);
      emit(render(results, fmt), output, out);
      return exit_code(results);
    }
    if (verify_all_cmd->parsed()) {
      const std::vector<double> grid = k_text.empty() ? default_k_grid() : parse_k_list(k_text);
      const auto results = verify_all(grid, options);
      emit(render(results, fmt), output, out);
      return exit_code(results);
    }
    if (report->parsed()) {
      std::ifstream file(input, std::ios::binary);
      std::stringstream buffer;
      buffer << file.rdbuf();
      const auto results = from_json(buffer.str());
      emit(render(results, format.empty() ? "text" : format), output, out);
      return exit_code(results);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}

}  // namespace ellint::cli
