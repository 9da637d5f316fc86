#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ellint/elliptic.hpp"

namespace ellint {

/// Named numeric parameters of one evaluation, in declaration order.
using Params = std::vector<std::pair<std::string, double>>;

std::optional<double> find_param(const Params& p, const std::string& name);
double param(const Params& p, const std::string& name);

/// An evaluation route for K and E. Closed forms are written against this
/// interface so each one can be evaluated through independent back ends.
struct EllipticRoute {
  std::string name;
  std::function<double(const Modulus&)> K;
  std::function<double(const Modulus&)> E;
};

/// Thrown by a route that does not cover the requested modulus.
class RouteNotApplicable : public DomainError {
 public:
  using DomainError::DomainError;
};

/// AGM route (primary).
const EllipticRoute& agm_route();
/// 2F1 series route, restricted to m <= 0.7.
const EllipticRoute& series_route();
inline constexpr double kSeriesMaxParameter = 0.7;

struct Evaluation {
  double value = 0.0;
  long evaluations = 1;
};

/// How an entry's parameters are generated.
enum class DomainKind {
  fixed,    // a fixed list of parameter sets, independent of the k grid
  modulus,  // one parameter set per grid value k (optionally crossed with extras)
};

struct EntryRecord {
  std::string id;
  std::string group;
  std::string lhs_recipe;
  std::string rhs_closed_form;
  DomainKind domain_kind = DomainKind::fixed;
  std::string domain_description;
  /// For DomainKind::fixed: the parameter sets. For DomainKind::modulus: extra
  /// parameters crossed with each k (empty means k alone).
  std::vector<Params> parameter_sets;
  /// Returns false for parameter sets outside the domain of either side.
  std::function<bool(const Params&)> in_domain;
  double default_tol = 1e-9;
  /// Oracle tier; the effective tolerance is never tighter than this.
  double tol_floor = 0.0;
  bool principal_value = false;
  std::optional<std::string> errata;
  /// For oracle entries, the id of the entry whose integral they cross-check.
  std::optional<std::string> checks;
  std::function<Evaluation(const Params&)> lhs;
  std::function<double(const Params&, const EllipticRoute&)> rhs;
};

enum class Status { passed, failed, skipped_domain, error };

struct VerificationResult {
  std::string id;
  Params params;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  bool pass = false;
  long evals = 0;
  double elapsed_ms = 0.0;
  Status status = Status::failed;
  std::string message;
};

/// The full registry, sorted by id.
const std::vector<EntryRecord>& list_entries();

/// Throws DomainError for an unknown id.
const EntryRecord& find_entry(const std::string& id);

/// Effective tolerance for an entry under a requested run tolerance.
double effective_tol(const EntryRecord& entry, std::optional<double> tol);

/// Evaluates both sides of one entry at one parameter set. The right-hand side
/// goes through the AGM route and, when every modulus it needs is within
/// the series range, through the 2F1 route; errors are the worst over routes.
/// Throws DomainError for an unknown id or out-of-domain parameters; oracle
/// failures are reported as a failing result.
VerificationResult verify_entry(const std::string& id, const Params& params,
                                std::optional<double> tol = std::nullopt);

/// The parameter sets an entry is evaluated at for a given k grid; out of
/// domain points are returned separately.
struct ParameterPlan {
  std::vector<Params> in_domain;
  std::vector<Params> skipped;
};
ParameterPlan plan_parameters(const EntryRecord& entry, std::span<const double> k_grid);

/// {0.1, 0.3, 0.5, 0.7, 0.9} followed by the singular moduli k_1..k_5.
std::vector<double> default_k_grid();

struct VerifyOptions {
  std::optional<double> tol;
  unsigned threads = 0;  // 0: hardware concurrency
  bool timing = true;
};

/// Every entry at every applicable grid point. Never aborts: per-point
/// failures are recorded in the results. Out-of-domain points appear with
/// Status::skipped_domain. Ordering is by id, then parameter set.
std::vector<VerificationResult> verify_all(std::span<const double> k_grid,
                                           const VerifyOptions& options = {});

/// Runs one entry over its plan (used by the CLI's single-entry command).
std::vector<VerificationResult> verify_entry_plan(const EntryRecord& entry,
                                                  std::span<const double> k_grid,
                                                  const VerifyOptions& options = {});

}  // namespace ellint
