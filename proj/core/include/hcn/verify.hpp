#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hcn/hurwitz.hpp"
#include "hcn/qseries.hpp"

namespace hcn::verify {

struct Counterexample {
  std::string input;
  std::string lhs;
  std::string rhs;
};

struct CheckReport {
  std::string check_id;
  std::string range;
  bool passed = false;
  std::optional<Counterexample> counterexample;  // absent iff passed
  double elapsed_seconds = 0.0;
};

// String-keyed parameters; unknown keys are ignored, missing keys take the
// profile default. Set "profile" to "ci" for the trimmed ranges.
using Params = std::map<std::string, std::string>;

const std::vector<std::string>& registered_checks();
bool is_registered(const std::string& check_id);

// ([H, theta_{m,3}]_1 + (1/4) Lambda_{3,m,3}) | U_4 to prec coefficients;
// the weight-four cusp form attached to the second-moment identity.
QSeries g1m3_series(int m, std::int64_t prec, const HurwitzTable& table);

// ((H theta_{0,3}) + (1/2) Lambda_{1,0,3}) | U_12 to prec coefficients.
QSeries e2_identity_lhs(std::int64_t prec, const HurwitzTable& table);

// Hurwitz-table coverage the check needs (0 when it needs no table).
std::int64_t table_requirement(const std::string& check_id, const Params& p);

// Runs one named check. The table-free overload builds (or loads) the
// required table itself. Throws std::invalid_argument on unknown ids and
// std::out_of_range when the supplied table is too small.
CheckReport run_check(const std::string& check_id, const Params& p = {});
CheckReport run_check(const std::string& check_id, const Params& p,
                      const HurwitzTable& table);

struct SuiteOptions {
  Params params;  // applied to every check (including "profile")
  int jobs = 1;
};

// Runs the named checks over one shared table sized for the largest
// requirement; with jobs > 1 the checks run concurrently. Reports come
// back in the order the ids were given.
std::vector<CheckReport> run_suite(const std::vector<std::string>& ids,
                                   const SuiteOptions& opts = {});

std::string reports_to_json(const std::vector<CheckReport>& reports);
std::string reports_to_csv(const std::vector<CheckReport>& reports);
bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace hcn::verify
