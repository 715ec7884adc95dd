#pragma once

// Class membership from sampled residuals, with cross-checks between
// criteria that must agree.

#include <map>
#include <string>
#include <vector>

namespace paracr {

struct CheckResult {
  std::string id;
  int points = 0;
  double max_raw = 0.0;
  double max_scaled = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  /// Index of the accepted sample giving max_scaled (-1 if none).
  int worst_point = -1;
};

enum class Membership { Member, NonMember, Indeterminate };

const char* to_string(Membership m);

struct ClassVerdict {
  std::string name;
  Membership status = Membership::Indeterminate;
  /// Condition ids whose conjunction defines the class.
  std::vector<std::string> criteria;
};

struct Classification {
  std::vector<ClassVerdict> classes;
  /// Names of member classes, excluding the base "almost paracontact metric".
  std::vector<std::string> fingerprint;
};

struct ClassDefinition {
  std::string name;
  std::vector<std::string> criteria;
};

/// Class definitions in report order.
const std::vector<ClassDefinition>& class_definitions();

/// Ids needed to classify every class and run every cross-check.
std::vector<std::string> classification_ids();

/// Members need every criterion <= tolerance, non-members one criterion >=
/// separation; anything else is indeterminate. Classes with a criterion
/// missing from `results` are skipped. Throws InconsistentVerdict when
/// equivalent criteria (para-CR forms, normality forms, para-Sasakian
/// forms) disagree at `tolerance`. The cross-checks run only when "axioms"
/// and "compat" are among the results and hold.
Classification classify(const std::map<std::string, CheckResult>& results, double tolerance, double separation);

}  // namespace paracr
