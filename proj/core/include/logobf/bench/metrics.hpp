#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "logobf/common/error.hpp"

namespace logobf::bench {

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class ZeroBaseAccuracy : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class DegenerateMarginals : public Error {
 public:
  using Error::Error;
};

/// Fraction of (prediction, gold) pairs whose normalized forms are equal.
double em_accuracy(const std::vector<std::pair<std::string, std::string>>& pairs);

/// Base accuracy of one task and the accuracies of its obfuscated variants.
struct TaskAccuracy {
  double base = 0.0;
  std::vector<double> obfuscated;
};

/// Relative change (obf - base) / base in percent, averaged over the task's
/// obfuscated variants.
double task_degradation(const TaskAccuracy& t);

struct DegradationSummary {
  std::map<std::string, double> per_task;  // percent
  double mean = 0.0;                       // unweighted mean over tasks
};

DegradationSummary degradation(const std::map<std::string, TaskAccuracy>& tasks);

/// (p_o - p_e) / (1 - p_e). With p_e == 1 the result is 1 when p_o == 1 and
/// DegenerateMarginals otherwise.
double kappa_from(double p_o, double p_e);

/// Cohen's kappa between two annotators' label sequences.
double cohen_kappa(const std::vector<std::string>& a, const std::vector<std::string>& b);

}  // namespace logobf::bench
