#include "logobf/bench/metrics.hpp"

#include <cmath>

#include "logobf/bench/normalize.hpp"

namespace logobf::bench {

double em_accuracy(const std::vector<std::pair<std::string, std::string>>& pairs) {
  if (pairs.empty()) throw EmptyInput("exact match over zero predictions");
  std::size_t hits = 0;
  for (const auto& [pred, gold] : pairs) {
    if (normalize(pred) == normalize(gold)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(pairs.size());
}

double task_degradation(const TaskAccuracy& t) {
  if (t.base <= 0.0) throw ZeroBaseAccuracy("base accuracy is zero");
  if (t.obfuscated.empty()) throw EmptyInput("task has no obfuscated variant");
  double sum = 0.0;
  for (double obf : t.obfuscated) sum += (obf - t.base) / t.base * 100.0;
  return sum / static_cast<double>(t.obfuscated.size());
}

DegradationSummary degradation(const std::map<std::string, TaskAccuracy>& tasks) {
  if (tasks.empty()) throw EmptyInput("degradation over zero tasks");
  DegradationSummary s;
  double sum = 0.0;
  for (const auto& [name, t] : tasks) {
    const double d = task_degradation(t);
    s.per_task[name] = d;
    sum += d;
  }
  s.mean = sum / static_cast<double>(tasks.size());
  return s;
}

double kappa_from(double p_o, double p_e) {
  if (p_e >= 1.0) {
    if (p_o >= 1.0) return 1.0;
    throw DegenerateMarginals("expected agreement is 1 but observed agreement is not");
  }
  return (p_o - p_e) / (1.0 - p_e);
}

double cohen_kappa(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a.size() != b.size()) throw LengthMismatch("annotator label lists differ in length");
  if (a.empty()) throw EmptyInput("kappa over zero items");
  const double n = static_cast<double>(a.size());
  std::map<std::string, std::pair<double, double>> marginals;
  double agree = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) agree += 1.0;
    marginals[a[i]].first += 1.0;
    marginals[b[i]].second += 1.0;
  }
  double p_e = 0.0;
  for (const auto& [label, m] : marginals) p_e += (m.first / n) * (m.second / n);
  return kappa_from(agree / n, p_e);
}

}  // namespace logobf::bench
