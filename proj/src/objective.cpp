#include "osp/objective.hpp"

#include <numeric>
#include <unordered_set>

namespace osp {

int64_t average_min_proc(const Instance& instance) {
  int64_t n = instance.num_jobs();
  if (n == 0) return 1;
  int64_t z = instance.total_min_proc();
  return (z + n - 1) / n;
}

int64_t objective_scale(const Instance& instance) {
  return std::lcm(average_min_proc(instance),
                  std::max<int64_t>(instance.max_setup_cost(), 1));
}

ObjectiveComponents objective_components(const Instance& instance,
                                         const Schedule& schedule) {
  std::vector<int> seen(size_t(instance.num_jobs()), 0);
  for (const Batch& b : schedule.batches) {
    if (b.jobs.empty()) throw MalformedSchedule("empty batch");
    for (int j : b.jobs) {
      if (j < 1 || j > instance.num_jobs())
        throw MalformedSchedule("unknown job " + std::to_string(j));
      if (seen[size_t(j - 1)]++)
        throw MalformedSchedule("job " + std::to_string(j) + " placed twice");
    }
  }
  for (int j = 1; j <= instance.num_jobs(); ++j)
    if (!seen[size_t(j - 1)])
      throw MalformedSchedule("job " + std::to_string(j) + " missing");

  ObjectiveComponents out;
  for (const Batch& b : schedule.batches) out.proc_time += b.proc;

  auto batch_attr = [&](const Batch& b) {
    return instance.job(b.jobs.front()).attribute;
  };
  const auto seq = machine_sequences(instance, schedule);
  for (int m = 1; m <= instance.num_machines(); ++m) {
    const auto& s = seq[size_t(m - 1)];
    int prev_attr = instance.machine(m).initial_state;
    for (int idx : s) {
      int attr = batch_attr(schedule.batches[size_t(idx)]);
      out.setup_cost += instance.setup_costs.at(prev_attr, attr);
      prev_attr = attr;
    }
  }

  for (const Batch& b : schedule.batches) {
    int64_t end = b.start + b.proc;
    for (int j : b.jobs) {
      const Job& job = instance.job(j);
      if (job.due && end > *job.due) ++out.tardy_count;
    }
  }
  return out;
}

ObjectiveReport objective_from_components(const Instance& instance,
                                          const ObjectiveComponents& components,
                                          const ObjectiveWeights& weights) {
  ObjectiveReport rep;
  rep.components = components;
  rep.avg_min_proc = average_min_proc(instance);
  rep.scale = objective_scale(instance);

  const int64_t n = std::max<int64_t>(instance.num_jobs(), 1);
  const int64_t sc_cap = std::max<int64_t>(instance.max_setup_cost(), 1);
  const int64_t w = weights.total();

  rep.obj_real = (Rational(weights.proc * components.proc_time,
                           rep.avg_min_proc * n) +
                  Rational(weights.setup * components.setup_cost, sc_cap * n) +
                  Rational(weights.tardy * components.tardy_count, n)) /
                 Rational(w);

  // Both divisions are exact: C is a multiple of avg_t and of max(max_SC, 1).
  rep.obj_scaled = (weights.proc * rep.scale / rep.avg_min_proc) *
                       components.proc_time +
                   (weights.setup * rep.scale / sc_cap) * components.setup_cost +
                   weights.tardy * rep.scale * components.tardy_count;
  return rep;
}

ObjectiveReport objective(const Instance& instance, const Schedule& schedule,
                          const ObjectiveWeights& weights) {
  return objective_from_components(instance,
                                   objective_components(instance, schedule),
                                   weights);
}

std::string to_decimal(const Rational& value) {
  long long num = value.numerator();
  long long den = value.denominator();
  bool neg = num < 0;
  if (neg) num = -num;

  long long whole = num / den;
  long long rem = num % den;
  // six fractional digits, round half to even
  long long frac = 0;
  for (int i = 0; i < 6; ++i) {
    rem *= 10;
    frac = frac * 10 + rem / den;
    rem %= den;
  }
  rem *= 2;
  if (rem > den || (rem == den && (frac & 1))) ++frac;
  if (frac == 1000000) {
    frac = 0;
    ++whole;
  }

  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%lld.%06lld", neg ? "-" : "", whole, frac);
  return buf;
}

}  // namespace osp
