#include "osp/types.hpp"

namespace osp {

std::vector<std::vector<int>> machine_sequences(const Instance& instance,
                                                const Schedule& schedule) {
  std::vector<std::vector<int>> seq(size_t(instance.num_machines()));
  for (int i = 0; i < int(schedule.batches.size()); ++i) {
    const Batch& b = schedule.batches[size_t(i)];
    if (b.machine < 1 || b.machine > instance.num_machines())
      throw MalformedSchedule("batch references unknown machine " +
                              std::to_string(b.machine));
    seq[size_t(b.machine - 1)].push_back(i);
  }
  for (auto& s : seq) {
    std::stable_sort(s.begin(), s.end(), [&](int lhs, int rhs) {
      return schedule.batches[size_t(lhs)].start <
             schedule.batches[size_t(rhs)].start;
    });
  }
  return seq;
}

Instance normalize_intervals(const Instance& instance) {
  size_t max_count = 0;
  for (const auto& m : instance.machines)
    max_count = std::max(max_count, m.availability.size());
  Instance out = instance;
  for (auto& m : out.machines) {
    while (m.availability.size() < max_count)
      m.availability.push_back({instance.horizon, instance.horizon});
  }
  return out;
}

}  // namespace osp
