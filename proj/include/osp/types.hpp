#ifndef OSP_TYPES_HPP
#define OSP_TYPES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace osp {

using Rational = boost::rational<long long>;

// Closed availability window [start, end]; empty when start == end.
struct Interval {
  int64_t start = 0;
  int64_t end = 0;

  bool empty() const { return start == end; }
  int64_t length() const { return end - start; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct Machine {
  int id = 0;                 // 1-based
  int64_t capacity = 0;
  int initial_state = 1;      // attribute index in [1, a]
  std::vector<Interval> availability;  // sorted, pairwise non-overlapping

  friend bool operator==(const Machine&, const Machine&) = default;
};

struct Job {
  int id = 0;                 // 1-based
  std::vector<int> eligible;  // machine ids, ascending
  int64_t release = 0;        // et_j
  std::optional<int64_t> due; // lt_j; absent = never tardy
  int64_t min_proc = 1;       // mint_j
  int64_t max_proc = 1;       // maxt_j
  int64_t size = 1;
  int attribute = 1;          // a_j in [1, a]

  friend bool operator==(const Job&, const Job&) = default;
};

// Square attribute-indexed matrix with 1-based accessors.
struct AttributeMatrix {
  int dim = 0;
  std::vector<int64_t> entries;  // row-major, dim*dim

  AttributeMatrix() = default;
  AttributeMatrix(int a, int64_t fill) : dim(a), entries(size_t(a) * a, fill) {}

  int64_t at(int row, int col) const { return entries[size_t(row - 1) * dim + (col - 1)]; }
  int64_t& at(int row, int col) { return entries[size_t(row - 1) * dim + (col - 1)]; }

  int64_t max_entry() const {
    int64_t mx = 0;
    for (int64_t v : entries) mx = std::max(mx, v);
    return mx;
  }
  int64_t row_min(int row) const {
    int64_t mn = at(row, 1);
    for (int c = 2; c <= dim; ++c) mn = std::min(mn, at(row, c));
    return mn;
  }
  int64_t col_min(int col) const {
    int64_t mn = at(1, col);
    for (int r = 2; r <= dim; ++r) mn = std::min(mn, at(r, col));
    return mn;
  }
  friend bool operator==(const AttributeMatrix&, const AttributeMatrix&) = default;
};

struct Instance {
  int64_t horizon = 0;        // l
  int attribute_count = 0;    // a
  std::vector<Machine> machines;
  std::vector<Job> jobs;
  AttributeMatrix setup_times;
  AttributeMatrix setup_costs;
  std::string metadata;       // canonical JSON text, empty = absent

  int num_jobs() const { return int(jobs.size()); }
  int num_machines() const { return int(machines.size()); }
  const Machine& machine(int id) const { return machines[size_t(id - 1)]; }
  const Job& job(int id) const { return jobs[size_t(id - 1)]; }

  int64_t max_setup_time() const { return setup_times.max_entry(); }
  int64_t max_setup_cost() const { return setup_costs.max_entry(); }
  int64_t max_capacity() const {
    int64_t mx = 0;
    for (const auto& m : machines) mx = std::max(mx, m.capacity);
    return mx;
  }
  int64_t min_proc_overall() const {
    int64_t mn = jobs.empty() ? 1 : jobs.front().min_proc;
    for (const auto& j : jobs) mn = std::min(mn, j.min_proc);
    return mn;
  }
  int64_t total_min_proc() const {
    int64_t z = 0;
    for (const auto& j : jobs) z += j.min_proc;
    return z;
  }
};

struct Batch {
  int machine = 0;   // machine id
  int64_t start = 0; // S
  int64_t proc = 0;  // P
  std::vector<int> jobs;  // member job ids, non-empty

  friend bool operator==(const Batch&, const Batch&) = default;
};

struct Schedule {
  std::vector<Batch> batches;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

// Indices into schedule.batches, grouped per machine and ordered by start.
std::vector<std::vector<int>> machine_sequences(const Instance& instance,
                                                const Schedule& schedule);

// Pads ragged availability lists with trailing empty intervals [l, l] so
// every machine carries the same interval count.
Instance normalize_intervals(const Instance& instance);

struct MalformedSchedule : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace osp

#endif
