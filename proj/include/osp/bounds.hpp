#ifndef OSP_BOUNDS_HPP
#define OSP_BOUNDS_HPP

#include "osp/objective.hpp"
#include "osp/types.hpp"

namespace osp {

// Unit-size job copies sharing one processing-time window.
struct UnitJobInterval {
  int64_t lo = 0;            // mint
  int64_t hi = 0;            // maxt
  int64_t multiplicity = 1;  // number of unit copies
  int job_id = 0;            // originating job, used for tie-breaking
};

struct GacBatch {
  int label_job = 0;   // job whose mint sets the batch time
  int64_t proc = 0;
  std::vector<std::pair<int, int64_t>> taken;  // (job id, unit copies)
};

struct GacResult {
  int64_t batch_count = 0;
  int64_t total_proc = 0;
  std::vector<GacBatch> batches;
};

struct CapacityZero : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Greedy batching of unit jobs under a capacity cap; minimizes both the
// batch count and the cumulative batch processing time. Ties among equal
// lo-values break towards the lowest job id.
GacResult gac_plus(std::vector<UnitJobInterval> unit_jobs, int64_t capacity);

struct AttributeBound {
  int attribute = 0;
  std::vector<int> large_jobs;    // J_r^l, ascending job ids
  int64_t large_count = 0;
  int64_t large_proc = 0;         // sum mint over J_r^l
  int64_t simple_cap_count = 0;   // capacity-only bound over all attr-r jobs
  int64_t count_eligibility = 0;  // b_r^E, small jobs only
  int64_t proc_eligibility = 0;   // p_r^E
  int64_t count_compat = 0;       // b_r^C, small jobs only
  int64_t proc_compat = 0;        // p_r^C

  int64_t combined_count() const {
    return large_count + std::max(count_eligibility, count_compat);
  }
  int64_t combined_proc() const {
    return large_proc + std::max(proc_eligibility, proc_compat);
  }
};

struct BoundReport {
  std::vector<AttributeBound> per_attribute;
  int64_t batch_count_lb = 0;
  int64_t proc_time_lb = 0;
  int64_t setup_cost_lb = 0;
  int64_t tardy_lb = 0;
  std::vector<int> unschedulable_jobs;  // no eligible interval fits even alone
  Rational obj_lb;
};

int64_t simple_cap_bound(const Instance& instance, int attribute);

// (J_r^l, J_r^s) split of attribute r by the cannot-share-a-batch test.
std::pair<std::vector<int>, std::vector<int>> split_large_small(
    const Instance& instance, int attribute);

// (b_r^E, p_r^E) for the small jobs of one attribute.
std::pair<int64_t, int64_t> eligibility_bound(const Instance& instance,
                                              int attribute);

// (b_r^C, p_r^C): gac_plus over the small jobs expanded to unit copies.
std::pair<int64_t, int64_t> compat_bound(const Instance& instance,
                                         int attribute);

// max of the column-minimum and sorted-row-minimum setup cost bounds, for
// the given per-attribute batch counts (index 0 = attribute 1).
int64_t setup_cost_bound(const Instance& instance,
                         const std::vector<int64_t>& per_attribute_counts);

// Earliest completion of a job alone on an otherwise empty machine; nullopt
// when no availability interval admits setup + mint.
std::optional<int64_t> earliest_alone_completion(const Instance& instance,
                                                 int job_id);

int64_t tardy_bound(const Instance& instance);

BoundReport bound_report(const Instance& instance,
                         const ObjectiveWeights& weights);

}  // namespace osp

#endif
