#include "osp/validate.hpp"

#include <sstream>

namespace osp {

const char* to_string(ViolationCode code) {
  switch (code) {
    case ViolationCode::RELEASE: return "RELEASE";
    case ViolationCode::PROC_WINDOW: return "PROC_WINDOW";
    case ViolationCode::OVERLAP: return "OVERLAP";
    case ViolationCode::INTERVAL_FIT: return "INTERVAL_FIT";
    case ViolationCode::SETUP_FIT: return "SETUP_FIT";
    case ViolationCode::CAPACITY: return "CAPACITY";
    case ViolationCode::ATTRIBUTE: return "ATTRIBUTE";
    case ViolationCode::ELIGIBILITY: return "ELIGIBILITY";
    case ViolationCode::STRUCTURE: return "STRUCTURE";
  }
  return "?";
}

namespace {

void add(ViolationReport& rep, ViolationCode code, int batch, int job,
         std::string detail) {
  rep.violations.push_back({code, batch, job, std::move(detail)});
}

}  // namespace

ViolationReport validate_instance(const Instance& instance) {
  ViolationReport rep;
  const int a = instance.attribute_count;
  const int64_t l = instance.horizon;

  if (l < 1) add(rep, ViolationCode::STRUCTURE, -1, -1, "horizon must be positive");
  if (a < 1)
    add(rep, ViolationCode::STRUCTURE, -1, -1, "attribute count must be positive");

  auto check_matrix = [&](const AttributeMatrix& mat, const char* name) {
    if (mat.dim != a || mat.entries.size() != size_t(a) * size_t(a)) {
      add(rep, ViolationCode::STRUCTURE, -1, -1,
          std::string(name) + " matrix is not " + std::to_string(a) + "x" +
              std::to_string(a));
      return;
    }
    for (int64_t v : mat.entries)
      if (v < 0) {
        add(rep, ViolationCode::STRUCTURE, -1, -1,
            std::string(name) + " matrix has a negative entry");
        break;
      }
  };
  check_matrix(instance.setup_times, "setup time");
  check_matrix(instance.setup_costs, "setup cost");

  for (int m = 1; m <= instance.num_machines(); ++m) {
    const Machine& mach = instance.machine(m);
    std::string who = "machine " + std::to_string(m);
    if (mach.id != m)
      add(rep, ViolationCode::STRUCTURE, -1, -1,
          who + ": ids must be contiguous from 1, got " + std::to_string(mach.id));
    if (mach.capacity < 1)
      add(rep, ViolationCode::STRUCTURE, -1, -1, who + ": capacity must be >= 1");
    if (mach.initial_state < 1 || mach.initial_state > a)
      add(rep, ViolationCode::STRUCTURE, -1, -1,
          who + ": initial state outside [1," + std::to_string(a) + "]");
    int64_t prev_end = 0;
    for (size_t i = 0; i < mach.availability.size(); ++i) {
      const Interval& iv = mach.availability[i];
      if (iv.start < 0 || iv.end > l)
        add(rep, ViolationCode::STRUCTURE, -1, -1,
            who + ": interval " + std::to_string(i + 1) + " outside [0,l]");
      if (iv.start > iv.end || (i > 0 && iv.start < prev_end))
        add(rep, ViolationCode::STRUCTURE, -1, -1,
            who + ": intervals not sorted at position " + std::to_string(i + 1));
      prev_end = iv.end;
    }
  }

  for (int j = 1; j <= instance.num_jobs(); ++j) {
    const Job& job = instance.job(j);
    std::string who = "job " + std::to_string(j);
    if (job.id != j)
      add(rep, ViolationCode::STRUCTURE, -1, j,
          who + ": ids must be contiguous from 1, got " + std::to_string(job.id));
    if (job.eligible.empty())
      add(rep, ViolationCode::STRUCTURE, -1, j, who + ": no eligible machine");
    for (int m : job.eligible)
      if (m < 1 || m > instance.num_machines())
        add(rep, ViolationCode::STRUCTURE, -1, j,
            who + ": unknown eligible machine " + std::to_string(m));
    if (job.release < 0 || job.release >= l)
      add(rep, ViolationCode::STRUCTURE, -1, j, who + ": release outside [0,l)");
    if (job.due) {
      if (*job.due <= job.release)
        add(rep, ViolationCode::STRUCTURE, -1, j, who + ": due date <= release");
      else if (*job.due > l)
        rep.warnings.push_back(who + ": due date " + std::to_string(*job.due) +
                               " exceeds horizon " + std::to_string(l));
    }
    if (job.min_proc < 1 || job.min_proc > job.max_proc)
      add(rep, ViolationCode::STRUCTURE, -1, j,
          who + ": processing window must satisfy 0 < mint <= maxt");
    if (job.size < 1)
      add(rep, ViolationCode::STRUCTURE, -1, j, who + ": size must be >= 1");
    if (job.attribute < 1 || job.attribute > a)
      add(rep, ViolationCode::STRUCTURE, -1, j,
          who + ": attribute outside [1," + std::to_string(a) + "]");
  }
  return rep;
}

ViolationReport validate_schedule(const Instance& instance,
                                  const Schedule& schedule) {
  ViolationReport rep;

  std::vector<int> seen(size_t(instance.num_jobs()), 0);
  bool structure_ok = true;
  for (int bi = 0; bi < int(schedule.batches.size()); ++bi) {
    const Batch& b = schedule.batches[size_t(bi)];
    if (b.jobs.empty()) {
      add(rep, ViolationCode::STRUCTURE, bi, -1, "empty batch");
      structure_ok = false;
    }
    if (b.machine < 1 || b.machine > instance.num_machines()) {
      add(rep, ViolationCode::STRUCTURE, bi, -1,
          "unknown machine " + std::to_string(b.machine));
      structure_ok = false;
    }
    if (b.start < 0 || b.start > instance.horizon)
      add(rep, ViolationCode::STRUCTURE, bi, -1, "start outside [0,l]");
    if (b.proc < 1)
      add(rep, ViolationCode::STRUCTURE, bi, -1, "processing time must be >= 1");
    for (int j : b.jobs) {
      if (j < 1 || j > instance.num_jobs()) {
        add(rep, ViolationCode::STRUCTURE, bi, j, "unknown job");
        structure_ok = false;
      } else if (seen[size_t(j - 1)]++) {
        add(rep, ViolationCode::STRUCTURE, bi, j, "job placed twice");
        structure_ok = false;
      }
    }
  }
  for (int j = 1; j <= instance.num_jobs(); ++j)
    if (!seen[size_t(j - 1)]) {
      add(rep, ViolationCode::STRUCTURE, -1, j, "job not scheduled");
      structure_ok = false;
    }
  if (!structure_ok) return rep;

  auto batch_attr = [&](const Batch& b) {
    return instance.job(b.jobs.front()).attribute;
  };

  for (int bi = 0; bi < int(schedule.batches.size()); ++bi) {
    const Batch& b = schedule.batches[size_t(bi)];
    const Machine& mach = instance.machine(b.machine);
    int attr = batch_attr(b);

    int64_t size_sum = 0;
    int64_t min_needed = 0;
    int64_t max_allowed = INT64_MAX;
    for (int j : b.jobs) {
      const Job& job = instance.job(j);
      size_sum += job.size;
      min_needed = std::max(min_needed, job.min_proc);
      max_allowed = std::min(max_allowed, job.max_proc);
      if (b.start < job.release)
        add(rep, ViolationCode::RELEASE, bi, j,
            "batch starts at " + std::to_string(b.start) + " before release " +
                std::to_string(job.release));
      if (job.attribute != attr)
        add(rep, ViolationCode::ATTRIBUTE, bi, j,
            "attribute " + std::to_string(job.attribute) +
                " differs from batch attribute " + std::to_string(attr));
      if (std::find(job.eligible.begin(), job.eligible.end(), b.machine) ==
          job.eligible.end())
        add(rep, ViolationCode::ELIGIBILITY, bi, j,
            "machine " + std::to_string(b.machine) + " not eligible");
    }
    if (b.proc < min_needed || b.proc > max_allowed)
      add(rep, ViolationCode::PROC_WINDOW, bi, -1,
          "processing time " + std::to_string(b.proc) + " outside [" +
              std::to_string(min_needed) + "," + std::to_string(max_allowed) +
              "]");
    if (size_sum > mach.capacity)
      add(rep, ViolationCode::CAPACITY, bi, -1,
          "total size " + std::to_string(size_sum) + " exceeds capacity " +
              std::to_string(mach.capacity));
  }

  // sequencing, setup separation and interval fit, per machine
  const auto seq = machine_sequences(instance, schedule);
  for (int m = 1; m <= instance.num_machines(); ++m) {
    const Machine& mach = instance.machine(m);
    const auto& s = seq[size_t(m - 1)];
    int prev_attr = mach.initial_state;
    int64_t prev_end = -1;
    int prev_idx = -1;
    for (int idx : s) {
      const Batch& b = schedule.batches[size_t(idx)];
      int attr = batch_attr(b);
      int64_t setup = instance.setup_times.at(prev_attr, attr);
      if (prev_idx >= 0 && b.start < prev_end + setup)
        add(rep, ViolationCode::OVERLAP, idx, -1,
            "start " + std::to_string(b.start) +
                " before previous end + setup = " +
                std::to_string(prev_end + setup));

      bool contained = false;
      bool setup_fits = false;
      for (const Interval& iv : mach.availability) {
        if (iv.start <= b.start && b.start + b.proc <= iv.end) {
          contained = true;
          if (iv.start <= b.start - setup) setup_fits = true;
        }
      }
      if (!contained)
        add(rep, ViolationCode::INTERVAL_FIT, idx, -1,
            "batch [" + std::to_string(b.start) + "," +
                std::to_string(b.start + b.proc) +
                "] fits no availability interval");
      else if (!setup_fits)
        add(rep, ViolationCode::SETUP_FIT, idx, -1,
            "setup of length " + std::to_string(setup) +
                " does not fit before start " + std::to_string(b.start));

      prev_attr = attr;
      prev_end = b.start + b.proc;
      prev_idx = idx;
    }
  }
  return rep;
}

}  // namespace osp
