#ifndef OSP_GEN_HPP
#define OSP_GEN_HPP

#include "osp/types.hpp"

namespace osp {

enum class SetupMatrixType { CONSTANT, ARBITRARY, REALISTIC, SYMMETRIC };

const char* to_string(SetupMatrixType type);
std::optional<SetupMatrixType> setup_matrix_type_from(const std::string& name);

struct GeneratorParams {
  int64_t job_count = 10;        // n
  int64_t max_proc = 10;         // max_T
  bool max_time = true;          // per-job maxt drawn when true
  double release_spread = 0.1;   // rho
  double due_factor = 2.0;       // phi
  double extra_machine_prob = 0.2;  // sigma
  int64_t max_job_size = 5;      // s
  int attribute_count = 2;       // a
  SetupMatrixType setup_time_type = SetupMatrixType::ARBITRARY;
  SetupMatrixType setup_cost_type = SetupMatrixType::ARBITRARY;
  int machine_count = 2;         // k
  int64_t min_capacity = 5;      // min_C, defaults to max_job_size
  int64_t max_capacity = 20;     // max_C
  double min_available_fraction = 0.75;  // tau
  int max_intervals = 5;         // max_I
  uint64_t seed = 0;
};

struct BadParams : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Seeded random instance; deterministic per (params, seed). Generator
// settings and the PRNG name are embedded in the instance metadata.
Instance generate(const GeneratorParams& params);

}  // namespace osp

#endif
