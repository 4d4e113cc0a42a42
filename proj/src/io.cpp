#include "osp/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

namespace osp {

using json = nlohmann::ordered_json;

namespace {

constexpr int kFormatVersion = 1;

[[noreturn]] void fail(const std::string& message) { throw ParseError(message); }

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const char* where) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed)
      if (item.key() == key) {
        known = true;
        break;
      }
    if (!known)
      fail(std::string("unknown field '") + item.key() + "' in " + where);
  }
}

const json& field(const json& obj, const char* key, const char* where) {
  auto it = obj.find(key);
  if (it == obj.end())
    fail(std::string("missing field '") + key + "' in " + where);
  return *it;
}

int64_t as_int(const json& v, const char* what) {
  if (!v.is_number_integer())
    fail(std::string(what) + " must be an integer");
  return v.get<int64_t>();
}

json matrix_to_json(const AttributeMatrix& mat) {
  json rows = json::array();
  for (int r = 1; r <= mat.dim; ++r) {
    json row = json::array();
    for (int c = 1; c <= mat.dim; ++c) row.push_back(mat.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

AttributeMatrix matrix_from_json(const json& rows, int a, const char* what) {
  if (!rows.is_array() || int(rows.size()) != a)
    fail(std::string(what) + " must be an " + std::to_string(a) + "x" +
         std::to_string(a) + " matrix");
  AttributeMatrix mat(a, 0);
  for (int r = 1; r <= a; ++r) {
    const json& row = rows[size_t(r - 1)];
    if (!row.is_array() || int(row.size()) != a)
      fail(std::string(what) + " row " + std::to_string(r) + " has wrong size");
    for (int c = 1; c <= a; ++c)
      mat.at(r, c) = as_int(row[size_t(c - 1)], what);
  }
  return mat;
}

}  // namespace

std::string serialize_instance(const Instance& instance) {
  json doc;
  doc["version"] = kFormatVersion;
  doc["horizon"] = instance.horizon;
  doc["attribute_count"] = instance.attribute_count;
  doc["setup_times"] = matrix_to_json(instance.setup_times);
  doc["setup_costs"] = matrix_to_json(instance.setup_costs);
  json machines = json::array();
  for (const Machine& m : instance.machines) {
    json jm;
    jm["id"] = m.id;
    jm["capacity"] = m.capacity;
    jm["initial_state"] = m.initial_state;
    json av = json::array();
    for (const Interval& iv : m.availability)
      av.push_back(json::array({iv.start, iv.end}));
    jm["availability"] = std::move(av);
    machines.push_back(std::move(jm));
  }
  doc["machines"] = std::move(machines);
  json jobs = json::array();
  for (const Job& j : instance.jobs) {
    json jj;
    jj["id"] = j.id;
    jj["eligible"] = j.eligible;
    jj["et"] = j.release;
    if (j.due) jj["lt"] = *j.due;
    jj["mint"] = j.min_proc;
    jj["maxt"] = j.max_proc;
    jj["size"] = j.size;
    jj["attr"] = j.attribute;
    jobs.push_back(std::move(jj));
  }
  doc["jobs"] = std::move(jobs);
  if (!instance.metadata.empty())
    doc["metadata"] = json::parse(instance.metadata);
  return doc.dump(2) + "\n";
}

Instance parse_instance(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) fail("not a JSON object");
  reject_unknown(doc,
                 {"version", "horizon", "attribute_count", "setup_times",
                  "setup_costs", "machines", "jobs", "metadata"},
                 "instance");
  if (as_int(field(doc, "version", "instance"), "version") != kFormatVersion)
    fail("unsupported instance format version");

  Instance inst;
  inst.horizon = as_int(field(doc, "horizon", "instance"), "horizon");
  inst.attribute_count =
      int(as_int(field(doc, "attribute_count", "instance"), "attribute_count"));
  inst.setup_times = matrix_from_json(field(doc, "setup_times", "instance"),
                                      inst.attribute_count, "setup_times");
  inst.setup_costs = matrix_from_json(field(doc, "setup_costs", "instance"),
                                      inst.attribute_count, "setup_costs");

  const json& machines = field(doc, "machines", "instance");
  if (!machines.is_array()) fail("machines must be an array");
  for (const json& jm : machines) {
    reject_unknown(jm, {"id", "capacity", "initial_state", "availability"},
                   "machine");
    Machine m;
    m.id = int(as_int(field(jm, "id", "machine"), "machine id"));
    m.capacity = as_int(field(jm, "capacity", "machine"), "capacity");
    m.initial_state =
        int(as_int(field(jm, "initial_state", "machine"), "initial_state"));
    const json& av = field(jm, "availability", "machine");
    if (!av.is_array()) fail("availability must be an array");
    for (const json& pair : av) {
      if (!pair.is_array() || pair.size() != 2)
        fail("availability entries must be [start, end] pairs");
      m.availability.push_back({as_int(pair[0], "interval start"),
                                as_int(pair[1], "interval end")});
    }
    inst.machines.push_back(std::move(m));
  }

  const json& jobs = field(doc, "jobs", "instance");
  if (!jobs.is_array()) fail("jobs must be an array");
  for (const json& jj : jobs) {
    reject_unknown(
        jj, {"id", "eligible", "et", "lt", "mint", "maxt", "size", "attr"},
        "job");
    Job j;
    j.id = int(as_int(field(jj, "id", "job"), "job id"));
    const json& elig = field(jj, "eligible", "job");
    if (!elig.is_array()) fail("eligible must be an array");
    for (const json& m : elig)
      j.eligible.push_back(int(as_int(m, "eligible machine")));
    j.release = as_int(field(jj, "et", "job"), "et");
    if (jj.contains("lt")) j.due = as_int(jj["lt"], "lt");
    j.min_proc = as_int(field(jj, "mint", "job"), "mint");
    j.max_proc = as_int(field(jj, "maxt", "job"), "maxt");
    j.size = as_int(field(jj, "size", "job"), "size");
    j.attribute = int(as_int(field(jj, "attr", "job"), "attr"));
    inst.jobs.push_back(std::move(j));
  }

  if (doc.contains("metadata")) {
    if (!doc["metadata"].is_object()) fail("metadata must be an object");
    inst.metadata = doc["metadata"].dump();
  }
  return inst;
}

std::string instance_content_hash(const Instance& instance) {
  std::string bytes = serialize_instance(instance);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out = "sha256:";
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

std::string serialize_schedule(const Schedule& schedule,
                               const std::string& instance_ref) {
  json doc;
  doc["version"] = kFormatVersion;
  doc["instance_ref"] = instance_ref;
  json batches = json::array();
  for (const Batch& b : schedule.batches) {
    json jb;
    jb["machine"] = b.machine;
    jb["start"] = b.start;
    jb["proc"] = b.proc;
    jb["jobs"] = b.jobs;
    batches.push_back(std::move(jb));
  }
  doc["batches"] = std::move(batches);
  return doc.dump(2) + "\n";
}

std::pair<Schedule, std::string> parse_schedule(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) fail("not a JSON object");
  reject_unknown(doc, {"version", "instance_ref", "batches"}, "schedule");
  if (as_int(field(doc, "version", "schedule"), "version") != kFormatVersion)
    fail("unsupported schedule format version");
  const json& ref = field(doc, "instance_ref", "schedule");
  if (!ref.is_string()) fail("instance_ref must be a string");

  Schedule schedule;
  const json& batches = field(doc, "batches", "schedule");
  if (!batches.is_array()) fail("batches must be an array");
  for (const json& jb : batches) {
    reject_unknown(jb, {"machine", "start", "proc", "jobs"}, "batch");
    Batch b;
    b.machine = int(as_int(field(jb, "machine", "batch"), "machine"));
    b.start = as_int(field(jb, "start", "batch"), "start");
    b.proc = as_int(field(jb, "proc", "batch"), "proc");
    const json& jobs = field(jb, "jobs", "batch");
    if (!jobs.is_array() || jobs.empty()) fail("batch jobs must be non-empty");
    for (const json& j : jobs) b.jobs.push_back(int(as_int(j, "job id")));
    schedule.batches.push_back(std::move(b));
  }
  return {std::move(schedule), ref.get<std::string>()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot write " + path);
  out << content;
}

}  // namespace osp
