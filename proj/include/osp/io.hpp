#ifndef OSP_IO_HPP
#define OSP_IO_HPP

#include "osp/types.hpp"

namespace osp {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Versioned JSON documents with fixed field order; serialization is
// byte-stable and parse -> serialize -> parse is the identity.
std::string serialize_instance(const Instance& instance);
Instance parse_instance(const std::string& text);

// SHA-256 of the canonical instance bytes, as "sha256:<hex>".
std::string instance_content_hash(const Instance& instance);

std::string serialize_schedule(const Schedule& schedule,
                               const std::string& instance_ref);
// Returns the schedule plus the stored instance_ref.
std::pair<Schedule, std::string> parse_schedule(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace osp

#endif
