#pragma once

#include <string>

#include "skymec/model/types.hpp"

namespace skymec::model {

// Versioned instance document (schema tag "instance-v1"). Serialization is
// key-ordered and round-trips bit-exact doubles.
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);

void save_instance(const Instance& inst, const std::string& path);
Instance load_instance(const std::string& path);

// Resolves a CLI scenario argument: either "<profile>:<seed>" for a
// registered profile or a path to an instance-v1 file.
Instance resolve_scenario(const std::string& arg);

}  // namespace skymec::model
