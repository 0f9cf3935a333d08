// include/fonorico/config.h
//
// Declarative key-value config file (one "key = value" per line, '#'
// comments) mirroring the selection and exclusion knobs.
#pragma once

#include <iosfwd>
#include <string>

#include "fonorico/ingest.h"
#include "fonorico/select.h"

namespace fonorico {

struct PipelineConfig {
  SelectionConfig selection;
  ExclusionCriteria exclusion;
  unsigned workers = 1;
};

// Unknown keys and malformed values throw ConfigError naming the key.
PipelineConfig parse_config(std::istream& in);
PipelineConfig load_config_file(const std::string& path);

}  // namespace fonorico
