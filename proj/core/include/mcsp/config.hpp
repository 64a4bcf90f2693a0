#pragma once

#include <iosfwd>
#include <map>
#include <string>

namespace mcsp {

struct MmasParams;

// Flat `key = value` text. '#' starts a comment, blank lines are skipped,
// later occurrences of a key win.
using ConfigMap = std::map<std::string, std::string>;

ConfigMap parse_config(std::istream& in);
ConfigMap load_config(const std::string& path);

// Applies solver keys (mmas.*, heuristic.*) onto params. Unknown keys and
// unparsable values throw std::invalid_argument. Range checking is left to
// MmasParams::validate so that later overrides can still fix a value.
void apply_mmas_config(const ConfigMap& config, MmasParams& params);

}  // namespace mcsp
