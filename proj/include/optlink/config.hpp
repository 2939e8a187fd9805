#ifndef OPTLINK_CONFIG_HPP
#define OPTLINK_CONFIG_HPP

#include <string>

#include "optlink/presets.hpp"

// JSON configuration document handling for the CLI. One document, three
// optional sections ("fso", "fiber", "weather"); unspecified fields keep
// the built-in defaults, unknown keys are rejected. Every numeric key
// carries its unit in its name.

namespace optlink::config {

/// Built-in defaults for every section.
presets::PresetInputs default_config();

/// Parses a config document and merges it over the defaults. Throws
/// std::domain_error naming the offending key on parse failure, unknown
/// keys, type mismatches, or invariant violations.
presets::PresetInputs parse_config(const std::string& json_text);

/// parse_config over the contents of a file.
presets::PresetInputs load_config(const std::string& path);

/// The full document for a configuration, every key explicit. What
/// `defaults --show` prints.
std::string to_json(const presets::PresetInputs& inputs);

}  // namespace optlink::config

#endif  // OPTLINK_CONFIG_HPP
