#pragma once

#include <string>

namespace topoclique {

/// practical: desk-scale defaults, formula bounds recorded as telemetry.
/// paper: literal formula values, formula bounds gate the construction.
enum class ParamMode { practical, paper };

std::string to_string(ParamMode mode);

/// Accepts "practical" and "paper"; throws InputError otherwise.
ParamMode parse_mode(const std::string& text);

}  // namespace topoclique
