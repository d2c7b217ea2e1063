#include "topoclique/mode.hpp"

#include "topoclique/errors.hpp"

namespace topoclique {

std::string to_string(ParamMode mode) { return mode == ParamMode::paper ? "paper" : "practical"; }

ParamMode parse_mode(const std::string& text) {
  if (text == "practical") return ParamMode::practical;
  if (text == "paper") return ParamMode::paper;
  throw InputError("unknown mode '" + text + "' (expected practical or paper)");
}

}  // namespace topoclique
