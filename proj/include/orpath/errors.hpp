#pragma once

#include <stdexcept>
#include <string>

namespace orpath {

enum class Errc {
  index_out_of_range,
  loop_edge,
  malformed_graph6,
  bad_parameter,
  too_large,
  give_up,
  pattern_too_large,
  invalid_embedding,
  duplicate_vertex,
  not_connected,
  precondition_violated,
  internal_stuck,
  bad_config,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace orpath
