#pragma once

#include <stdexcept>
#include <string>

namespace coarse {

// Error categories surfaced by the library. The CLI prints the camel-case
// name followed by the detail message and exits nonzero.
enum class Errc {
  parse_error,
  invalid_weight,
  disconnected_graph,
  empty_set,
  empty_subspace,
  no_intersection,
  bound_missed,
  not_a_tree,
  empty_intersection,
  invalid_spec,
  precondition,
  overflow,
  io_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::parse_error: return "ParseError";
    case Errc::invalid_weight: return "InvalidWeight";
    case Errc::disconnected_graph: return "DisconnectedGraph";
    case Errc::empty_set: return "EmptySet";
    case Errc::empty_subspace: return "EmptySubspace";
    case Errc::no_intersection: return "NoIntersection";
    case Errc::bound_missed: return "BoundMissed";
    case Errc::not_a_tree: return "NotATree";
    case Errc::empty_intersection: return "EmptyIntersection";
    case Errc::invalid_spec: return "InvalidSpec";
    case Errc::precondition: return "Precondition";
    case Errc::overflow: return "Overflow";
    case Errc::io_error: return "IoError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace coarse
