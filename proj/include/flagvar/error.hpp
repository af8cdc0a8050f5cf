#pragma once

#include <stdexcept>
#include <string>

namespace flagvar {

/// Reasons a library call can reject its input or give up.
enum class Errc {
  InvalidType,       // series/rank combination outside the classification
  ForeignRoot,       // root value does not belong to the system it was used with
  ReducibleSystem,   // operation needs a single irreducible factor
  EmptyCrossing,     // a flag variety needs at least one crossed node
  InvalidNode,       // node index outside 1..rank
  NotInSet,          // root argument required to lie in the given set
  NotBorel,          // operation defined for fully crossed flags only
  NotMaximal,        // operation defined for single-cross factors only
  CapacityExceeded,  // more noncompact roots than a set mask can hold
  GuardExceeded,     // enumeration would exceed the configured cap
  BadDescriptor,     // malformed descriptor or argument
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidType: return "invalid-type";
    case Errc::ForeignRoot: return "foreign-root";
    case Errc::ReducibleSystem: return "reducible-system";
    case Errc::EmptyCrossing: return "empty-crossing";
    case Errc::InvalidNode: return "invalid-node";
    case Errc::NotInSet: return "not-in-set";
    case Errc::NotBorel: return "not-borel";
    case Errc::NotMaximal: return "not-maximal";
    case Errc::CapacityExceeded: return "capacity-exceeded";
    case Errc::GuardExceeded: return "guard-exceeded";
    case Errc::BadDescriptor: return "bad-descriptor";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace flagvar
