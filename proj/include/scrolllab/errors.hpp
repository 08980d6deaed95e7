#pragma once

#include <stdexcept>
#include <string>

namespace scrolllab {

// Error taxonomy shared by every module. The CLI maps these to exit codes;
// library code throws and never prints.
enum class Errc {
  input,             // malformed or out-of-contract argument
  dimension,         // matrix/vector shape mismatch
  degenerate_input,  // zero polynomial, dependent matrices, ...
  convergence,       // iteration did not reach tolerance
  rank,              // rank precondition failed (e.g. rank(G) < 6)
  fit,               // implicitization nullity != expected
  elimination,       // resultant cascade failed after chart retries
  precondition,      // operation called outside its declared regime
  sampling,          // could not produce samples at required residual
  io                 // file/JSON problems
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace scrolllab
