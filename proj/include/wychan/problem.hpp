#pragma once

#include <string>
#include <vector>

#include "wychan/channel.hpp"

namespace wychan {

/// Parsed (not yet validated) state description from a problem file.
struct StateSpec {
  enum class Kind { bloch, matrix };
  Kind kind = Kind::bloch;
  BlochVector r;
  ComplexMatrix matrix;
};

/// Parsed channel description from a problem file.
struct ChannelSpec {
  enum class Kind { amplitude_damping, bit_flip, unitary, kraus, pauli };
  Kind kind = Kind::amplitude_damping;
  double q = 0.0;
  char axis = 'x';
  ComplexMatrix matrix;
  std::vector<ComplexMatrix> ops;
};

struct Problem {
  StateSpec state;
  std::vector<ChannelSpec> channels;
};

/// Parse a problem file (JSON; complex entries as [re, im] pairs, matrices as
/// row-major nested arrays). Throws ParseError with the offending field path
/// in the message. Validation against the quantum-state/channel invariants
/// happens later, in build_state / build_channel.
Problem load_problem_file(const std::string& path);
Problem parse_problem_text(const std::string& text);

DensityMatrix build_state(const StateSpec& spec);
KrausChannel build_channel(const ChannelSpec& spec);

/// amplitude_damping and bit_flip carry a sweepable q parameter.
bool channel_has_q(const ChannelSpec& spec);
ChannelSpec with_q(const ChannelSpec& spec, double q);

}  // namespace wychan
