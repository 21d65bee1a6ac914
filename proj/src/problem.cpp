#include "wychan/problem.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace wychan {

namespace {

using nlohmann::json;

const json& require_key(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) {
    throw ParseError(path + ": expected an object");
  }
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(path + "." + key + ": missing");
  }
  return *it;
}

double number_at(const json& v, const std::string& path) {
  if (!v.is_number()) {
    throw ParseError(path + ": expected a number");
  }
  return v.get<double>();
}

std::string string_at(const json& v, const std::string& path) {
  if (!v.is_string()) {
    throw ParseError(path + ": expected a string");
  }
  return v.get<std::string>();
}

Complex complex_at(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2) {
    throw ParseError(path + ": expected a [re, im] pair");
  }
  return Complex(number_at(v[0], path + "[0]"), number_at(v[1], path + "[1]"));
}

ComplexMatrix matrix_at(const json& v, const std::string& path) {
  if (!v.is_array() || v.empty()) {
    throw ParseError(path + ": expected a nonempty array of rows");
  }
  const std::size_t rows = v.size();
  const json& first = v[0];
  if (!first.is_array() || first.empty()) {
    throw ParseError(path + "[0]: expected a nonempty row");
  }
  const std::size_t cols = first.size();
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string row_path = path + "[" + std::to_string(i) + "]";
    if (!v[i].is_array() || v[i].size() != cols) {
      throw ParseError(row_path + ": expected a row of " + std::to_string(cols) + " entries");
    }
    for (std::size_t j = 0; j < cols; ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          complex_at(v[i][j], row_path + "[" + std::to_string(j) + "]");
    }
  }
  return m;
}

StateSpec parse_state(const json& v, const std::string& path) {
  StateSpec spec;
  const std::string kind = string_at(require_key(v, "kind", path), path + ".kind");
  if (kind == "bloch") {
    spec.kind = StateSpec::Kind::bloch;
    const json& r = require_key(v, "r", path);
    if (!r.is_array() || r.size() != 3) {
      throw ParseError(path + ".r: expected 3 components");
    }
    spec.r = BlochVector{number_at(r[0], path + ".r[0]"), number_at(r[1], path + ".r[1]"),
                         number_at(r[2], path + ".r[2]")};
  } else if (kind == "matrix") {
    spec.kind = StateSpec::Kind::matrix;
    spec.matrix = matrix_at(require_key(v, "data", path), path + ".data");
  } else {
    throw ParseError(path + ".kind: unknown state kind '" + kind + "'");
  }
  return spec;
}

ChannelSpec parse_channel(const json& v, const std::string& path) {
  ChannelSpec spec;
  const std::string kind = string_at(require_key(v, "kind", path), path + ".kind");
  if (kind == "amplitude_damping" || kind == "bit_flip") {
    spec.kind = kind == "amplitude_damping" ? ChannelSpec::Kind::amplitude_damping
                                            : ChannelSpec::Kind::bit_flip;
    spec.q = number_at(require_key(v, "q", path), path + ".q");
  } else if (kind == "unitary") {
    spec.kind = ChannelSpec::Kind::unitary;
    spec.matrix = matrix_at(require_key(v, "matrix", path), path + ".matrix");
  } else if (kind == "kraus") {
    spec.kind = ChannelSpec::Kind::kraus;
    const json& ops = require_key(v, "ops", path);
    if (!ops.is_array() || ops.empty()) {
      throw ParseError(path + ".ops: expected a nonempty array of matrices");
    }
    for (std::size_t i = 0; i < ops.size(); ++i) {
      spec.ops.push_back(matrix_at(ops[i], path + ".ops[" + std::to_string(i) + "]"));
    }
  } else if (kind == "pauli") {
    spec.kind = ChannelSpec::Kind::pauli;
    const std::string axis = string_at(require_key(v, "axis", path), path + ".axis");
    if (axis != "x" && axis != "y" && axis != "z") {
      throw ParseError(path + ".axis: expected \"x\", \"y\" or \"z\"");
    }
    spec.axis = axis[0];
  } else {
    throw ParseError(path + ".kind: unknown channel kind '" + kind + "'");
  }
  return spec;
}

Problem parse_root(const json& root) {
  Problem problem;
  problem.state = parse_state(require_key(root, "state", "$"), "state");
  const json& channels = require_key(root, "channels", "$");
  if (!channels.is_array()) {
    throw ParseError("channels: expected an array");
  }
  for (std::size_t i = 0; i < channels.size(); ++i) {
    problem.channels.push_back(
        parse_channel(channels[i], "channels[" + std::to_string(i) + "]"));
  }
  return problem;
}

}  // namespace

Problem parse_problem_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_root(root);
}

Problem load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open problem file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str());
}

DensityMatrix build_state(const StateSpec& spec) {
  if (spec.kind == StateSpec::Kind::bloch) {
    return DensityMatrix::from_bloch(spec.r);
  }
  return DensityMatrix::from_matrix(spec.matrix);
}

KrausChannel build_channel(const ChannelSpec& spec) {
  switch (spec.kind) {
    case ChannelSpec::Kind::amplitude_damping:
      return amplitude_damping(spec.q);
    case ChannelSpec::Kind::bit_flip:
      return bit_flip(spec.q);
    case ChannelSpec::Kind::unitary:
      return unitary_channel(spec.matrix);
    case ChannelSpec::Kind::kraus:
      return KrausChannel(spec.ops, "kraus");
    case ChannelSpec::Kind::pauli:
      return unitary_channel(pauli(spec.axis), std::string("pauli-") + spec.axis);
  }
  throw ParameterOutOfRange("unreachable channel kind");
}

bool channel_has_q(const ChannelSpec& spec) {
  return spec.kind == ChannelSpec::Kind::amplitude_damping ||
         spec.kind == ChannelSpec::Kind::bit_flip;
}

ChannelSpec with_q(const ChannelSpec& spec, double q) {
  ChannelSpec out = spec;
  out.q = q;
  return out;
}

}  // namespace wychan
