// minus_one_params.hpp
//
// Parameters (beta, M) of the -1 Krall-Jacobi family. The q-side index j is
// fixed at 2 for this family.

#pragma once

#include <string>

#include <json.hpp>

#include "krallm1/scalar.hpp"

namespace krallm1 {

struct MinusOneParams {
  Rational beta;
  Rational M;

  static constexpr int kJ = 2;

  friend bool operator==(const MinusOneParams&, const MinusOneParams&) = default;
};

inline nlohmann::ordered_json to_json(const MinusOneParams& p) {
  return {{"beta", to_string(p.beta)}, {"M", to_string(p.M)}};
}

inline std::string describe(const MinusOneParams& p) {
  return "(beta=" + to_string(p.beta) + ", M=" + to_string(p.M) + ")";
}

}  // namespace krallm1
