#pragma once

#include <stdexcept>
#include <string>

namespace fhdet {

// Runtime failure with a machine-checkable kind tag. Kinds in use:
//   gamma_pole, barnes_zero, degenerate_parameter, singularity_eval,
//   quadrature, breakdown, hypothesis, degenerate_rep, sign_anchor, io
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

}  // namespace fhdet
