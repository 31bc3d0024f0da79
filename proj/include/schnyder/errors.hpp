#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace schnyder {

enum class ErrorCode {
  NotInvolution,
  FixedPointEdge,
  NotPermutation,
  Disconnected,
  NegativeGenus,
  Parse,
  DimensionMismatch,
  NotZeroHomologous,
  NotCirculation,
  NotACycle,
  NotSchnyder,
  NotEdgeLabeling,
  MalformedIntervalPattern,
  MonochromaticFace,
  SinkVertex,
  Type0Face,
  NotDirected,
  ForbiddenRootFace,
  BudgetExceeded,
  NotHomologous,
  NoOrientation,
  IterationBudgetExceeded,
  NotContractible,
  DegenerateGrid,
  InvalidArgument,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised by face_potential. The witness is a closed walk in the dual map
// (dart ids shared with the primal) on which the flow pairs to nonzero.
class NotZeroHomologousError : public Error {
 public:
  NotZeroHomologousError(std::vector<int> witness, long long pairing)
      : Error(ErrorCode::NotZeroHomologous,
              "flow is not a combination of facial flows (pairing " + std::to_string(pairing) +
                  " on a dual cycle of length " + std::to_string(witness.size()) + ")"),
        witness_(std::move(witness)),
        pairing_(pairing) {}

  const std::vector<int>& witness() const { return witness_; }
  long long pairing() const { return pairing_; }

 private:
  std::vector<int> witness_;
  long long pairing_;
};

class NotEdgeLabelingError : public Error {
 public:
  explicit NotEdgeLabelingError(std::vector<int> edges)
      : Error(ErrorCode::NotEdgeLabeling, describe(edges)), edges_(std::move(edges)) {}

  const std::vector<int>& edges() const { return edges_; }

 private:
  static std::string describe(const std::vector<int>& edges) {
    std::string s = "edges violating the local pattern:";
    for (int e : edges) s += " " + std::to_string(e);
    return s;
  }
  std::vector<int> edges_;
};

}  // namespace schnyder
