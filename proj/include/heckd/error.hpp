#pragma once

#include <stdexcept>
#include <string>

namespace heckd {

// Error categories. The CLI maps these onto its exit-code contract:
// parse/config errors exit 2, invariant violations exit 3.
enum class Errc {
  RankTooSmall,
  ResidueCover,
  Symmetry,
  Parity,
  RankMismatch,
  RhoHasNoDescent,
  Parse,
  MalformedRecord,
  MergeRankMismatch,
  IntervalTooLarge,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message, long long index = -1)
      : std::runtime_error(std::move(message)), code_(code), index_(index) {}

  Errc code() const { return code_; }

  // Failing window position, byte offset or line number, depending on code.
  // Negative when not applicable.
  long long index() const { return index_; }

  const char* kind() const {
    switch (code_) {
      case Errc::RankTooSmall: return "rank-too-small";
      case Errc::ResidueCover: return "residue-cover-violation";
      case Errc::Symmetry: return "symmetry-violation";
      case Errc::Parity: return "parity-violation";
      case Errc::RankMismatch: return "rank-mismatch";
      case Errc::RhoHasNoDescent: return "rho-has-no-descent";
      case Errc::Parse: return "parse-error";
      case Errc::MalformedRecord: return "malformed-record";
      case Errc::MergeRankMismatch: return "rank-mismatch-on-merge";
      case Errc::IntervalTooLarge: return "interval-too-large";
      case Errc::Internal: return "internal-error";
    }
    return "unknown";
  }

 private:
  Errc code_;
  long long index_;
};

}  // namespace heckd
