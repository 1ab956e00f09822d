#pragma once

#include <stdexcept>
#include <string>

namespace krasno {

enum class ErrorCode {
  EmptyInput,
  NotInGallery,
  InvalidPolygon,
  InvalidArgument,
  DomainViolation,
  NotSimplyConnected,
  MixedFamilies,
  NonConvergence,
  ResamplingExhausted,
  NoSpikeCount,
  Parse,
};

const char* to_string(ErrorCode code);

// Every recoverable failure in the library surfaces as a GeometryError carrying
// a machine-readable code; the CLI maps codes to exit statuses.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace krasno
