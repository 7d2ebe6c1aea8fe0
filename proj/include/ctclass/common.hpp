#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ctclass {

// Error hierarchy. The CLI maps each family to a stable exit code:
// config -> 2, data -> 3, training -> 4, render/io -> 5.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct DataError : Error {
  using Error::Error;
};

// Corrupt or unreadable image; carries the source path in the message.
struct DecodeError : DataError {
  using DataError::DataError;
};

// Tensor/layer dimension mismatch.
struct ShapeError : Error {
  using Error::Error;
};

// Weight artifact could not be applied to the architecture.
struct LoadError : Error {
  using Error::Error;
};

struct TrainingError : Error {
  using Error::Error;
};

struct RenderError : Error {
  using Error::Error;
};

// Warning sink used by operations that skip or tolerate bad inputs.
// The default sink writes to stderr.
using WarnFn = std::function<void(std::string_view)>;

void default_warn(std::string_view message);

}  // namespace ctclass
