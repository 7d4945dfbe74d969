// include/emdnoise/errors.hpp

// Copyright 2026  The emdnoise authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABILITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef EMDNOISE_ERRORS_HPP_
#define EMDNOISE_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace emdnoise {

// Thrown when two signals that must have equal length do not.
class LengthMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when an SNR is requested against a zero-energy reference.
class ZeroEnergyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when envelope construction is impossible: fewer than two spline
// knots remain after boundary extension. Callers treat the offending
// signal as a residue.
class InsufficientExtremaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed RIFF/WAVE input. byte_offset() points at the offending byte.
class WavFormatError : public std::runtime_error {
 public:
  WavFormatError(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what + " (byte offset " +
                           std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

}  // namespace emdnoise

#endif  // EMDNOISE_ERRORS_HPP_
