// src/core/error.h

// Copyright 2026  NyTT Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef NYTT_CORE_ERROR_H_
#define NYTT_CORE_ERROR_H_

#include <stdexcept>
#include <string>

namespace nytt {

enum class StatusCode {
  kOk = 0,
  kInvalidArgument,
  kDegenerateInput,
  kUnsupportedFormat,
  kIoError,
  kNumericError,
  kStateError,
  kInternal,
};

const char *StatusCodeName(StatusCode code);

class Error : public std::runtime_error {
 public:
  Error(StatusCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  StatusCode code() const { return code_; }

 private:
  StatusCode code_;
};

// Throws Error(code, message) when cond is false.
inline void Require(bool cond, StatusCode code, const std::string &message) {
  if (!cond) throw Error(code, message);
}

inline void RequireArg(bool cond, const std::string &message) {
  Require(cond, StatusCode::kInvalidArgument, message);
}

}  // namespace nytt

#endif  // NYTT_CORE_ERROR_H_
