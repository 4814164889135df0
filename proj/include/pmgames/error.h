// Copyright 2026 The pmgames Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PMGAMES_ERROR_H_
#define PMGAMES_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace pmgames {

enum class ErrorCode {
  kDimensionMismatch,
  kNonFiniteEntry,
  kLossOutOfRange,
  kOutcomeOutOfRange,
  kActionOutOfRange,
  kLengthMismatch,
  kUnmappedSymbol,
  kNotCanonical,
  kWrongArity,
  kNotReducible,
  kDegenerateGame,
  kSolverError,
  kPreconditionViolated,
  kNotStarted,
  kNotFullInformation,
  kUnknownFeedbackSymbol,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// CLI can map it to an exit status.
class GameError : public std::runtime_error {
 public:
  GameError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pmgames

#endif  // PMGAMES_ERROR_H_
