// Copyright 2026 The asmcheck Authors.
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

#ifndef ASMCHECK_ERRORS_HPP_
#define ASMCHECK_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace asmcheck {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed objects or arguments.
class VocabularyMismatch : public Error { using Error::Error; };
class InvalidState : public Error { using Error::Error; };
class InvalidRenaming : public Error { using Error::Error; };
class DomainError : public Error { using Error::Error; };
class InvalidRule : public Error { using Error::Error; };

// Rule execution.
class ClashError : public Error { using Error::Error; };
class GuardError : public Error { using Error::Error; };
class UnknownState : public Error { using Error::Error; };

// Similarity.
class NotSimilarError : public Error { using Error::Error; };
class InaccessibleError : public Error { using Error::Error; };

// Checker preconditions. All of these map to exit code 2.
class PreconditionError : public Error { using Error::Error; };
class HeadroomError : public PreconditionError { using PreconditionError::PreconditionError; };
class CaseHypothesisError : public PreconditionError {
  using PreconditionError::PreconditionError;
};

}  // namespace asmcheck

#endif  // ASMCHECK_ERRORS_HPP_
