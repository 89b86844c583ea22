// Copyright 2026 The Authors.
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

#ifndef KMR_ERRORS_H_
#define KMR_ERRORS_H_

#include <stdexcept>
#include <string>

namespace kmr {

// Base class for all recoverable failures raised by the library. kind()
// returns the short error name used in JSON reports and CLI output.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define KMR_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  }

KMR_DEFINE_ERROR(LevelError);
KMR_DEFINE_ERROR(ZeroError);
KMR_DEFINE_ERROR(ZeroPolyError);
KMR_DEFINE_ERROR(ZeroInputError);
KMR_DEFINE_ERROR(ParseError);
KMR_DEFINE_ERROR(NotUniformizer);
KMR_DEFINE_ERROR(ZeroEntry);
KMR_DEFINE_ERROR(BadExponent);
KMR_DEFINE_ERROR(NotMember);
KMR_DEFINE_ERROR(DimUnknown);
KMR_DEFINE_ERROR(NotPreserving);
KMR_DEFINE_ERROR(JoinUndefined);
KMR_DEFINE_ERROR(ArityMismatch);
KMR_DEFINE_ERROR(NotIsomorphism);
KMR_DEFINE_ERROR(BadSymbol);
KMR_DEFINE_ERROR(TooLarge);
KMR_DEFINE_ERROR(Mismatch);
KMR_DEFINE_ERROR(NotCompatible);
KMR_DEFINE_ERROR(InsufficientUniverse);
KMR_DEFINE_ERROR(TransferMismatch);
KMR_DEFINE_ERROR(ConfigError);

#undef KMR_DEFINE_ERROR

}  // namespace kmr

#endif  // KMR_ERRORS_H_
