// Copyright 2026 The netrecon Authors
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

#ifndef NETRECON_ERROR_HPP_
#define NETRECON_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace netrecon {

// Library error with a stable machine-readable code alongside the message.
// Codes are short upper-case tokens (UNKNOWN_ROUTE, MERGE_CONFLICT, ...) and
// are what the CLI surfaces in its error JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

}  // namespace netrecon

#endif  // NETRECON_ERROR_HPP_
