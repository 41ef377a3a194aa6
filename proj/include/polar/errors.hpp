/*
   Copyright 2026 The polarctl Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef POLAR_ERRORS_HPP
#define POLAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polar {

/// A value outside the element domain of its ring context.
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// The operation is not defined for this ring context.
class UnsupportedContext : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Two operands live in different ring contexts.
class ContextMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace polar

#endif  // POLAR_ERRORS_HPP
