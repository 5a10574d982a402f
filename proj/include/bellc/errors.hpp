/*
   Copyright 2026 The bellc Authors

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

#ifndef BELLC_ERRORS_HPP
#define BELLC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bellc {

// Violated mathematical precondition (division by zero, bad index, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Coefficient requested beyond the precision a truncated series carries.
class PrecisionError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Malformed textual input (rationals, b-files, mapping specs).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Value does not fit the requested floating-point format.
class MagnitudeError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// Two independent computation routes disagreed.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Truncated infinite sum did not reach its tolerance within the term budget.
class NonConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Remote resource could not be fetched.
class NetworkError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace bellc

#endif // BELLC_ERRORS_HPP
