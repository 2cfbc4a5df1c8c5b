// laug/error.h

// Copyright 2026 The LAUG Toolkit Authors
//
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

#ifndef LAUG_ERROR_H_
#define LAUG_ERROR_H_

#include <stdexcept>
#include <string>

namespace laug {

// All toolkit failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file (JSON syntax, wrong field types, bad resource line).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Input parsed but violates a data-model invariant. The message names the
// offending location (dialog id / turn index, or a config field path).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// A span starts or ends in the middle of a word.
class SpanBoundaryError : public Error {
 public:
  using Error::Error;
};

// An augmentation operation found nothing it is allowed to touch. The
// pipeline skips the turn on these.
class NoCandidateError : public Error {
 public:
  using Error::Error;
};

class NoSlotError : public NoCandidateError {
 public:
  using NoCandidateError::NoCandidateError;
};

class NoRepairableSlotError : public NoCandidateError {
 public:
  using NoCandidateError::NoCandidateError;
};

// The paraphrase service could not be reached or answered garbage. Distinct
// from "every candidate was rejected", which is an empty result.
class GeneratorUnavailableError : public Error {
 public:
  using Error::Error;
};

}  // namespace laug

#endif  // LAUG_ERROR_H_
