/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The tbar Authors
 */

#pragma once

#include <stdexcept>
#include <string>

namespace tbar {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition (bad argument, mismatched
/// intervals, point outside a domain, ...).
class UsageError : public Error {
public:
	using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
public:
	using Error::Error;
};

/// Data that is well-formed syntactically but violates a structural
/// invariant (non power-of-two slope, broken periodicity, fixed points
/// where none are allowed, ...).
class InvariantError : public Error {
public:
	using Error::Error;
};

} // namespace tbar
