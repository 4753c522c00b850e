#pragma once

#include <stdexcept>
#include <string>

namespace hopf {

// Malformed input: unknown generator, rank mismatch, bad JSON, singular matrix.
class InputError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

// Parameters outside a family's stated domain.
class ParameterError : public InputError {
public:
	using InputError::InputError;
};

// The object is well-formed but lacks a structural property an operation needs
// (closure of P2, conilpotency, degree drop of the reduced coproduct, ...).
class StructuralError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

} // namespace hopf
