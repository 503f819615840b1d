#pragma once

#include <stdexcept>
#include <string>

namespace braidrep {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed word text, JSON, or generator name.
class ParseError : public Error {
public:
    using Error::Error;
};

class AlphabetMismatch : public Error {
public:
    using Error::Error;
};

// Parameters outside a builder's or representation's preconditions.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

// rewrite() was handed a word outside D_n.
class NotInSubgroup : public Error {
public:
    using Error::Error;
};

// A constructed assignment failed its inverse certification.
class CertificationError : public Error {
public:
    using Error::Error;
};

} // namespace braidrep
