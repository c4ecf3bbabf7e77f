#pragma once

#include <stdexcept>
#include <string>

/*
  Error taxonomy shared by the whole library.

  precondition_error   caller violated a documented contract (bad l, size
                       mismatch, non-invertible Morita parameter, ...)
  divisibility_error   exact polynomial division left a remainder
  verification_error   an identity the library promises failed on real data
  internal_error       two routes that must agree disagreed; a bug, not
                       a user mistake

  The command-line driver maps these onto distinct exit codes.
*/

namespace hecke {

class precondition_error : public std::invalid_argument {
public:
    explicit precondition_error(const std::string& what)
        : std::invalid_argument(what) {}
};

class divisibility_error : public std::domain_error {
public:
    explicit divisibility_error(const std::string& what)
        : std::domain_error(what) {}
};

class verification_error : public std::runtime_error {
public:
    explicit verification_error(const std::string& what)
        : std::runtime_error(what) {}
};

class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what)
        : std::logic_error(what) {}
};

// Malformed command-line input or text literals.
class usage_error : public std::invalid_argument {
public:
    explicit usage_error(const std::string& what)
        : std::invalid_argument(what) {}
};

} // namespace hecke
