#pragma once

#include <stdexcept>
#include <string>

namespace stair {

// Base of everything the library throws on purpose.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller handed us something outside an operation's domain.
class domain_error : public error {
 public:
  using error::error;
};

class malformed_ideal : public domain_error {
 public:
  using domain_error::domain_error;
};

class invalid_hilbert_function : public domain_error {
 public:
  using domain_error::domain_error;
};

class range_error : public domain_error {
 public:
  using domain_error::domain_error;
};

class degenerate_limit : public domain_error {
 public:
  using domain_error::domain_error;
};

class degenerate_space : public domain_error {
 public:
  using domain_error::domain_error;
};

class invalid_move : public domain_error {
 public:
  using domain_error::domain_error;
};

class marker_undefined : public domain_error {
 public:
  using domain_error::domain_error;
};

// Two computations that must agree did not; always a bug on our side.
class internal_error : public error {
 public:
  using error::error;
};

}  // namespace stair
