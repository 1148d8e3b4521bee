#ifndef FUSIONLOC_ERRORS_H_
#define FUSIONLOC_ERRORS_H_

#include <stdexcept>
#include <string>

namespace fusionloc {

// Malformed input: bad permutation, parse failure, degree mismatch.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured search or enumeration cap was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller violated a documented precondition.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation produced a result contradicting a proven statement. These
// are never expected and indicate a bug or a wrong construction.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Partial product requested on a word outside the domain.
class UndefinedProductError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fusionloc

#endif  // FUSIONLOC_ERRORS_H_
