#ifndef SGFORGE_ERROR_HPP_
#define SGFORGE_ERROR_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace sgforge {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class NotClosed : public Error {
   public:
    using Error::Error;
  };

  class NotAssociative : public Error {
   public:
    NotAssociative(size_t i, size_t j, size_t k);

    size_t i, j, k;
  };

  class NotAnIdeal : public Error {
   public:
    using Error::Error;
  };

  class SizeLimitExceeded : public Error {
   public:
    using Error::Error;
  };

  class SyntaxError : public Error {
   public:
    SyntaxError(size_t pos, std::string const& msg);

    size_t position;
  };

  class ReservedLetterMisuse : public Error {
   public:
    using Error::Error;
  };

  class MissingLetter : public Error {
   public:
    using Error::Error;
  };

  class InvalidKernelChoice : public Error {
   public:
    using Error::Error;
  };

  class UnknownName : public Error {
   public:
    using Error::Error;
  };

  class BadParams : public Error {
   public:
    using Error::Error;
  };

  class OrderTooLarge : public Error {
   public:
    using Error::Error;
  };

  class ConflictingConditions : public Error {
   public:
    using Error::Error;
  };

}  // namespace sgforge

#endif  // SGFORGE_ERROR_HPP_
