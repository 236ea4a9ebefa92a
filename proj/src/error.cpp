#include "sgforge/error.hpp"

namespace sgforge {

  NotAssociative::NotAssociative(size_t i_, size_t j_, size_t k_)
      : Error("the table is not associative at (" + std::to_string(i_) + ", "
              + std::to_string(j_) + ", " + std::to_string(k_) + ")"),
        i(i_),
        j(j_),
        k(k_) {}

  SyntaxError::SyntaxError(size_t pos, std::string const& msg)
      : Error("syntax error at position " + std::to_string(pos) + ": " + msg),
        position(pos) {}

}  // namespace sgforge
