#pragma once

#include <stdexcept>
#include <string>

namespace hamindex {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HAMINDEX_ERROR(Name)             \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

HAMINDEX_ERROR(CapacityError);
HAMINDEX_ERROR(DisconnectedGraph);
HAMINDEX_ERROR(NotBalancedBipartite);
HAMINDEX_ERROR(UnsupportedFamily);
HAMINDEX_ERROR(ParameterOutOfRange);
HAMINDEX_ERROR(ParameterOutOfStatedRange);
HAMINDEX_ERROR(OrderTooLarge);
HAMINDEX_ERROR(OrderMismatch);
HAMINDEX_ERROR(InfeasibleScope);
HAMINDEX_ERROR(BudgetExhausted);
HAMINDEX_ERROR(ParseError);

#undef HAMINDEX_ERROR

}  // namespace hamindex
