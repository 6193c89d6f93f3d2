#include "wpo/order.hpp"

namespace wpo {

const char* to_string(PairClass c) {
  switch (c) {
  case PairClass::Equal:
    return "equal";
  case PairClass::Less:
    return "less";
  case PairClass::Greater:
    return "greater";
  case PairClass::Incomparable:
    return "incomparable";
  }
  return "?";
}

const char* to_string(Homogeneity h) {
  switch (h) {
  case Homogeneity::Constant:
    return "constant";
  case Homogeneity::Descending:
    return "descending";
  case Homogeneity::Ascending:
    return "ascending";
  case Homogeneity::Antichain:
    return "antichain";
  }
  return "?";
}

} // namespace wpo
