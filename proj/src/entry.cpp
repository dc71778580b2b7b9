#include "stab/entry.hpp"

namespace stab {

std::string to_string(const CosetEntry& e) {
  switch (e.tag) {
    case CosetTag::Int:
      return std::to_string(e.offset);
    case CosetTag::Half:
      return std::to_string(2 * e.offset + 1) + "/2";
    case CosetTag::Generic: {
      std::string s = (e.sign < 0 ? "-" : "") + e.label;
      if (e.offset > 0) s += "+" + std::to_string(e.offset);
      if (e.offset < 0) s += std::to_string(e.offset);
      return s;
    }
  }
  return "?";
}

std::string to_string(const CosetClass& c) {
  switch (c.tag) {
    case CosetTag::Int: return "Z";
    case CosetTag::Half: return "1/2+Z";
    case CosetTag::Generic:
      return (c.sign < 0 ? "-" : "") + c.label + "+Z";
  }
  return "?";
}

std::string to_string(const PmClass& c) {
  switch (c.tag) {
    case CosetTag::Int: return "Z";
    case CosetTag::Half: return "1/2+Z";
    case CosetTag::Generic: return "+-" + c.label + "+Z";
  }
  return "?";
}

}  // namespace stab
