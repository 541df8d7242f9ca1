#include "exg/rational.hpp"

namespace exg {

Rat Rat::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(text));
    return Rat(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw DomainError("cannot parse rational '" + text + "'");
  }
}

}  // namespace exg
