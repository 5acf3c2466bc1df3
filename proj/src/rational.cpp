#include "cyclocover/rational.hpp"

#include "cyclocover/error.hpp"

namespace cyclocover {

Rational parse_fraction_string(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw Error(ErrorCode::InvalidArgument, "not a fraction: '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace cyclocover
