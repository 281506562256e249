#pragma once
// One verified identity: what was compared and whether it held.

#include <string>
#include <utility>
#include <vector>

namespace wpsm {

struct Check {
  std::string tag;     // stable short name, becomes the claim id prefix
  std::string anchor;  // the identity in formula form
  std::string lhs;
  std::string rhs;
  bool pass = false;
  std::string witness;  // filled on failure
  std::string lhs_expr;  // optional unreduced display form of lhs
};

inline Check make_check(std::string tag, std::string anchor, std::string lhs, std::string rhs,
                        std::string witness = {}) {
  Check c{std::move(tag), std::move(anchor), std::move(lhs), std::move(rhs), false, {}, {}};
  c.pass = c.lhs == c.rhs;
  if (!c.pass) c.witness = std::move(witness);
  return c;
}

inline Check make_bool_check(std::string tag, std::string anchor, bool ok, std::string witness = {}) {
  Check c{std::move(tag), std::move(anchor), ok ? "true" : "false", "true", ok, {}, {}};
  if (!ok) c.witness = std::move(witness);
  return c;
}

using Checks = std::vector<Check>;

}  // namespace wpsm
