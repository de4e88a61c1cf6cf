#pragma once
#include <optional>
#include <string>

#include "core/bccore.hpp"
#include "core/session.hpp"

namespace spectral {

enum class OutFormat { Text, Json, Latex };

std::optional<OutFormat> parse_format(const std::string& name);

// Lazily built kernel objects for one session; the expensive Groebner
// computation runs at most once per session.
class SessionKernel {
 public:
  explicit SessionKernel(Session s) : s_(std::move(s)) {}

  const Session& session() const { return s_; }
  const GoodearlBasis& basis();
  const BCBasis& bc();

 private:
  Session s_;
  std::optional<GoodearlBasis> basis_;
  std::optional<BCBasis> bc_;
};

// Command bodies shared by the C API and the CLI; each returns the full
// stdout payload (newline terminated).
std::string cmd_bc_ideal(SessionKernel& k, OutFormat format);
std::string cmd_reduce(SessionKernel& k, const std::string& target_expr,
                       OutFormat format);
std::string cmd_member(SessionKernel& k, const std::string& poly_expr,
                       OutFormat format);
// Pass/fail report over the structure checks, Buchberger's criterion,
// phi_L vanishing, and the resultant membership cross-check.  Text or
// Json only.
std::string cmd_verify(SessionKernel& k, OutFormat format);
// Session text of a built-in example.
std::string cmd_example(const std::string& name);

// "exponential", "elliptic(g2, g3)", ... as written in a declaration.
std::string field_decl_text(const Session& s);

}  // namespace spectral
