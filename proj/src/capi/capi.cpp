#include "spectral_kernel.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "core/commands.hpp"
#include "core/errors.hpp"

using namespace spectral;

struct spk_session {
  SessionKernel kernel;
};

namespace {

thread_local std::string g_last_error;

int set_error(int code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const SpectralError& e) {
    return set_error(e.is_parse_error() ? SPK_ERR_PARSE : SPK_ERR_MATH,
                     e.what());
  } catch (const std::exception& e) {
    return set_error(SPK_ERR_MATH, e.what());
  }
}

bool to_format(int format, OutFormat* out) {
  switch (format) {
    case SPK_FORMAT_TEXT:
      *out = OutFormat::Text;
      return true;
    case SPK_FORMAT_JSON:
      *out = OutFormat::Json;
      return true;
    case SPK_FORMAT_LATEX:
      *out = OutFormat::Latex;
      return true;
  }
  return false;
}

using Command = std::string (*)(SessionKernel&, OutFormat);

int run_command(spk_session* session, int format, char** out, Command fn) {
  if (!session || !out) return set_error(SPK_ERR_USAGE, "null argument");
  OutFormat f;
  if (!to_format(format, &f))
    return set_error(SPK_ERR_USAGE, "unknown output format");
  return guarded([&] {
    std::string text = fn(session->kernel, f);
    *out = dup_string(text);
    return *out ? SPK_OK : set_error(SPK_ERR_MATH, "out of memory");
  });
}

}  // namespace

extern "C" {

int spk_session_parse(const char* text, spk_session** out) {
  if (!text || !out) return set_error(SPK_ERR_USAGE, "null argument");
  return guarded([&] {
    Session s = parse_session(text);
    *out = new spk_session{SessionKernel(std::move(s))};
    return SPK_OK;
  });
}

void spk_session_free(spk_session* session) { delete session; }

int spk_session_info(spk_session* session, long* n, long* t, long* rank) {
  if (!session) return set_error(SPK_ERR_USAGE, "null session");
  return guarded([&] {
    const GoodearlBasis& b = session->kernel.basis();
    if (n) *n = b.n;
    if (t) *t = b.t;
    if (rank) *rank = b.rank;
    return SPK_OK;
  });
}

int spk_session_order_group(spk_session* session, long* group, size_t cap,
                            size_t* len) {
  if (!session || !len) return set_error(SPK_ERR_USAGE, "null argument");
  return guarded([&] {
    const GoodearlBasis& b = session->kernel.basis();
    *len = b.order_group.size();
    if (group)
      for (size_t i = 0; i < cap && i < b.order_group.size(); ++i)
        group[i] = b.order_group[i];
    return SPK_OK;
  });
}

int spk_bc_ideal(spk_session* session, int format, char** out) {
  return run_command(session, format, out, &cmd_bc_ideal);
}

int spk_reduce(spk_session* session, const char* target_expr, int format,
               char** out) {
  if (!target_expr) return set_error(SPK_ERR_USAGE, "null target expression");
  if (!session || !out) return set_error(SPK_ERR_USAGE, "null argument");
  OutFormat f;
  if (!to_format(format, &f))
    return set_error(SPK_ERR_USAGE, "unknown output format");
  return guarded([&] {
    std::string text = cmd_reduce(session->kernel, target_expr, f);
    *out = dup_string(text);
    return *out ? SPK_OK : set_error(SPK_ERR_MATH, "out of memory");
  });
}

int spk_member(spk_session* session, const char* poly_expr, int format,
               char** out) {
  if (!poly_expr) return set_error(SPK_ERR_USAGE, "null polynomial expression");
  if (!session || !out) return set_error(SPK_ERR_USAGE, "null argument");
  OutFormat f;
  if (!to_format(format, &f))
    return set_error(SPK_ERR_USAGE, "unknown output format");
  return guarded([&] {
    std::string text = cmd_member(session->kernel, poly_expr, f);
    *out = dup_string(text);
    return *out ? SPK_OK : set_error(SPK_ERR_MATH, "out of memory");
  });
}

int spk_verify(spk_session* session, int format, char** out) {
  return run_command(session, format, out, &cmd_verify);
}

int spk_example(const char* name, char** out) {
  if (!name || !out) return set_error(SPK_ERR_USAGE, "null argument");
  return guarded([&] {
    std::string text = cmd_example(name);
    *out = dup_string(text);
    return *out ? SPK_OK : set_error(SPK_ERR_MATH, "out of memory");
  });
}

const char* spk_last_error(void) { return g_last_error.c_str(); }

void spk_string_free(char* s) { std::free(s); }

}  // extern "C"
