#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "spectral_kernel.h"

namespace {

int format_code(const std::string& name) {
  if (name == "text") return SPK_FORMAT_TEXT;
  if (name == "json") return SPK_FORMAT_JSON;
  if (name == "latex") return SPK_FORMAT_LATEX;
  return -1;
}

// Session text from --input, or stdin when no file was named.
bool read_session_text(const std::string& path, std::string* out) {
  if (path.empty()) {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    *out = buf.str();
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  *out = buf.str();
  return true;
}

int emit(int status, char* text) {
  if (status != SPK_OK) {
    std::cerr << "spectral-kernel: " << spk_last_error() << "\n";
    return status;
  }
  std::cout << text;
  spk_string_free(text);
  return 0;
}

struct SessionGuard {
  spk_session* s = nullptr;
  ~SessionGuard() { spk_session_free(s); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner bases of Burchnall-Chaundy ideals of commuting "
               "differential operators"};
  app.require_subcommand(1);

  std::string input_file;
  std::string format = "text";
  std::string target_expr;
  std::string poly_expr;
  std::string example_name;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--input", input_file,
                    "session file (reads stdin when omitted)");
    cmd->add_option("--format", format, "output format: text, json, latex");
  };

  CLI::App* bc = app.add_subcommand(
      "bc-ideal", "Groebner basis of the Burchnall-Chaundy ideal");
  add_common(bc);
  CLI::App* reduce = app.add_subcommand(
      "reduce", "C[L]-module coordinates of a centralizer element");
  add_common(reduce);
  reduce->add_option("--target", target_expr, "operator expression")
      ->required();
  CLI::App* member =
      app.add_subcommand("member", "ideal membership and normal form");
  add_common(member);
  member->add_option("--poly", poly_expr, "polynomial in l, mu1, ...")
      ->required();
  CLI::App* verify =
      app.add_subcommand("verify", "structure, Groebner, and vanishing checks");
  add_common(verify);
  CLI::App* example =
      app.add_subcommand("example", "print a built-in example session");
  example
      ->add_option("name", example_name,
                   "exponential, elliptic, or elliptic-sub")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (example->parsed()) {
    char* text = nullptr;
    const int status = spk_example(example_name.c_str(), &text);
    return emit(status, text);
  }

  const int fmt = format_code(format);
  if (fmt < 0) {
    std::cerr << "spectral-kernel: unknown format '" << format
              << "' (expected text, json, or latex)\n";
    return 1;
  }
  if (verify->parsed() && fmt == SPK_FORMAT_LATEX) {
    std::cerr << "spectral-kernel: verify supports --format text or json\n";
    return 1;
  }

  std::string session_text;
  if (!read_session_text(input_file, &session_text)) {
    std::cerr << "spectral-kernel: cannot read '" << input_file << "'\n";
    return 1;
  }

  SessionGuard session;
  int status = spk_session_parse(session_text.c_str(), &session.s);
  if (status != SPK_OK) {
    std::cerr << "spectral-kernel: " << spk_last_error() << "\n";
    return status;
  }

  char* text = nullptr;
  if (bc->parsed())
    status = spk_bc_ideal(session.s, fmt, &text);
  else if (reduce->parsed())
    status = spk_reduce(session.s, target_expr.c_str(), fmt, &text);
  else if (member->parsed())
    status = spk_member(session.s, poly_expr.c_str(), fmt, &text);
  else
    status = spk_verify(session.s, fmt, &text);
  return emit(status, text);
}
