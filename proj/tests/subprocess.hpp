#ifndef QUADELL_TESTS_SUBPROCESS_HPP
#define QUADELL_TESTS_SUBPROCESS_HPP

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace quadell::testutil {

struct RunResult {
  int exit_code;
  std::string out;
};

/// Runs a shell command, capturing stdout (stderr goes to the test log).
inline RunResult run_command(const std::string& cmd) {
  std::string full = cmd + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void spit(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

/* Minimal XML well-formedness scan: declaration, balanced tags, quoted
 * attributes. Enough to reject truncated or mismatched output. */
inline bool xml_well_formed(const std::string& text) {
  if (text.rfind("<?xml", 0) != 0) return false;
  std::vector<std::string> stack;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '<') {
      ++i;
      continue;
    }
    std::size_t close = text.find('>', i);
    if (close == std::string::npos) return false;
    std::string tag = text.substr(i + 1, close - i - 1);
    i = close + 1;
    if (tag.empty()) return false;
    if (tag[0] == '?' || tag[0] == '!') continue;
    if (tag[0] == '/') {
      std::string name = tag.substr(1);
      if (stack.empty() || stack.back() != name) return false;
      stack.pop_back();
      continue;
    }
    bool self_closing = tag.back() == '/';
    std::string body = self_closing ? tag.substr(0, tag.size() - 1) : tag;
    std::string name = body.substr(0, body.find_first_of(" \t\n"));
    if (name.empty()) return false;
    // attribute quotes must pair up
    int quotes = 0;
    for (char c : body)
      if (c == '"') ++quotes;
    if (quotes % 2 != 0) return false;
    if (!self_closing) stack.push_back(name);
  }
  return stack.empty();
}

}  // namespace quadell::testutil

#endif
