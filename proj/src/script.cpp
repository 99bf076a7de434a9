#include "sst/script.hpp"

#include <charconv>
#include <istream>
#include <ostream>

#include "sst/oracle.hpp"

namespace sst {

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

// Full isomorphism audits are quadratic in the window; keep them for small
// windows only.
constexpr std::size_t kIsomorphismLimit = 256;

}  // namespace

std::string decode_bytes(std::string_view literal) {
  std::string out;
  out.reserve(literal.size());
  for (std::size_t i = 0; i < literal.size(); ++i) {
    if (literal[i] != '\\') {
      out.push_back(literal[i]);
      continue;
    }
    if (i + 1 < literal.size() && literal[i + 1] == '\\') {
      out.push_back('\\');
      ++i;
      continue;
    }
    if (i + 3 < literal.size() && literal[i + 1] == 'x') {
      const int hi = hex_value(literal[i + 2]);
      const int lo = hex_value(literal[i + 3]);
      if (hi >= 0 && lo >= 0) {
        out.push_back(static_cast<char>(hi * 16 + lo));
        i += 3;
        continue;
      }
    }
    throw std::invalid_argument("bad escape at offset " + std::to_string(i));
  }
  return out;
}

std::string escape_bytes(std::string_view bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (char ch : bytes) {
    const auto c = static_cast<unsigned char>(ch);
    if (c == '\\') {
      out += "\\\\";
    } else if (c > ' ' && c < 0x7f) {
      out.push_back(ch);
    } else {
      out += "\\x";
      out.push_back(kDigits[c >> 4]);
      out.push_back(kDigits[c & 15]);
    }
  }
  return out;
}

void ScriptSession::error(std::ostream& out, std::string_view reason) {
  clean_ = false;
  out << "ERR " << reason << '\n';
}

void ScriptSession::report_violations(std::ostream& out, bool ok_line) {
  oracle::AuditOptions opts;
  opts.isomorphism = index_->capacity() <= kIsomorphismLimit;
  const auto violations = oracle::audit(*index_, opts);
  for (const auto& v : violations) out << "VIOLATION " << v << '\n';
  if (!violations.empty()) clean_ = false;
  if (violations.empty() && ok_line) out << "OK\n";
}

bool ScriptSession::execute(std::string_view line, std::ostream& out) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (line.empty() || line.front() == '#') return true;

  const std::size_t space = line.find(' ');
  const std::string_view cmd = line.substr(0, space);
  const std::string_view arg = space == std::string_view::npos ? std::string_view{} : line.substr(space + 1);

  if (cmd == "quit") return false;

  if (cmd == "window") {
    std::size_t capacity = 0;
    const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), capacity);
    if (arg.empty() || ec != std::errc{} || ptr != arg.data() + arg.size() || capacity == 0) {
      error(out, "window needs a positive integer capacity");
      return true;
    }
    index_ = std::make_unique<SlidingSuffixTree>(capacity);
    return true;
  }

  if (cmd != "feed" && cmd != "find" && cmd != "stats" && cmd != "audit") {
    error(out, "unknown command: " + std::string(cmd));
    return true;
  }
  if (!index_) {
    error(out, "no window; use 'window <N>' first");
    return true;
  }

  if (cmd == "stats") {
    const WindowStats s = index_->stats();
    out << "n=" << s.n << " start=" << s.start << " fill=" << s.fill << " b=" << s.buffer_len
        << " leaves=" << s.leaves << " internal=" << s.internal << '\n';
    return true;
  }
  if (cmd == "audit") {
    report_violations(out, true);
    return true;
  }

  std::string bytes;
  try {
    bytes = decode_bytes(arg);
  } catch (const std::invalid_argument& e) {
    error(out, e.what());
    return true;
  }

  if (cmd == "feed") {
    for (char c : bytes) {
      index_->shift(static_cast<unsigned char>(c));
      if (options_.paranoid) report_violations(out, false);
    }
    return true;
  }

  if (bytes.empty()) {
    error(out, "find needs a non-empty query");
    return true;
  }
  const QueryResult r = index_->find(bytes);
  const StreamPos offset = options_.relative ? index_->window().start() : 0;
  out << r.positions.size();
  for (StreamPos p : r.positions) out << ' ' << (p - offset);
  out << '\n';
  return true;
}

bool run_script(std::istream& in, std::ostream& out, ScriptOptions options) {
  ScriptSession session(options);
  std::string line;
  while (std::getline(in, line)) {
    if (!session.execute(line, out)) break;
  }
  return session.clean();
}

}  // namespace sst
