#include "covsys/system_io.hpp"

#include <cctype>
#include <charconv>
#include <optional>

#include "covsys/error.hpp"
#include "covsys/field.hpp"

namespace covsys {

namespace {

std::string_view strip_comment(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  return line;
}

bool is_blank(std::string_view s) {
  for (char c : s) {
    if (c != ' ' && c != '\t') return false;
  }
  return true;
}

std::size_t first_nonblank(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  return i;
}

Field parse_header(std::string_view line, std::size_t line_no) {
  std::size_t pos = first_nonblank(line);
  if (pos >= line.size() || line[pos] != 'q') throw ParseError(line_no, pos + 1, "expected header 'q <prime>'");
  ++pos;
  if (pos >= line.size() || (line[pos] != ' ' && line[pos] != '\t')) {
    throw ParseError(line_no, pos + 1, "expected whitespace after 'q'");
  }
  pos += first_nonblank(line.substr(pos));
  const std::size_t start = pos;
  std::uint64_t q = 0;
  auto [end, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), q);
  if (ec != std::errc{} || end == line.data() + pos) throw ParseError(line_no, start + 1, "expected field order");
  pos = static_cast<std::size_t>(end - line.data());
  pos += first_nonblank(line.substr(pos));
  if (pos < line.size()) throw ParseError(line_no, pos + 1, "unexpected text after field order");
  if (!is_prime(q)) throw ParseError(line_no, start + 1, "text format supports prime q only");
  if (q > 65521) throw ParseError(line_no, start + 1, "field order too large");
  return Field::prime(static_cast<std::uint32_t>(q));
}

// Finds the keyword `mod` as a separate token.
std::optional<std::size_t> find_mod(std::string_view line) {
  for (std::size_t i = 0; i + 3 <= line.size(); ++i) {
    if (line.substr(i, 3) != "mod") continue;
    const bool left = i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t';
    const bool right = i + 3 == line.size() || line[i + 3] == ' ' || line[i + 3] == '\t';
    if (left && right) return i;
  }
  return std::nullopt;
}

}  // namespace

CongruenceSystem parse_system(std::string_view text) {
  std::optional<Field> field;
  std::optional<CongruenceSystem> system;
  std::size_t line_no = 0;
  while (!text.empty() || line_no == 0) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    const std::string_view line = strip_comment(raw);
    if (is_blank(line)) continue;
    if (!field) {
      field = parse_header(line, line_no);
      system.emplace(*field);
      continue;
    }
    const auto mod = find_mod(line);
    if (!mod) throw ParseError(line_no, first_nonblank(line) + 1, "expected '<residue> mod <modulus>'");
    Poly residue = parse_poly(*field, line.substr(0, *mod), line_no, 0);
    Poly modulus = parse_poly(*field, line.substr(*mod + 3), line_no, *mod + 3);
    if (modulus.is_constant()) {
      throw ParseError(line_no, *mod + 3 + first_nonblank(line.substr(*mod + 3)) + 1, "modulus must be nonconstant");
    }
    system->add(Congruence(modulus, residue));
  }
  if (!system) throw ParseError(line_no, 1, "missing header 'q <prime>'");
  return std::move(*system);
}

std::string format_system(const CongruenceSystem& system) {
  const Field& field = system.field();
  if (!field.is_prime_field()) throw InvalidArgument("text format supports prime q only");
  std::string out = "q " + std::to_string(field.order()) + "\n";
  for (const auto& c : system) out += c.residue().to_string() + " mod " + c.modulus().to_string() + "\n";
  return out;
}

}  // namespace covsys
