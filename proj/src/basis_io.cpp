#include "wpoint/basis_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "wpoint/errors.hpp"

namespace wpoint {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    out.push_back({number, line});
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

long parse_count(const Line& line, std::string_view value, std::string_view what) {
  long v = 0;
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, v);
  if (ec != std::errc{} || ptr != end || v < 0) {
    throw ParseError(line.number, std::string(what) + " expects a nonnegative integer, got '" + std::string(value) + "'");
  }
  return v;
}

// Text after "<KEY> "; the key must match as a whole word.
std::string_view keyed_value(const Line& line, std::string_view key) {
  if (line.text.substr(0, key.size()) != key ||
      (line.text.size() > key.size() && line.text[key.size()] != ' ' && line.text[key.size()] != '\t')) {
    throw ParseError(line.number, "expected '" + std::string(key) + " ...', got '" + std::string(line.text) + "'");
  }
  return trim(line.text.substr(key.size()));
}

class Cursor {
 public:
  explicit Cursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

  const Line& next(std::string_view expecting) {
    if (pos_ >= lines_.size()) {
      const std::size_t last = lines_.empty() ? 0 : lines_.back().number;
      throw ParseError(last + 1, "unexpected end of input, expected " + std::string(expecting));
    }
    return lines_[pos_++];
  }
  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const { return lines_[pos_]; }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

}  // namespace

BasisFile parse_basis_file(std::string_view text) {
  Cursor cur(content_lines(text));

  const Line& magic = cur.next("QEXP header");
  if (keyed_value(magic, "QEXP") != "1") {
    throw ParseError(magic.number, "unsupported QEXP version '" + std::string(keyed_value(magic, "QEXP")) + "'");
  }

  BasisFile file;
  const Line& level = cur.next("LEVEL");
  file.level_label = std::string(keyed_value(level, "LEVEL"));
  if (file.level_label.empty()) throw ParseError(level.number, "LEVEL label is empty");

  const Line& weight = cur.next("WEIGHT");
  file.weight = static_cast<int>(parse_count(weight, keyed_value(weight, "WEIGHT"), "WEIGHT"));
  const Line& prec = cur.next("PREC");
  file.prec = static_cast<std::size_t>(parse_count(prec, keyed_value(prec, "PREC"), "PREC"));
  const Line& forms = cur.next("FORMS");
  const auto count = static_cast<std::size_t>(parse_count(forms, keyed_value(forms, "FORMS"), "FORMS"));

  while (!cur.done()) {
    const Line& head = cur.next("FORM");
    BasisFile::Form form;
    form.label = std::string(keyed_value(head, "FORM"));
    if (form.label.empty()) throw ParseError(head.number, "FORM label is empty");
    if (cur.done()) throw ParseError(head.number + 1, "missing coefficient line for form " + form.label);
    const Line& body = cur.next("coefficients");
    for (auto tok : tokens(body.text)) {
      auto r = parse_rational(tok);
      if (!r) throw ParseError(body.number, "malformed rational '" + std::string(tok) + "'");
      form.coeffs.push_back(std::move(*r));
    }
    if (form.coeffs.size() != file.prec) {
      throw ValidationError("line " + std::to_string(body.number) + ": form " + form.label + " has " +
                            std::to_string(form.coeffs.size()) + " coefficients, PREC is " + std::to_string(file.prec));
    }
    file.forms.push_back(std::move(form));
  }
  if (file.forms.size() != count) {
    throw ValidationError("FORMS declares " + std::to_string(count) + " forms, file contains " +
                          std::to_string(file.forms.size()));
  }
  return file;
}

std::string serialize_basis_file(const BasisFile& file) {
  std::ostringstream os;
  os << "QEXP 1\n";
  os << "LEVEL " << file.level_label << '\n';
  os << "WEIGHT " << file.weight << '\n';
  os << "PREC " << file.prec << '\n';
  os << "FORMS " << file.forms.size() << '\n';
  for (const auto& f : file.forms) {
    os << "FORM " << f.label << '\n';
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
      if (i > 0) os << ' ';
      os << to_string(f.coeffs[i]);
    }
    os << '\n';
  }
  return os.str();
}

CuspBasis to_cusp_basis(const BasisFile& file) {
  if (file.weight != 2) {
    throw ValidationError("basis file has weight " + std::to_string(file.weight) + "; a basis of S_2 is required");
  }
  CuspBasis basis;
  basis.level_label = file.level_label;
  for (const auto& f : file.forms) {
    basis.forms.push_back({f.label, QSeries(f.coeffs), file.weight, file.level_label, 1});
  }
  basis.validate();
  return basis;
}

BasisFile to_basis_file(const CuspBasis& basis) {
  BasisFile file;
  file.level_label = basis.level_label;
  file.weight = basis.forms.empty() ? 2 : basis.forms.front().weight;
  file.prec = basis.prec();
  for (const auto& f : basis.forms) {
    auto c = f.series.coeffs();
    file.forms.push_back({f.label, {c.begin(), c.end()}});
  }
  return file;
}

CuspBasis parse_basis(std::string_view text) { return to_cusp_basis(parse_basis_file(text)); }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

CuspBasis load_basis(const std::filesystem::path& path) { return parse_basis(read_text_file(path)); }

SurfaceSignature parse_signature(std::string_view text) {
  SurfaceSignature sig;
  bool have_genus = false;
  bool have_cusps = false;
  for (const auto& line : content_lines(text)) {
    const auto tok = tokens(line.text);
    if (tok.front() == "GENUS" && tok.size() == 2) {
      sig.genus = parse_count(line, tok[1], "GENUS");
      have_genus = true;
    } else if (tok.front() == "CUSPS" && tok.size() == 2) {
      sig.cusp_count = parse_count(line, tok[1], "CUSPS");
      have_cusps = true;
    } else if (tok.front() == "ELLIPTIC") {
      for (std::size_t i = 1; i < tok.size(); ++i) sig.elliptic_orders.push_back(parse_count(line, tok[i], "ELLIPTIC"));
    } else {
      throw ParseError(line.number, "unknown signature line '" + std::string(line.text) + "'");
    }
  }
  if (!have_genus || !have_cusps) throw ParseError(0, "signature needs GENUS and CUSPS lines");
  sig.validate();
  return sig;
}

}  // namespace wpoint
