#include "cubetess/tess_io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <vector>

#include "cubetess/error.hpp"
#include "cubetess/validator.hpp"

namespace cubetess {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(std::move(w));
    if (line.tokens.empty() || line.tokens.front().starts_with('#')) continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void syntax_error(std::size_t line, const std::string& what) {
  throw Error(Errc::Syntax, "line " + std::to_string(line) + ": " + what);
}

Rational rational_at(const Line& line, std::size_t i) {
  try {
    return Rational::parse(line.tokens[i]);
  } catch (const Error& e) {
    throw Error(e.code(), "line " + std::to_string(line.number) + ": bad value '" + line.tokens[i] + "'");
  }
}

long long count_field(const Line& line, std::string_view key) {
  if (line.tokens.size() != 2 || line.tokens[0] != key) {
    syntax_error(line.number, "expected '" + std::string(key) + " <int>'");
  }
  Rational v = rational_at(line, 1);
  if (!v.is_integer() || v.sign() < 0 || v.num() > 1'000'000'000) {
    syntax_error(line.number, std::string(key) + " must be a non-negative integer");
  }
  return static_cast<long long>(v.num());
}

}  // namespace

Tessellation parse(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw Error(Errc::BadHeader, "empty input");
  const auto& head = lines.front();
  if (head.tokens.size() != 2 || head.tokens[0] + " " + head.tokens[1] != kTessMagic) {
    throw Error(Errc::BadHeader, "line " + std::to_string(head.number) + ": expected '" +
                                     std::string(kTessMagic) + "'");
  }
  if (lines.size() < 4) throw Error(Errc::Syntax, "truncated header");

  const long long d = count_field(lines[1], "d");
  const Line& target = lines[2];
  if (target.tokens.size() != 2 || target.tokens[0] != "target") {
    syntax_error(target.number, "expected 'target <rational>'");
  }
  Rational z = rational_at(target, 1);
  const long long n = count_field(lines[3], "cubes");
  if (d < 2) syntax_error(lines[1].number, "d must be >= 2");
  if (static_cast<long long>(lines.size()) - 4 != n) {
    throw Error(Errc::Syntax, "expected " + std::to_string(n) + " cube lines, found " +
                                  std::to_string(lines.size() - 4));
  }

  std::vector<Cube> cubes;
  cubes.reserve(static_cast<std::size_t>(n));
  for (std::size_t i = 4; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (static_cast<long long>(line.tokens.size()) != d + 1) {
      syntax_error(line.number, "expected " + std::to_string(d + 1) + " values");
    }
    Cube c;
    for (long long k = 0; k < d; ++k) c.corner.push_back(rational_at(line, static_cast<std::size_t>(k)));
    c.side = rational_at(line, static_cast<std::size_t>(d));
    cubes.push_back(std::move(c));
  }
  try {
    return Tessellation(static_cast<int>(d), std::move(z), std::move(cubes));
  } catch (const Error& e) {
    throw Error(Errc::Syntax, e.what());
  }
}

std::string serialize(const Tessellation& t) {
  std::string out;
  out += kTessMagic;
  out += "\nd " + std::to_string(t.dim());
  out += "\ntarget " + t.target().to_string();
  out += "\ncubes " + std::to_string(t.size()) + "\n";
  for (const Cube& c : t.cubes()) {
    for (const Rational& x : c.corner) out += x.to_string() + " ";
    out += c.side.to_string() + "\n";
  }
  return out;
}

Tessellation read_tess_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidInput, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void write_tess_file(const std::filesystem::path& path, const Tessellation& t) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::InvalidInput, "cannot write " + path.string());
  out << serialize(t);
}

namespace {

std::string decimal(const Rational& r) {
  std::ostringstream os;
  os << std::setprecision(12) << r.to_double();
  return os.str();
}

// Grey ramp from light (smallest side) to dark (largest side).
std::string shade(std::size_t rank, std::size_t classes) {
  const int lo = 225, hi = 90;
  int v = classes <= 1 ? (lo + hi) / 2
                       : lo - static_cast<int>((lo - hi) * rank / (classes - 1));
  std::ostringstream os;
  os << "#" << std::hex << std::setfill('0') << std::setw(2) << v << std::setw(2) << v << std::setw(2) << v;
  return os.str();
}

}  // namespace

std::string render_svg(const Tessellation& t) {
  if (t.dim() != 2) throw Error(Errc::UnsupportedDimension, "SVG rendering needs d = 2");
  if (!validate(t).is_valid) throw Error(Errc::InvalidInput, "not a valid tessellation");

  std::map<Rational, std::size_t> rank;
  for (const Cube& c : t.cubes()) rank.emplace(c.side, 0);
  std::size_t next = 0;
  for (auto& [side, r] : rank) r = next++;

  const Rational& z = t.target();
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " << decimal(z) << " "
      << decimal(z) << "\" width=\"512\" height=\"512\">\n"
      << "<!-- n=" << t.size() << " z=" << z << "; decimal coordinates are display-only -->\n"
      << "<g stroke=\"#202020\" stroke-width=\"" << decimal(z / 256) << "\">\n";
  for (const Cube& c : t.cubes()) {
    // flip y so the origin sits at the bottom left
    const Rational y = z - c.corner[1] - c.side;
    svg << "<rect x=\"" << decimal(c.corner[0]) << "\" y=\"" << decimal(y) << "\" width=\""
        << decimal(c.side) << "\" height=\"" << decimal(c.side) << "\" fill=\""
        << shade(rank.at(c.side), rank.size()) << "\"/>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace cubetess
