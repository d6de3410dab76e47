#include "zernike/coeff_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace zernike {

namespace {

constexpr std::string_view kCoeffHeader = "# zernike-coeffs v1 N=";
constexpr std::string_view kBoundaryHeader = "# fourier-boundary v1";

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  // tolerate CRLF input
  for (auto& l : lines) {
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
  }
  return lines;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t end = line.find('\t', start);
    if (end == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, end - start));
    start = end + 1;
  }
}

int parse_int(std::string_view s, const char* what) {
  std::string buf(s);
  char* end = nullptr;
  const long v = std::strtol(buf.c_str(), &end, 10);
  if (buf.empty() || end != buf.c_str() + buf.size()) {
    throw parse_error(std::string("bad integer field for ") + what + ": '" +
                      buf + "'");
  }
  return int(v);
}

double parse_real(std::string_view s, const char* what) {
  std::string buf(s);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size()) {
    throw parse_error(std::string("bad real field for ") + what + ": '" + buf +
                      "'");
  }
  return v;
}

bool skippable(std::string_view line) {
  return line.empty() || line.front() == '#';
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  std::string s(buf);
  if (s.find_first_of(".einEIN") == std::string::npos) s += ".0";
  return s;
}

std::string serialize_coefficients(const CoefficientAggregate& alpha) {
  std::string out(kCoeffHeader);
  out += std::to_string(alpha.max_degree());
  out += '\n';
  for (const auto& [idx, v] : alpha.entries()) {
    out += std::to_string(idx.m);
    out += '\t';
    out += std::to_string(idx.n);
    out += '\t';
    out += format_double(v.real());
    out += '\t';
    out += format_double(v.imag());
    out += '\n';
  }
  return out;
}

CoefficientAggregate parse_coefficients(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || !lines[0].starts_with(kCoeffHeader)) {
    throw parse_error("missing '# zernike-coeffs v1 N=<degree>' header");
  }
  const int max_degree =
      parse_int(lines[0].substr(kCoeffHeader.size()), "header degree");
  if (max_degree < 0) throw parse_error("negative degree cap in header");
  CoefficientAggregate alpha(max_degree);
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (skippable(lines[i])) continue;
    const auto f = split_tabs(lines[i]);
    if (f.size() != 4) {
      throw parse_error("expected 'm<TAB>n<TAB>re<TAB>im' on line " +
                        std::to_string(i + 1));
    }
    const int m = parse_int(f[0], "m");
    const int n = parse_int(f[1], "n");
    const ZernikeIndex idx{n, m};
    if (!idx.valid() || n > max_degree) {
      throw parse_error("invalid or out-of-range index (m=" +
                        std::to_string(m) + ", n=" + std::to_string(n) +
                        ") on line " + std::to_string(i + 1));
    }
    if (!seen.insert({m, n}).second) {
      throw parse_error("duplicate index (m=" + std::to_string(m) +
                        ", n=" + std::to_string(n) + ") on line " +
                        std::to_string(i + 1));
    }
    alpha.set(idx, {parse_real(f[2], "re"), parse_real(f[3], "im")});
  }
  return alpha;
}

std::string serialize_boundary(const FourierBoundary& psi) {
  std::string out(kBoundaryHeader);
  out += '\n';
  for (const auto& [m, v] : psi.coeffs) {
    out += std::to_string(m);
    out += '\t';
    out += format_double(v.real());
    out += '\t';
    out += format_double(v.imag());
    out += '\n';
  }
  return out;
}

FourierBoundary parse_boundary(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0] != kBoundaryHeader) {
    throw parse_error("missing '# fourier-boundary v1' header");
  }
  FourierBoundary psi;
  std::set<int> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (skippable(lines[i])) continue;
    const auto f = split_tabs(lines[i]);
    if (f.size() != 3) {
      throw parse_error("expected 'm<TAB>re<TAB>im' on line " +
                        std::to_string(i + 1));
    }
    const int m = parse_int(f[0], "m");
    if (!seen.insert(m).second) {
      throw parse_error("duplicate order m=" + std::to_string(m) +
                        " on line " + std::to_string(i + 1));
    }
    const Complex v{parse_real(f[1], "re"), parse_real(f[2], "im")};
    if (v != Complex{0.0, 0.0}) psi.coeffs[m] = v;
  }
  return psi;
}

CoefficientAggregate load_coefficients(const std::filesystem::path& path) {
  return parse_coefficients(read_file(path));
}

void save_coefficients(const std::filesystem::path& path,
                       const CoefficientAggregate& alpha) {
  write_file(path, serialize_coefficients(alpha));
}

FourierBoundary load_boundary(const std::filesystem::path& path) {
  return parse_boundary(read_file(path));
}

void save_boundary(const std::filesystem::path& path,
                   const FourierBoundary& psi) {
  write_file(path, serialize_boundary(psi));
}

}  // namespace zernike
