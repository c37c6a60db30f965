#include "permstruct/group_io.hpp"

#include <fstream>
#include <sstream>

#include "permstruct/errors.hpp"

namespace permstruct {

namespace {

std::string strip(const std::string &line) {
  std::size_t a = line.find_first_not_of(" \t\r\n");
  if (a == std::string::npos)
    return "";
  std::size_t b = line.find_last_not_of(" \t\r\n");
  return line.substr(a, b - a + 1);
}

} // namespace

PermGroup read_group(std::istream &in) {
  std::string line;
  std::uint32_t degree = 0;
  bool have_degree = false;
  std::vector<Perm> gens;
  while (std::getline(in, line)) {
    std::string s = strip(line);
    if (s.empty() || s[0] == '#')
      continue;
    if (!have_degree) {
      std::istringstream hdr(s);
      std::string word;
      std::uint64_t n = 0;
      if (!(hdr >> word >> n) || word != "degree" || n == 0 || n > 1u << 24)
        throw ParseError("group file: expected \"degree <n>\", got \"" + s +
                         "\"");
      degree = static_cast<std::uint32_t>(n);
      have_degree = true;
      continue;
    }
    gens.push_back(parse_permutation(s, degree));
  }
  if (!have_degree)
    throw ParseError("group file: missing degree header");
  return PermGroup(degree, std::move(gens));
}

PermGroup read_group_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("group file: cannot open " + path);
  return read_group(in);
}

void write_group(std::ostream &out, const PermGroup &g) {
  out << "degree " << g.degree() << "\n";
  for (const Perm &p : g.generators())
    out << p.cycle_string() << "\n";
}

void write_group_file(const std::string &path, const PermGroup &g) {
  std::ofstream out(path);
  if (!out)
    throw Error("group file: cannot write " + path);
  write_group(out, g);
}

} // namespace permstruct
