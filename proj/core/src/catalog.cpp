#include "tsgreen/catalog.hpp"

#include <fstream>
#include <sstream>

#include "tsgreen/errors.hpp"

namespace tsgreen {

std::vector<CatalogEntry> parse_catalog(const std::string& text) {
  std::vector<CatalogEntry> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string group, field, extra;
    if (!(ls >> group)) continue;  // blank or comment-only
    if (!(ls >> field) || (ls >> extra))
      throw BadInput("catalog line " + std::to_string(lineno) +
                     ": expected '<group-spec> <field>'");
    out.push_back({group, field});
  }
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open catalog file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str());
}

std::vector<CatalogEntry> default_catalog() {
  std::vector<std::string> groups;
  for (int n = 1; n <= 20; ++n) groups.push_back("C" + std::to_string(n));
  for (const char* g : {"C2xC2", "C2xC4", "D4", "Q8", "D5", "D7", "S3", "S4", "A4",
                        "C7:C3@2", "C13:C4@5"})
    groups.push_back(g);
  std::vector<CatalogEntry> out;
  for (const auto& g : groups)
    for (const char* f : {"GF(2)", "GF(4)", "GF(3)", "GF(9)"}) out.push_back({g, f});
  return out;
}

}  // namespace tsgreen
