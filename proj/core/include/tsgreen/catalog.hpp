#pragma once

#include <string>
#include <vector>

#include "tsgreen/primordial.hpp"

namespace tsgreen {

// One "<group-spec> <field>" pair per line; '#' starts a comment; blank lines
// are skipped. Errors name the offending line.
std::vector<CatalogEntry> parse_catalog(const std::string& text);
std::vector<CatalogEntry> load_catalog(const std::string& path);

// The shipped verification catalog: cyclic groups of order 1..20 plus
// {C2xC2, C2xC4, D4, Q8, D5, D7, S3, S4, A4, C7:C3@2, C13:C4@5}, each over
// GF(2), GF(4), GF(3) and GF(9).
std::vector<CatalogEntry> default_catalog();

}  // namespace tsgreen
