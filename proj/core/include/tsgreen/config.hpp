#pragma once

#include <cstdint>
#include <string>

namespace tsgreen {

struct RunConfig {
  int order_cap = 200;
  int dim_cap = 256;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string format = "json";  // json | csv | pretty
  std::string catalog_path;
};

}  // namespace tsgreen
