#include "config.hpp"

#include <cstdlib>
#include <fstream>
#include <limits>

namespace alcovekit::cli {

Config Config::unbounded() const {
  Config c = *this;
  c.max_length = std::numeric_limits<int>::max();
  c.max_cas = std::numeric_limits<int>::max();
  c.max_alcoves = std::numeric_limits<std::uint64_t>::max();
  c.max_kmax = std::numeric_limits<std::size_t>::max();
  c.max_direct_k = std::numeric_limits<std::size_t>::max();
  c.subset_ceiling = std::numeric_limits<std::uint64_t>::max();
  c.partition_ceiling = std::numeric_limits<std::uint64_t>::max();
  c.max_ideal_rank = std::numeric_limits<int>::max();
  c.wedge_max_dim = 64;
  c.wedge_max_rows = std::numeric_limits<std::uint64_t>::max();
  return c;
}

nlohmann::json Config::to_json() const {
  return {{"max_length", max_length},
          {"max_cas", max_cas},
          {"max_alcoves", max_alcoves},
          {"max_kmax", max_kmax},
          {"max_direct_k", max_direct_k},
          {"subset_ceiling", subset_ceiling},
          {"partition_ceiling", partition_ceiling},
          {"max_ideal_rank", max_ideal_rank},
          {"wedge_max_dim", wedge_max_dim},
          {"wedge_max_rows", wedge_max_rows}};
}

Config Config::from_json(const nlohmann::json& j) {
  Config c;
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "max_length") c.max_length = value.get<int>();
    else if (key == "max_cas") c.max_cas = value.get<int>();
    else if (key == "max_alcoves") c.max_alcoves = value.get<std::uint64_t>();
    else if (key == "max_kmax") c.max_kmax = value.get<std::size_t>();
    else if (key == "max_direct_k") c.max_direct_k = value.get<std::size_t>();
    else if (key == "subset_ceiling") c.subset_ceiling = value.get<std::uint64_t>();
    else if (key == "partition_ceiling") c.partition_ceiling = value.get<std::uint64_t>();
    else if (key == "max_ideal_rank") c.max_ideal_rank = value.get<int>();
    else if (key == "wedge_max_dim") c.wedge_max_dim = value.get<int>();
    else if (key == "wedge_max_rows") c.wedge_max_rows = value.get<std::uint64_t>();
    else throw std::invalid_argument("unknown config key: " + key);
  }
  return c;
}

Config Config::from_environment() {
  const char* path = std::getenv("ALCOVEKIT_CONFIG");
  if (!path || !*path) return {};
  std::ifstream in(path);
  if (!in) throw std::invalid_argument(std::string("cannot read config file ") + path);
  return from_json(nlohmann::json::parse(in));
}

}  // namespace alcovekit::cli
