#include "primegraph/search.hpp"

namespace primegraph {

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::none:
      return "none";
    case SearchStatus::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

}  // namespace primegraph
