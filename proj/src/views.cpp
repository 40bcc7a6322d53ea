#include "elp/views.hpp"

namespace elp {

std::vector<TotalView> sorted_views(std::vector<TotalView> views) {
  for (auto& v : views) v = canonical(std::move(v));
  std::sort(views.begin(), views.end());
  views.erase(std::unique(views.begin(), views.end()), views.end());
  return views;
}

}  // namespace elp
