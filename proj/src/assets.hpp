#pragma once

#include <string_view>

// Text assets compiled into the library (see data/).
namespace berge::assets {

std::string_view lookup_k3_text();
std::string_view published_deltas_text();

}  // namespace berge::assets
