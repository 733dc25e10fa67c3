#pragma once

#include <span>
#include <string_view>

namespace blockkit {

// Bundled name pools for the synthetic generators. Uppercase, UTF-8; the
// surname pool includes umlauts so the text pipeline sees multi-byte input.
std::span<const std::string_view> forename_pool();
std::span<const std::string_view> surname_pool();
std::span<const std::string_view> city_pool();

}  // namespace blockkit
