#pragma once

#include <string_view>

// Data files under data/ compiled into the library.
namespace corank::resources {

std::string_view stopwords_en();
std::string_view abbreviations_en();
std::string_view example_graph();

} // namespace corank::resources
