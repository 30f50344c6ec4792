#pragma once

#include <string>
#include <string_view>

namespace corank {

/// Porter (1980) suffix-stripping stemmer.
///
/// Words of length <= 2 and words containing anything other than lowercase
/// ASCII letters are returned unchanged.
std::string porter_stem(std::string_view word);

} // namespace corank
