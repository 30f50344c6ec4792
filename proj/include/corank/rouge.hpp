#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace corank {

struct RougeScore {
    std::size_t n = 1;
    double recall = 0.0;
    double precision = 0.0;
    double f1 = 0.0;
};

/// Text normalization applied before n-gram counting. The defaults leave
/// words unstemmed and keep stopwords.
struct RougeOptions {
    bool stem = false;
    bool remove_stopwords = false;
};

using NgramCounts = std::map<std::vector<std::string>, std::size_t>;

/// Contiguous n-token windows with multiplicity. Throws std::invalid_argument
/// when n is 0.
NgramCounts ngrams(const std::vector<std::string>& tokens, std::size_t n);

/// Clipped n-gram overlap; zero denominators give zero scores.
RougeScore rouge_n(const std::vector<std::string>& candidate, const std::vector<std::string>& reference,
                   std::size_t n);

std::vector<std::string> rouge_tokens(std::string_view text, const RougeOptions& options = {});

RougeScore rouge_n(std::string_view candidate, std::string_view reference, std::size_t n,
                   const RougeOptions& options = {});

} // namespace corank
