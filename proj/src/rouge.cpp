#include "corank/rouge.hpp"

#include "corank/preprocess.hpp"

#include <algorithm>
#include <stdexcept>

namespace corank {

NgramCounts ngrams(const std::vector<std::string>& tokens, std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("n-gram order must be at least 1");
    }
    NgramCounts counts;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
        ++counts[std::vector<std::string>(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                                          tokens.begin() + static_cast<std::ptrdiff_t>(i + n))];
    }
    return counts;
}

namespace {

std::size_t total(const NgramCounts& c) {
    std::size_t sum = 0;
    for (const auto& [gram, count] : c) {
        sum += count;
    }
    return sum;
}

} // namespace

RougeScore rouge_n(const std::vector<std::string>& candidate, const std::vector<std::string>& reference,
                   std::size_t n) {
    const NgramCounts cand = ngrams(candidate, n);
    const NgramCounts ref = ngrams(reference, n);
    std::size_t overlap = 0;
    for (const auto& [gram, count] : cand) {
        if (const auto it = ref.find(gram); it != ref.end()) {
            overlap += std::min(count, it->second);
        }
    }
    RougeScore s;
    s.n = n;
    const std::size_t ref_total = total(ref);
    const std::size_t cand_total = total(cand);
    s.recall = ref_total == 0 ? 0.0 : static_cast<double>(overlap) / static_cast<double>(ref_total);
    s.precision = cand_total == 0 ? 0.0 : static_cast<double>(overlap) / static_cast<double>(cand_total);
    s.f1 = s.recall + s.precision > 0.0 ? 2.0 * s.recall * s.precision / (s.recall + s.precision) : 0.0;
    return s;
}

std::vector<std::string> rouge_tokens(std::string_view text, const RougeOptions& options) {
    return normalize_tokens(text, PreprocessOptions{options.remove_stopwords, options.stem});
}

RougeScore rouge_n(std::string_view candidate, std::string_view reference, std::size_t n,
                   const RougeOptions& options) {
    return rouge_n(rouge_tokens(candidate, options), rouge_tokens(reference, options), n);
}

} // namespace corank
