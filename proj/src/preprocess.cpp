#include "corank/preprocess.hpp"

#include "corank/porter_stemmer.hpp"
#include "corank/resources.hpp"

#include <algorithm>
#include <cctype>

namespace corank {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_word_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

bool is_terminator(char c) {
    return c == '.' || c == '?' || c == '!';
}

bool is_closer(char c) {
    return c == '"' || c == '\'' || c == ')' || c == ']' || c == '}';
}

char lower(char c) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) {
        s.remove_prefix(1);
    }
    while (!s.empty() && is_space(s.back())) {
        s.remove_suffix(1);
    }
    return s;
}

// The whitespace-delimited word ending right before text[period], with
// leading quotes or brackets dropped, lowercased.
std::string word_before(std::string_view text, std::size_t period) {
    std::size_t begin = period;
    while (begin > 0 && !is_space(text[begin - 1])) {
        --begin;
    }
    while (begin < period && !is_word_char(text[begin])) {
        ++begin;
    }
    std::string word;
    for (std::size_t i = begin; i < period; ++i) {
        word.push_back(lower(text[i]));
    }
    return word;
}

bool suppresses_split(const std::string& word, const WordList& abbreviations) {
    if (word.size() == 1 && std::isalpha(static_cast<unsigned char>(word[0]))) {
        return true;
    }
    return abbreviations.count(word) > 0;
}

bool blank_line_at(std::string_view text, std::size_t i) {
    // text[i] is '\n'; look for another newline before the next non-space.
    for (std::size_t j = i + 1; j < text.size() && is_space(text[j]); ++j) {
        if (text[j] == '\n') {
            return true;
        }
    }
    return false;
}

} // namespace

WordList parse_word_list(std::string_view text) {
    WordList words;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = std::min(text.find('\n', pos), text.size());
        const std::string_view line = trim(text.substr(pos, nl - pos));
        if (!line.empty() && line.front() != '#') {
            words.emplace(line);
        }
        pos = nl + 1;
    }
    return words;
}

const WordList& default_stopwords() {
    static const WordList words = parse_word_list(resources::stopwords_en());
    return words;
}

const WordList& default_abbreviations() {
    static const WordList words = parse_word_list(resources::abbreviations_en());
    return words;
}

std::vector<std::string> segment_sentences(std::string_view text, const WordList& abbreviations) {
    std::vector<std::string> sentences;
    std::size_t start = 0;
    auto emit = [&](std::size_t end) {
        const std::string_view s = trim(text.substr(start, end - start));
        if (!s.empty()) {
            sentences.emplace_back(s);
        }
        start = end;
    };

    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n' && blank_line_at(text, i)) {
            emit(i);
            ++i;
            continue;
        }
        if (!is_terminator(c)) {
            ++i;
            continue;
        }
        std::size_t end = i;
        while (end < text.size() && is_terminator(text[end])) {
            ++end;
        }
        const bool lone_period = c == '.' && end - i == 1;
        while (end < text.size() && is_closer(text[end])) {
            ++end;
        }
        const bool at_boundary = end == text.size() || is_space(text[end]);
        if (at_boundary && !(lone_period && suppresses_split(word_before(text, i), abbreviations))) {
            emit(end);
        }
        i = end;
    }
    emit(text.size());
    return sentences;
}

std::vector<std::string> tokenize(std::string_view sentence) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : sentence) {
        if (is_word_char(c)) {
            current.push_back(lower(c));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) {
        tokens.push_back(std::move(current));
    }
    return tokens;
}

std::vector<std::string> remove_stopwords(std::vector<std::string> tokens, const WordList& stopwords) {
    std::erase_if(tokens, [&](const std::string& t) { return stopwords.count(t) > 0; });
    return tokens;
}

std::vector<std::string> normalize_tokens(std::string_view text, const PreprocessOptions& options) {
    auto tokens = tokenize(text);
    if (options.remove_stopwords) {
        tokens = remove_stopwords(std::move(tokens));
    }
    if (options.stem) {
        for (auto& t : tokens) {
            t = porter_stem(t);
        }
    }
    return tokens;
}

std::vector<SentenceRecord> preprocess_document(std::string_view text, const PreprocessOptions& options) {
    std::vector<SentenceRecord> records;
    for (auto& raw : segment_sentences(text)) {
        SentenceRecord rec;
        rec.index = records.size();
        rec.tokens = normalize_tokens(raw, options);
        rec.raw = std::move(raw);
        records.push_back(std::move(rec));
    }
    return records;
}

} // namespace corank
