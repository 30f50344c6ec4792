#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace corank {

/// One sentence of a document after normalization.
struct SentenceRecord {
    std::size_t index = 0;           ///< 0-based position in the document
    std::string raw;                 ///< sentence text as segmented
    std::vector<std::string> tokens; ///< lowercased, stopwords removed, stemmed
};

using WordList = std::unordered_set<std::string>;

/// One entry per line; blank lines and lines starting with '#' are skipped.
WordList parse_word_list(std::string_view text);

/// The bundled 179-word English stopword list.
const WordList& default_stopwords();
/// Abbreviations whose trailing period never ends a sentence.
const WordList& default_abbreviations();

/**
 * Splits @p text at '.', '?' and '!' followed by whitespace or end of input.
 *
 * Closing quotes and brackets directly after the terminator stay with the
 * sentence. A period does not split after a listed abbreviation or a single
 * letter. A blank line also ends a sentence, so unterminated headings do not
 * run into the next paragraph.
 */
std::vector<std::string> segment_sentences(std::string_view text,
                                           const WordList& abbreviations = default_abbreviations());

/// Maximal runs of ASCII letters and digits, lowercased.
std::vector<std::string> tokenize(std::string_view sentence);

std::vector<std::string> remove_stopwords(std::vector<std::string> tokens,
                                          const WordList& stopwords = default_stopwords());

struct PreprocessOptions {
    bool remove_stopwords = true;
    bool stem = true;
};

/// segment -> tokenize -> stopword removal -> Porter stemming.
/// Sentences left without tokens are kept.
std::vector<SentenceRecord> preprocess_document(std::string_view text,
                                                const PreprocessOptions& options = {});

/// Applies the token stages (tokenize, stopwords, stemming) to one string.
std::vector<std::string> normalize_tokens(std::string_view text, const PreprocessOptions& options);

} // namespace corank
