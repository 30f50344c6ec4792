#include "corank/porter_stemmer.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace corank {

namespace {

struct Rule {
    std::string_view suffix;
    std::string_view replacement;
};

class Stemmer {
public:
    explicit Stemmer(std::string_view word) : w_(word) {}

    std::string run() && {
        step1a();
        step1b();
        step1c();
        step2();
        step3();
        step4();
        step5a();
        step5b();
        return std::move(w_);
    }

private:
    std::string w_;

    bool consonant(std::size_t i) const {
        switch (w_[i]) {
        case 'a':
        case 'e':
        case 'i':
        case 'o':
        case 'u':
            return false;
        case 'y':
            return i == 0 || !consonant(i - 1);
        default:
            return true;
        }
    }

    // Number of VC sequences in w_[0, len).
    int measure(std::size_t len) const {
        int m = 0;
        std::size_t i = 0;
        while (i < len && consonant(i)) {
            ++i;
        }
        while (i < len) {
            while (i < len && !consonant(i)) {
                ++i;
            }
            if (i >= len) {
                break;
            }
            while (i < len && consonant(i)) {
                ++i;
            }
            ++m;
        }
        return m;
    }

    bool has_vowel(std::size_t len) const {
        for (std::size_t i = 0; i < len; ++i) {
            if (!consonant(i)) {
                return true;
            }
        }
        return false;
    }

    bool double_consonant(std::size_t len) const {
        return len >= 2 && w_[len - 1] == w_[len - 2] && consonant(len - 1);
    }

    // *o: stem ends cvc, the final c not w, x or y.
    bool cvc(std::size_t len) const {
        if (len < 3 || !consonant(len - 1) || consonant(len - 2) || !consonant(len - 3)) {
            return false;
        }
        const char c = w_[len - 1];
        return c != 'w' && c != 'x' && c != 'y';
    }

    bool ends(std::string_view s) const {
        return w_.size() >= s.size() && std::string_view(w_).substr(w_.size() - s.size()) == s;
    }

    std::size_t stem_len(std::string_view suffix) const { return w_.size() - suffix.size(); }

    void replace(std::string_view suffix, std::string_view with) {
        w_.resize(stem_len(suffix));
        w_.append(with);
    }

    // Applies the rule with the longest matching suffix if the stem has
    // measure > min_measure; no other rule is tried once one matches.
    template <std::size_t N>
    void apply_longest(const std::array<Rule, N>& rules, int min_measure) {
        const Rule* best = nullptr;
        for (const Rule& r : rules) {
            if (ends(r.suffix) && (best == nullptr || r.suffix.size() > best->suffix.size())) {
                best = &r;
            }
        }
        if (best != nullptr && measure(stem_len(best->suffix)) > min_measure) {
            replace(best->suffix, best->replacement);
        }
    }

    void step1a() {
        if (ends("sses")) {
            replace("sses", "ss");
        } else if (ends("ies")) {
            replace("ies", "i");
        } else if (ends("ss")) {
            // unchanged
        } else if (ends("s")) {
            replace("s", "");
        }
    }

    void step1b() {
        if (ends("eed")) {
            if (measure(stem_len("eed")) > 0) {
                replace("eed", "ee");
            }
            return;
        }
        bool stripped = false;
        for (std::string_view suffix : {std::string_view("ed"), std::string_view("ing")}) {
            if (ends(suffix) && has_vowel(stem_len(suffix))) {
                replace(suffix, "");
                stripped = true;
                break;
            }
        }
        if (!stripped) {
            return;
        }
        if (ends("at") || ends("bl") || ends("iz")) {
            w_.push_back('e');
        } else if (double_consonant(w_.size())) {
            const char last = w_.back();
            if (last != 'l' && last != 's' && last != 'z') {
                w_.pop_back();
            }
        } else if (measure(w_.size()) == 1 && cvc(w_.size())) {
            w_.push_back('e');
        }
    }

    void step1c() {
        if (ends("y") && has_vowel(stem_len("y"))) {
            w_.back() = 'i';
        }
    }

    void step2() {
        static constexpr std::array<Rule, 20> rules{{
            {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},  {"anci", "ance"},
            {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},    {"entli", "ent"},
            {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
            {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
            {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},  {"biliti", "ble"},
        }};
        apply_longest(rules, 0);
    }

    void step3() {
        static constexpr std::array<Rule, 7> rules{{
            {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
            {"ical", "ic"},  {"ful", ""},   {"ness", ""},
        }};
        apply_longest(rules, 0);
    }

    void step4() {
        static constexpr std::array<std::string_view, 19> suffixes{
            "al",  "ance", "ence", "er",  "ic",  "able", "ible", "ant", "ement", "ment",
            "ent", "ion",  "ou",   "ism", "ate", "iti",  "ous",  "ive", "ize",
        };
        std::string_view best;
        for (std::string_view s : suffixes) {
            if (ends(s) && s.size() > best.size()) {
                best = s;
            }
        }
        if (best.empty()) {
            return;
        }
        const std::size_t len = stem_len(best);
        if (measure(len) <= 1) {
            return;
        }
        if (best == "ion" && (len == 0 || (w_[len - 1] != 's' && w_[len - 1] != 't'))) {
            return;
        }
        w_.resize(len);
    }

    void step5a() {
        if (!ends("e")) {
            return;
        }
        const std::size_t len = stem_len("e");
        const int m = measure(len);
        if (m > 1 || (m == 1 && !cvc(len))) {
            w_.resize(len);
        }
    }

    void step5b() {
        if (measure(w_.size()) > 1 && double_consonant(w_.size()) && w_.back() == 'l') {
            w_.pop_back();
        }
    }
};

} // namespace

std::string porter_stem(std::string_view word) {
    if (word.size() <= 2 ||
        !std::all_of(word.begin(), word.end(), [](char c) { return c >= 'a' && c <= 'z'; })) {
        return std::string(word);
    }
    return Stemmer(word).run();
}

} // namespace corank
