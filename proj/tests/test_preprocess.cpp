#include "corank/error.hpp"
#include "corank/preprocess.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace corank;
using Strings = std::vector<std::string>;

TEST(SegmentSentences, SplitsAtTerminators) {
    EXPECT_EQ(segment_sentences("A cat. A dog."), (Strings{"A cat.", "A dog."}));
    EXPECT_EQ(segment_sentences("Why? Because! Done"), (Strings{"Why?", "Because!", "Done"}));
    EXPECT_EQ(segment_sentences("Wait... what?! Yes."), (Strings{"Wait...", "what?!", "Yes."}));
}

TEST(SegmentSentences, EmptyInput) {
    EXPECT_TRUE(segment_sentences("").empty());
    EXPECT_TRUE(segment_sentences("  \n\t ").empty());
}

TEST(SegmentSentences, AbbreviationGuard) {
    EXPECT_EQ(segment_sentences("Dr. Smith left. He ran."), (Strings{"Dr. Smith left.", "He ran."}));
    EXPECT_EQ(segment_sentences("It hit the U.S. public radar. Then more."),
              (Strings{"It hit the U.S. public radar.", "Then more."}));
    EXPECT_EQ(segment_sentences("John F. Kennedy spoke. Crowds cheered."),
              (Strings{"John F. Kennedy spoke.", "Crowds cheered."}));
    EXPECT_EQ(segment_sentences("Fruit (e.g. apples) is good. Eat it."),
              (Strings{"Fruit (e.g. apples) is good.", "Eat it."}));
}

TEST(SegmentSentences, NoSplitInsideTokens) {
    EXPECT_EQ(segment_sentences("Pi is 3.14 roughly. Yes."), (Strings{"Pi is 3.14 roughly.", "Yes."}));
}

TEST(SegmentSentences, ClosingQuotesStayWithSentence) {
    EXPECT_EQ(segment_sentences("\"Stop,\" he said. \"Now.\" Then silence."),
              (Strings{"\"Stop,\" he said.", "\"Now.\"", "Then silence."}));
}

TEST(SegmentSentences, BlankLineEndsSentence) {
    EXPECT_EQ(segment_sentences("Heading without stop\n\nBody text. More.\nNext line"),
              (Strings{"Heading without stop", "Body text.", "More.", "Next line"}));
}

TEST(SegmentSentences, CoversAllNonWhitespace) {
    const std::string text = corank::read_file(corank::testing::data_path("news_document.txt"));
    std::string joined;
    for (const auto& s : segment_sentences(text)) {
        joined += s;
    }
    std::string a;
    std::string b;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            a.push_back(c);
        }
    }
    for (char c : joined) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            b.push_back(c);
        }
    }
    EXPECT_EQ(a, b);
}

TEST(Tokenize, AlphanumericRuns) {
    EXPECT_EQ(tokenize("The U.S. virus spread!"), (Strings{"the", "u", "s", "virus", "spread"}));
    EXPECT_TRUE(tokenize("").empty());
    EXPECT_EQ(tokenize("Cat cat CAT"), (Strings{"cat", "cat", "cat"}));
    EXPECT_EQ(tokenize("100,000 cases -- arthritis-like"), (Strings{"100", "000", "cases", "arthritis", "like"}));
}

TEST(RemoveStopwords, Examples) {
    EXPECT_EQ(remove_stopwords({"a", "virus", "the", "spread"}), (Strings{"virus", "spread"}));
    EXPECT_TRUE(remove_stopwords({}).empty());
    EXPECT_EQ(remove_stopwords({"virus"}), (Strings{"virus"}));
}

TEST(RemoveStopwords, BundledListHas179Entries) {
    EXPECT_EQ(default_stopwords().size(), 179u);
    EXPECT_TRUE(default_stopwords().count("an"));
    EXPECT_TRUE(default_stopwords().count("wouldn't"));
}

TEST(ParseWordList, SkipsCommentsAndBlankLines) {
    const WordList w = parse_word_list("# comment\n\n alpha \r\nbeta\n");
    EXPECT_EQ(w, (WordList{"alpha", "beta"}));
}

TEST(PreprocessDocument, Examples) {
    const auto recs = preprocess_document("A cat. A dog.");
    ASSERT_EQ(recs.size(), 2u);
    EXPECT_EQ(recs[0].tokens, (Strings{"cat"}));
    EXPECT_EQ(recs[1].tokens, (Strings{"dog"}));
    EXPECT_EQ(recs[0].raw, "A cat.");

    EXPECT_TRUE(preprocess_document("").empty());

    const auto stop = preprocess_document("The the. A an.");
    ASSERT_EQ(stop.size(), 2u);
    EXPECT_TRUE(stop[0].tokens.empty());
    EXPECT_TRUE(stop[1].tokens.empty());
}

TEST(PreprocessDocument, StemsAfterStopwordRemoval) {
    const auto recs = preprocess_document("The viruses were spreading quickly.");
    ASSERT_EQ(recs.size(), 1u);
    EXPECT_EQ(recs[0].tokens, (Strings{"virus", "spread", "quickli"}));
}

TEST(PreprocessDocument, RecordInvariants) {
    const std::string text = corank::read_file(corank::testing::data_path("news_document.txt"));
    const auto recs = preprocess_document(text, {true, false});
    const auto again = preprocess_document(text, {true, false});
    ASSERT_EQ(recs.size(), segment_sentences(text).size());
    ASSERT_EQ(recs.size(), again.size());
    for (std::size_t i = 0; i < recs.size(); ++i) {
        EXPECT_EQ(recs[i].index, i);
        EXPECT_EQ(recs[i].tokens, again[i].tokens);
        EXPECT_EQ(recs[i].raw, again[i].raw);
        for (const auto& t : recs[i].tokens) {
            EXPECT_FALSE(t.empty());
            EXPECT_EQ(default_stopwords().count(t), 0u) << t;
        }
    }
}
