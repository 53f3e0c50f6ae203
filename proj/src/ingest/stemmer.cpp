#include "archrec/ingest/stemmer.hpp"

#include <array>
#include <cstring>
#include <string_view>

namespace archrec {
namespace {

// The classic Porter algorithm. b holds the word, k the index of its last
// character; j marks the end of the stem while a suffix rule is considered.
struct Stemmer {
    std::string b;
    int k = 0;
    int j = 0;

    bool cons(int i) const {
        switch (b[static_cast<std::size_t>(i)]) {
        case 'a': case 'e': case 'i': case 'o': case 'u':
            return false;
        case 'y':
            return i == 0 ? true : !cons(i - 1);
        default:
            return true;
        }
    }

    // number of consonant-vowel sequences in the stem b[0..j]
    int m() const {
        int n = 0;
        int i = 0;
        while (true) {
            if (i > j) return n;
            if (!cons(i)) break;
            ++i;
        }
        ++i;
        while (true) {
            while (true) {
                if (i > j) return n;
                if (cons(i)) break;
                ++i;
            }
            ++i;
            ++n;
            while (true) {
                if (i > j) return n;
                if (!cons(i)) break;
                ++i;
            }
            ++i;
        }
    }

    bool vowel_in_stem() const {
        for (int i = 0; i <= j; ++i)
            if (!cons(i))
                return true;
        return false;
    }

    bool double_cons(int i) const {
        if (i < 1) return false;
        if (b[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i - 1)]) return false;
        return cons(i);
    }

    // consonant-vowel-consonant ending where the final consonant is not w/x/y
    bool cvc(int i) const {
        if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
        const char c = b[static_cast<std::size_t>(i)];
        return c != 'w' && c != 'x' && c != 'y';
    }

    bool ends(std::string_view s) {
        const int len = static_cast<int>(s.size());
        if (len > k + 1) return false;
        if (std::memcmp(b.data() + (k - len + 1), s.data(), s.size()) != 0) return false;
        j = k - len;
        return true;
    }

    void set_to(std::string_view s) {
        b.resize(static_cast<std::size_t>(j + 1));
        b.append(s);
        k = j + static_cast<int>(s.size());
    }

    void replace_if_m_positive(std::string_view s) {
        if (m() > 0)
            set_to(s);
    }

    void step1ab() {
        if (b[static_cast<std::size_t>(k)] == 's') {
            if (ends("sses")) k -= 2;
            else if (ends("ies")) set_to("i");
            else if (b[static_cast<std::size_t>(k - 1)] != 's') --k;
        }
        if (ends("eed")) {
            if (m() > 0) --k;
        } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
            k = j;
            if (ends("at")) set_to("ate");
            else if (ends("bl")) set_to("ble");
            else if (ends("iz")) set_to("ize");
            else if (double_cons(k)) {
                const char c = b[static_cast<std::size_t>(k)];
                if (c != 'l' && c != 's' && c != 'z') --k;
            } else if (m() == 1 && cvc(k)) {
                j = k;
                set_to("e");
            }
        }
        b.resize(static_cast<std::size_t>(k + 1));
    }

    void step1c() {
        if (ends("y") && vowel_in_stem())
            b[static_cast<std::size_t>(k)] = 'i';
    }

    void step2() {
        static const std::array<std::pair<std::string_view, std::string_view>, 20> rules = {{
            {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"}, {"anci", "ance"},
            {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},   {"entli", "ent"},
            {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
            {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
            {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},   {"biliti", "ble"},
        }};
        for (const auto& [suffix, repl] : rules) {
            if (ends(suffix)) {
                replace_if_m_positive(repl);
                return;
            }
        }
    }

    void step3() {
        static const std::array<std::pair<std::string_view, std::string_view>, 7> rules = {{
            {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
            {"ical", "ic"},  {"ful", ""},   {"ness", ""},
        }};
        for (const auto& [suffix, repl] : rules) {
            if (ends(suffix)) {
                replace_if_m_positive(repl);
                return;
            }
        }
    }

    void step4() {
        static const std::array<std::string_view, 19> suffixes = {
            "al", "ance", "ence", "er", "ic", "able", "ible", "ant", "ement",
            "ment", "ent", "ion", "ou", "ism", "ate", "iti", "ous", "ive", "ize",
        };
        for (std::string_view suffix : suffixes) {
            if (!ends(suffix))
                continue;
            if (suffix == "ion") {
                // only s/t stems drop "ion"; otherwise later suffixes may match
                if (j < 0 || (b[static_cast<std::size_t>(j)] != 's' &&
                              b[static_cast<std::size_t>(j)] != 't'))
                    continue;
            }
            if (m() > 1) {
                k = j;
                b.resize(static_cast<std::size_t>(k + 1));
            }
            return;
        }
    }

    void step5() {
        j = k;
        if (b[static_cast<std::size_t>(k)] == 'e') {
            const int a = m();
            if (a > 1 || (a == 1 && !cvc(k - 1)))
                --k;
        }
        if (b[static_cast<std::size_t>(k)] == 'l' && double_cons(k) && m() > 1)
            --k;
        b.resize(static_cast<std::size_t>(k + 1));
    }
};

} // namespace

std::string porter_stem(std::string word) {
    if (word.size() <= 2)
        return word;
    Stemmer s;
    s.b = std::move(word);
    s.k = static_cast<int>(s.b.size()) - 1;
    s.step1ab();
    s.step1c();
    s.step2();
    s.step3();
    s.step4();
    s.step5();
    return std::move(s.b);
}

} // namespace archrec
