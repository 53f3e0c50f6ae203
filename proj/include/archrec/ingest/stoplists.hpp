#ifndef ARCHREC_INGEST_STOPLISTS_HPP
#define ARCHREC_INGEST_STOPLISTS_HPP

#include <set>
#include <string>
#include <string_view>

namespace archrec {

enum class SourceLanguage { C, Cpp, Java, Python, Unknown };

SourceLanguage language_from_path(std::string_view path);

const std::set<std::string>& english_stopwords();

// Reserved words of the given language; Unknown gets the union of all lists.
const std::set<std::string>& language_keywords(SourceLanguage lang);

} // namespace archrec

#endif
