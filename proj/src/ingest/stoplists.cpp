#include "archrec/ingest/stoplists.hpp"

#include <algorithm>

namespace archrec {
namespace {

const std::set<std::string> kEnglish = {
    "a", "about", "above", "after", "again", "against", "all", "am", "an", "and", "any",
    "are", "aren", "as", "at", "be", "because", "been", "before", "being", "below",
    "between", "both", "but", "by", "can", "cannot", "could", "couldn", "did", "didn",
    "do", "does", "doesn", "doing", "don", "down", "during", "each", "few", "for",
    "from", "further", "had", "hadn", "has", "hasn", "have", "haven", "having", "he",
    "her", "here", "hers", "herself", "him", "himself", "his", "how", "i", "if", "in",
    "into", "is", "isn", "it", "its", "itself", "just", "me", "more", "most", "mustn",
    "my", "myself", "no", "nor", "not", "now", "of", "off", "on", "once", "only", "or",
    "other", "ought", "our", "ours", "ourselves", "out", "over", "own", "same", "shan",
    "she", "should", "shouldn", "so", "some", "such", "than", "that", "the", "their",
    "theirs", "them", "themselves", "then", "there", "these", "they", "this", "those",
    "through", "to", "too", "under", "until", "up", "very", "was", "wasn", "we", "were",
    "weren", "what", "when", "where", "which", "while", "who", "whom", "why", "will",
    "with", "won", "would", "wouldn", "you", "your", "yours", "yourself", "yourselves",
};

const std::set<std::string> kCKeywords = {
    "auto", "break", "case", "char", "const", "continue", "default", "do", "double",
    "else", "enum", "extern", "float", "for", "goto", "if", "inline", "int", "long",
    "register", "restrict", "return", "short", "signed", "sizeof", "static", "struct",
    "switch", "typedef", "union", "unsigned", "void", "volatile", "while", "define",
    "include", "ifdef", "ifndef", "endif", "pragma", "undef", "elif", "error", "null",
};

const std::set<std::string> kCppKeywords = [] {
    std::set<std::string> kw = kCKeywords;
    kw.insert({
        "alignas", "alignof", "bool", "catch", "class", "concept", "consteval",
        "constexpr", "constinit", "decltype", "delete", "dynamic", "explicit", "export",
        "false", "friend", "mutable", "namespace", "new", "noexcept", "nullptr",
        "operator", "private", "protected", "public", "reinterpret", "requires",
        "template", "this", "throw", "true", "try", "typeid", "typename", "using",
        "virtual", "wchar", "cast", "std",
    });
    return kw;
}();

const std::set<std::string> kJavaKeywords = {
    "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char", "class",
    "const", "continue", "default", "do", "double", "else", "enum", "extends", "final",
    "finally", "float", "for", "goto", "if", "implements", "import", "instanceof",
    "int", "interface", "long", "native", "new", "null", "package", "private",
    "protected", "public", "return", "short", "static", "strictfp", "super", "switch",
    "synchronized", "this", "throw", "throws", "transient", "true", "false", "try",
    "void", "volatile", "while", "var", "record", "string",
};

const std::set<std::string> kPythonKeywords = {
    "and", "as", "assert", "async", "await", "break", "class", "continue", "def",
    "del", "elif", "else", "except", "finally", "for", "from", "global", "if",
    "import", "in", "is", "lambda", "none", "nonlocal", "not", "or", "pass", "raise",
    "return", "self", "true", "false", "try", "while", "with", "yield",
};

const std::set<std::string> kAllKeywords = [] {
    std::set<std::string> kw;
    for (const auto* s : {&kCKeywords, &kCppKeywords, &kJavaKeywords, &kPythonKeywords})
        kw.insert(s->begin(), s->end());
    return kw;
}();

std::string extension_of(std::string_view path) {
    const auto slash = path.find_last_of("/\\");
    const auto name = slash == std::string_view::npos ? path : path.substr(slash + 1);
    const auto dot = name.find_last_of('.');
    if (dot == std::string_view::npos || dot == 0)
        return {};
    std::string ext(name.substr(dot + 1));
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext;
}

} // namespace

SourceLanguage language_from_path(std::string_view path) {
    const std::string ext = extension_of(path);
    if (ext == "c" || ext == "h")
        return SourceLanguage::C;
    if (ext == "cc" || ext == "cpp" || ext == "cxx" || ext == "hpp" || ext == "hh" ||
        ext == "hxx" || ext == "ipp" || ext == "inl")
        return SourceLanguage::Cpp;
    if (ext == "java")
        return SourceLanguage::Java;
    if (ext == "py")
        return SourceLanguage::Python;
    return SourceLanguage::Unknown;
}

const std::set<std::string>& english_stopwords() {
    return kEnglish;
}

const std::set<std::string>& language_keywords(SourceLanguage lang) {
    switch (lang) {
    case SourceLanguage::C: return kCKeywords;
    case SourceLanguage::Cpp: return kCppKeywords;
    case SourceLanguage::Java: return kJavaKeywords;
    case SourceLanguage::Python: return kPythonKeywords;
    case SourceLanguage::Unknown: return kAllKeywords;
    }
    return kAllKeywords;
}

} // namespace archrec
