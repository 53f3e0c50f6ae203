#include "archrec/ingest/text.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <tuple>

#include "archrec/ingest/stemmer.hpp"
#include "archrec/ingest/stoplists.hpp"

namespace archrec {
namespace {

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_alpha(char c) { return is_lower(c) || is_upper(c); }
char to_lower(char c) { return is_upper(c) ? static_cast<char>(c - 'A' + 'a') : c; }

bool is_identifier_char(char c) {
    return is_alpha(c) || (c >= '0' && c <= '9') || c == '_';
}

} // namespace

std::vector<std::string> tokenize_identifier(std::string_view name) {
    std::vector<std::string> words;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) {
            words.push_back(current);
            current.clear();
        }
    };

    for (std::size_t i = 0; i < name.size(); ++i) {
        const char c = name[i];
        if (!is_alpha(c)) {  // underscores, hyphens, digits, punctuation all split
            flush();
            continue;
        }
        if (is_upper(c) && !current.empty()) {
            // lower->Upper boundary, or end of an acronym run: "XMLParser"
            const bool prev_lower = is_lower(name[i - 1]);
            const bool next_lower = i + 1 < name.size() && is_lower(name[i + 1]);
            if (prev_lower || (is_upper(name[i - 1]) && next_lower))
                flush();
        }
        current.push_back(to_lower(c));
    }
    flush();
    return words;
}

namespace {

enum class CommentSyntax { CFamily, Hash };

CommentSyntax comment_syntax(std::string_view path) {
    switch (language_from_path(path)) {
    case SourceLanguage::Python:
        return CommentSyntax::Hash;
    default:
        break;
    }
    // a few common hash-comment extensions outside the keyword languages
    for (std::string_view ext : {".sh", ".rb", ".pl", ".yaml", ".yml", ".toml", ".cmake"})
        if (path.size() > ext.size() && path.substr(path.size() - ext.size()) == ext)
            return CommentSyntax::Hash;
    return CommentSyntax::CFamily;
}

} // namespace

std::vector<std::string> scan_comments(std::string_view path, std::string_view content) {
    const CommentSyntax syntax = comment_syntax(path);
    std::vector<std::string> comments;
    std::string current;

    enum class State { Code, String, Char, Line, Block };
    State state = State::Code;

    for (std::size_t i = 0; i < content.size(); ++i) {
        const char c = content[i];
        const char next = i + 1 < content.size() ? content[i + 1] : '\0';
        switch (state) {
        case State::Code:
            if (c == '"') {
                state = State::String;
            } else if (c == '\'') {  // char literal or single-quoted string
                state = State::Char;
            } else if (syntax == CommentSyntax::CFamily && c == '/' && next == '/') {
                state = State::Line;
                ++i;
            } else if (syntax == CommentSyntax::CFamily && c == '/' && next == '*') {
                state = State::Block;
                ++i;
            } else if (syntax == CommentSyntax::Hash && c == '#') {
                state = State::Line;
            }
            break;
        case State::String:
            if (c == '\\')
                ++i;
            else if (c == '"')
                state = State::Code;
            break;
        case State::Char:
            if (c == '\\')
                ++i;
            else if (c == '\'')
                state = State::Code;
            break;
        case State::Line:
            if (c == '\n') {
                comments.push_back(current);
                current.clear();
                state = State::Code;
            } else {
                current.push_back(c);
            }
            break;
        case State::Block:
            if (c == '*' && next == '/') {
                comments.push_back(current);
                current.clear();
                ++i;
                state = State::Code;
            } else {
                current.push_back(c);
            }
            break;
        }
    }
    if (!current.empty() && (state == State::Line || state == State::Block))
        comments.push_back(current);
    return comments;
}

std::vector<WordOccurrence> merge_occurrences(std::vector<WordOccurrence> occs) {
    auto key = [](const WordOccurrence& o) {
        return std::tie(o.file_id, o.source_kind, o.word, o.entity_id);
    };
    std::sort(occs.begin(), occs.end(),
              [&](const WordOccurrence& a, const WordOccurrence& b) { return key(a) < key(b); });
    std::vector<WordOccurrence> merged;
    for (auto& o : occs) {
        if (!merged.empty() && key(merged.back()) == key(o))
            merged.back().count += o.count;
        else
            merged.push_back(std::move(o));
    }
    return merged;
}

namespace {

// identifier-boundary substring search
bool contains_identifier(std::string_view text, std::string_view name) {
    if (name.empty())
        return false;
    std::size_t pos = 0;
    while ((pos = text.find(name, pos)) != std::string_view::npos) {
        const bool left_ok = pos == 0 || !is_identifier_char(text[pos - 1]);
        const std::size_t end = pos + name.size();
        const bool right_ok = end == text.size() || !is_identifier_char(text[end]);
        if (left_ok && right_ok)
            return true;
        ++pos;
    }
    return false;
}

std::string basename_without_extension(std::string_view path) {
    const auto slash = path.find_last_of("/\\");
    std::string_view name = slash == std::string_view::npos ? path : path.substr(slash + 1);
    const auto dot = name.find_last_of('.');
    if (dot != std::string_view::npos && dot > 0)
        name = name.substr(0, dot);
    return std::string(name);
}

bool is_global_variable(const DependencyGraph& g, const Entity& e) {
    if (e.kind != EntityKind::Variable)
        return false;
    if (!e.parent_id)
        return true;
    const Entity* parent = g.find_entity(*e.parent_id);
    return parent && parent->kind == EntityKind::File;
}

} // namespace

ExtractResult extract_text(const std::filesystem::path& source_root, const DependencyGraph& g) {
    ExtractResult result;

    std::vector<const Entity*> files;
    std::unordered_map<std::string, std::vector<const Entity*>> members;
    for (const Entity& e : g.entities()) {
        if (e.kind == EntityKind::File)
            files.push_back(&e);
        else
            members[e.file_id].push_back(&e);
    }
    std::sort(files.begin(), files.end(),
              [](const Entity* a, const Entity* b) { return a->id < b->id; });

    for (const Entity* file : files) {
        const std::filesystem::path path = source_root / file->name;
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            result.skips.push_back("SKIP " + file->name + " unreadable");
            continue;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        const std::string content = buf.str();

        for (const auto& word : tokenize_identifier(basename_without_extension(file->name))) {
            WordOccurrence o;
            o.file_id = file->id;
            o.source_kind = SourceKind::Filename;
            o.word = word;
            result.occurrences.push_back(std::move(o));
        }

        auto mit = members.find(file->id);
        if (mit != members.end()) {
            for (const Entity* e : mit->second) {
                const bool definition_kind = e->kind == EntityKind::Class ||
                                             e->kind == EntityKind::Function ||
                                             is_global_variable(g, *e);
                if (!definition_kind || !contains_identifier(content, e->name))
                    continue;
                for (const auto& word : tokenize_identifier(e->name)) {
                    WordOccurrence o;
                    o.file_id = file->id;
                    o.entity_id = e->id;
                    o.source_kind = SourceKind::Definition;
                    o.word = word;
                    result.occurrences.push_back(std::move(o));
                }
            }
        }

        for (const auto& comment : scan_comments(file->name, content)) {
            for (const auto& word : tokenize_identifier(comment)) {
                WordOccurrence o;
                o.file_id = file->id;
                o.source_kind = SourceKind::Comment;
                o.word = word;
                result.occurrences.push_back(std::move(o));
            }
        }
    }

    result.occurrences = merge_occurrences(std::move(result.occurrences));
    return result;
}

std::vector<WordOccurrence> preprocess_words(std::vector<WordOccurrence> occs,
                                             const std::set<std::string>& extra_stopwords) {
    const auto& english = english_stopwords();
    std::vector<WordOccurrence> kept;
    kept.reserve(occs.size());

    for (auto& o : occs) {
        if (o.word.size() < 2)
            continue;
        if (english.count(o.word) || extra_stopwords.count(o.word))
            continue;
        if (language_keywords(language_from_path(o.file_id)).count(o.word))
            continue;
        o.word = porter_stem(std::move(o.word));
        if (o.word.size() < 2)
            continue;
        kept.push_back(std::move(o));
    }
    return merge_occurrences(std::move(kept));
}

} // namespace archrec
