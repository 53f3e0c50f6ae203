#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "archrec/core/error.hpp"
#include "archrec/ingest/dependency_json.hpp"
#include "archrec/ingest/depends_adapter.hpp"
#include "archrec/ingest/folder_scan.hpp"
#include "archrec/ingest/stemmer.hpp"
#include "archrec/ingest/text.hpp"
#include "helpers.hpp"

using namespace archrec;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const std::string& tag) {
    const fs::path dir = fs::temp_directory_path() / ("archrec_test_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

void write(const fs::path& p, const std::string& text) {
    fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    out << text;
}

} // namespace

TEST_CASE("parse_dependency_json round trip") {
    const std::string text = R"({
      "entities": [
        {"id": "a.c", "kind": "File", "name": "a.c", "file": "a.c", "parent": null},
        {"id": "b.c", "kind": "File", "name": "b.c", "file": "b.c", "parent": null},
        {"id": "f", "kind": "Function", "name": "f", "file": "a.c", "parent": null}
      ],
      "edges": [ {"src": "f", "dst": "b.c", "type": "Call", "count": 1} ]
    })";
    const DependencyGraph g = parse_dependency_json_text(text, "inline");
    CHECK(g.entities().size() == 3);
    CHECK(g.edges().size() == 1);

    const DependencyGraph again = parse_dependency_json_text(dependency_json_text(g), "again");
    CHECK(again.entities().size() == g.entities().size());
    CHECK(again.edges().size() == g.edges().size());
    CHECK(dependency_json_text(again) == dependency_json_text(g));
}

TEST_CASE("parse_dependency_json reports line numbers for bad JSON") {
    try {
        parse_dependency_json_text("{\n  \"entities\": [\n  broken\n]}", "inline");
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("parse_dependency_json surfaces schema violations with records") {
    const std::string missing = R"({
      "entities": [ {"id": "a.c", "kind": "File", "name": "a.c", "file": "a.c"} ],
      "edges": [ {"src": "a.c", "dst": "ghost", "type": "Call", "count": 1} ]
    })";
    CHECK_THROWS_AS(parse_dependency_json_text(missing, "inline"), InputError);

    const std::string empty = R"({"entities": [], "edges": []})";
    CHECK(parse_dependency_json_text(empty, "inline").empty());
}

TEST_CASE("adapt_depends_output expands per-type cells") {
    const std::string text = R"({
      "schemaVersion": "1.0",
      "variables": ["a.c", "b.c", "c.c"],
      "cells": [
        {"src": 0, "dest": 1, "values": {"Call": 2.0}},
        {"src": 1, "dest": 2, "values": {"Call": 1.0, "Use": 3.0}}
      ]
    })";
    const DependencyGraph g = adapt_depends_output_text(text, "inline");
    CHECK(g.entities().size() == 3);
    REQUIRE(g.edges().size() == 3);
    CHECK(g.edges()[0].dep_type == "Call");
    CHECK(g.edges()[0].multiplicity == 2);
    CHECK(g.edges()[2].multiplicity == 3);

    const std::string vacuous = R"({"variables": ["a", "b", "c"], "cells": []})";
    const DependencyGraph empty = adapt_depends_output_text(vacuous, "inline");
    CHECK(empty.entities().size() == 3);
    CHECK(empty.edges().empty());

    const std::string unknown = R"({
      "variables": ["a", "b"],
      "cells": [ {"src": 0, "dest": 1, "values": {"Teleport": 1.0}} ]
    })";
    try {
        adapt_depends_output_text(unknown, "inline");
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("Teleport") != std::string::npos);
    }
}

TEST_CASE("tokenize_identifier follows naming conventions") {
    CHECK(tokenize_identifier("plotFigure") == std::vector<std::string>{"plot", "figure"});
    CHECK(tokenize_identifier("XML_parser2Impl") == std::vector<std::string>{"xml", "parser", "impl"});
    CHECK(tokenize_identifier("x") == std::vector<std::string>{"x"});
    CHECK(tokenize_identifier("snake_case-kebab") ==
          std::vector<std::string>{"snake", "case", "kebab"});
    CHECK(tokenize_identifier("HTTPServer") == std::vector<std::string>{"http", "server"});
    CHECK(tokenize_identifier("__") == std::vector<std::string>{});

    // idempotent on its own output
    for (const auto& w : tokenize_identifier("XMLHttpRequest2Factory_impl")) {
        CHECK(tokenize_identifier(w) == std::vector<std::string>{w});
    }
}

TEST_CASE("porter stemmer fixture outputs") {
    CHECK(porter_stem("parsers") == "parser");
    CHECK(porter_stem("parsing") == "pars");
    CHECK(porter_stem("caresses") == "caress");
    CHECK(porter_stem("ponies") == "poni");
    CHECK(porter_stem("cats") == "cat");
    CHECK(porter_stem("feed") == "feed");
    CHECK(porter_stem("agreed") == "agre");
    CHECK(porter_stem("plastered") == "plaster");
    CHECK(porter_stem("motoring") == "motor");
    CHECK(porter_stem("hopping") == "hop");
    CHECK(porter_stem("happy") == "happi");
    CHECK(porter_stem("relational") == "relat");
    CHECK(porter_stem("conditional") == "condit");
    CHECK(porter_stem("formalize") == "formal");
    CHECK(porter_stem("allowance") == "allow");
    CHECK(porter_stem("effective") == "effect");
}

TEST_CASE("preprocess_words removes stop words and keywords, then stems") {
    auto occ = [](const std::string& file, const std::string& word) {
        WordOccurrence o;
        o.file_id = file;
        o.source_kind = SourceKind::Comment;
        o.word = word;
        return o;
    };
    auto out = preprocess_words({occ("a.c", "the"), occ("a.c", "parsers"), occ("a.c", "int"),
                                 occ("a.c", "x"), occ("a.c", "parser")});
    REQUIRE(out.size() == 1);
    CHECK(out[0].word == "parser");
    CHECK(out[0].count == 2);  // "parsers" and "parser" merge after stemming
}

TEST_CASE("extract_text pulls filename, definitions and comments only") {
    const fs::path root = temp_dir("extract");
    write(root / "trio.c", "/* trio format */\nint plotFigure() { int body_word = 3; return 0; }\n");

    DependencyGraph g;
    g.add_entity(testutil::entity("trio.c", EntityKind::File, "trio.c"));
    auto fn = testutil::entity("trio.c::plotFigure", EntityKind::Function, "trio.c");
    fn.name = "plotFigure";
    g.add_entity(fn);

    const auto result = extract_text(root, g);
    CHECK(result.skips.empty());

    auto find = [&](SourceKind kind, const std::string& word) {
        for (const auto& o : result.occurrences)
            if (o.source_kind == kind && o.word == word)
                return true;
        return false;
    };
    CHECK(find(SourceKind::Filename, "trio"));
    CHECK(find(SourceKind::Comment, "trio"));
    CHECK(find(SourceKind::Comment, "format"));
    CHECK(find(SourceKind::Definition, "plot"));
    CHECK(find(SourceKind::Definition, "figure"));
    // nothing from the function body
    CHECK_FALSE(find(SourceKind::Comment, "body"));
    CHECK_FALSE(find(SourceKind::Definition, "body"));
    for (const auto& o : result.occurrences)
        CHECK(o.word != "body");

    // determinism
    const auto again = extract_text(root, g);
    REQUIRE(again.occurrences.size() == result.occurrences.size());
    for (std::size_t i = 0; i < again.occurrences.size(); ++i) {
        CHECK(again.occurrences[i].word == result.occurrences[i].word);
        CHECK(again.occurrences[i].count == result.occurrences[i].count);
    }
}

TEST_CASE("extract_text skips unreadable files with a report") {
    const fs::path root = temp_dir("skips");
    DependencyGraph g;
    g.add_entity(testutil::entity("gone.c", EntityKind::File, "gone.c"));
    const auto result = extract_text(root, g);
    CHECK(result.occurrences.empty());
    REQUIRE(result.skips.size() == 1);
    CHECK(result.skips[0].rfind("SKIP gone.c", 0) == 0);
}

TEST_CASE("comment scanning ignores comment markers inside strings") {
    const auto comments = scan_comments("a.c", "char* s = \"// not a comment\"; // real\n");
    REQUIRE(comments.size() == 1);
    CHECK(comments[0] == " real");

    const auto hash = scan_comments("a.py", "x = '# nope'\n# yes\n");
    REQUIRE(hash.size() == 1);
    CHECK(hash[0] == " yes");
}

TEST_CASE("scan_folders mirrors the hierarchy") {
    const FolderTree tree = scan_folders({{"a/x.c", "a/x.c"}, {"a/y.c", "a/y.c"}, {"b/z.c", "b/z.c"}});
    REQUIRE(tree.nodes.size() == 3);
    CHECK(tree.root().files.empty());
    CHECK(tree.root().children.size() == 2);
    CHECK(tree.nodes[1].path == "a");
    CHECK(tree.nodes[1].files.size() == 2);
    CHECK(tree.nodes[2].path == "b");
    CHECK(tree.nodes[2].files.size() == 1);

    const FolderTree flat = scan_folders({{"x.c", "x.c"}, {"y.c", "y.c"}});
    CHECK(flat.nodes.size() == 1);
    CHECK(flat.root().files.size() == 2);

    const FolderTree chain = scan_folders({{"a/b/c/x.c", "a/b/c/x.c"}});
    CHECK(chain.nodes.size() == 4);
    CHECK(chain.nodes[3].files.size() == 1);
}
