#include "doctest.h"
#include "support.hpp"

#include <fstream>

#include "json.hpp"

using namespace laxlog;
using namespace laxlog::testing;
using nlohmann::json;

namespace {

std::string source_dir() {
#ifdef LAXLOG_SOURCE_DIR
    return LAXLOG_SOURCE_DIR;
#else
    return ".";
#endif
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Structural validation against docs/tree.schema.json: required keys, types,
// no extra keys, recursive node shape.
void validate_and_node(const json& node) {
    REQUIRE(node.is_object());
    CHECK(node.size() == 4);
    REQUIRE(node.contains("atom"));
    CHECK(node["atom"].is_string());
    CHECK(!node["atom"].get<std::string>().empty());
    REQUIRE(node.contains("existentials"));
    CHECK(node["existentials"].is_number_integer());
    CHECK(node["existentials"].get<int>() >= 0);
    REQUIRE(node.contains("truncated"));
    CHECK(node["truncated"].is_boolean());
    REQUIRE(node.contains("or_nodes"));
    REQUIRE(node["or_nodes"].is_array());
    for (const json& o : node["or_nodes"]) {
        REQUIRE(o.is_object());
        CHECK(o.size() == 3);
        REQUIRE(o.contains("clause"));
        CHECK(o["clause"].is_number_integer());
        CHECK(o["clause"].get<int>() >= 1);
        REQUIRE(o.contains("matcher"));
        CHECK(o["matcher"].is_string());
        REQUIRE(o.contains("children"));
        REQUIRE(o["children"].is_array());
        for (const json& c : o["children"]) validate_and_node(c);
    }
}

void validate_tree_json(const std::string& text) {
    json t = json::parse(text);
    REQUIRE(t.is_object());
    CHECK(t.size() == 3);
    REQUIRE(t.contains("bound"));
    CHECK(t["bound"].is_number_integer());
    CHECK(t["bound"].get<int>() >= 0);
    REQUIRE(t.contains("depth"));
    CHECK(t["depth"].is_number_integer());
    REQUIRE(t.contains("root"));
    validate_and_node(t["root"]);
}

}  // namespace

TEST_CASE("the schema document itself is well-formed json") {
    json schema = json::parse(slurp(source_dir() + "/docs/tree.schema.json"));
    CHECK(schema.contains("definitions"));
    CHECK(schema["definitions"].contains("and_node"));
    CHECK(schema["definitions"].contains("or_node"));
}

TEST_CASE("json exports validate against the documented schema") {
    for (const char* name :
         {"listnat.lp", "listnat_plus.lp", "gc.lp", "bad.lp", "ground_abcd.lp"}) {
        Program p = load_fixture(name);
        for (int n = 0; n <= 1; ++n) {
            for (const Atom& a : enumerate_atoms(p.sig, n, 0)) {
                for (int depth : {0, 2, 4}) {
                    CoTree t = build_cotree(p, a, depth);
                    validate_tree_json(export_tree(t, TreeFormat::Json));
                }
            }
        }
    }
}

TEST_CASE("json export content mirrors the tree") {
    Program p = gc();
    CoTree t = build_cotree(p, atom(p, "connected(x1,x2)"), 1);
    json j = json::parse(export_tree(t, TreeFormat::Json));
    CHECK(j["bound"] == 2);
    CHECK(j["depth"] == 1);
    CHECK(j["root"]["atom"] == "connected(x1,x2)");
    REQUIRE(j["root"]["or_nodes"].size() == 1);
    const json& o = j["root"]["or_nodes"][0];
    CHECK(o["clause"] == 2);
    CHECK(o["children"][0]["atom"] == "edge(x1,z1)");
    CHECK(o["children"][1]["atom"] == "connected(z1,x2)");
    CHECK(o["children"][1]["existentials"] == 1);
    CHECK(o["children"][1]["or_nodes"].empty());
    CHECK(o["children"][1]["truncated"] == true);
}

TEST_CASE("dot exports match the checked golden files") {
    Program g = gc();
    CoTree t = build_cotree(g, atom(g, "connected(x1,x2)"), 4);
    CHECK(export_tree(t, TreeFormat::Dot) ==
          slurp(source_dir() + "/tests/golden/gc_connected_d4.dot"));

    Program lp = listnat_plus();
    CoTree t2 = build_cotree(lp, atom(lp, "list(cons(0,nil))"), 4);
    CHECK(export_tree(t2, TreeFormat::Dot) ==
          slurp(source_dir() + "/tests/golden/listnat_plus_ground_d4.dot"));
}
