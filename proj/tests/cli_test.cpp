#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exitCode = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string command = std::string(ORBIT_ATLAS_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), got);
    int status = pclose(pipe);
    result.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

// Just enough of JSON Schema to check the shipped contract: type,
// required, properties, additionalProperties, items, minItems, enum,
// pattern-free string refs, and local $ref.
bool validate(const json& schema, const json& value, const json& root, std::string& why);

bool validateType(const std::string& type, const json& value) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "integer") return value.is_number_integer();
    if (type == "boolean") return value.is_boolean();
    if (type == "number") return value.is_number();
    return false;
}

bool validate(const json& schema, const json& value, const json& root, std::string& why) {
    if (schema.contains("$ref")) {
        std::string ref = schema["$ref"].get<std::string>();
        REQUIRE(ref.rfind("#/$defs/", 0) == 0);
        return validate(root["$defs"][ref.substr(8)], value, root, why);
    }
    if (schema.contains("enum")) {
        for (const auto& allowed : schema["enum"])
            if (allowed == value)
                return true;
        why = "value not in enum";
        return false;
    }
    if (schema.contains("type") && !validateType(schema["type"].get<std::string>(), value)) {
        why = "expected type " + schema["type"].get<std::string>();
        return false;
    }
    if (schema.contains("minimum") && value.is_number() &&
        value.get<double>() < schema["minimum"].get<double>()) {
        why = "below minimum";
        return false;
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>())) {
                    why = "missing required key " + key.get<std::string>();
                    return false;
                }
        if (schema.contains("properties"))
            for (const auto& [key, sub] : schema["properties"].items())
                if (value.contains(key) && !validate(sub, value[key], root, why)) {
                    why = key + ": " + why;
                    return false;
                }
        if (schema.contains("additionalProperties") &&
            schema["additionalProperties"].is_boolean() &&
            !schema["additionalProperties"].get<bool>() && schema.contains("properties"))
            for (const auto& [key, sub] : value.items())
                if (!schema["properties"].contains(key)) {
                    why = "unexpected key " + key;
                    return false;
                }
    }
    if (value.is_array()) {
        if (schema.contains("minItems") &&
            value.size() < schema["minItems"].get<std::size_t>()) {
            why = "too few items";
            return false;
        }
        if (schema.contains("items"))
            for (const auto& item : value)
                if (!validate(schema["items"], item, root, why)) {
                    why = "item: " + why;
                    return false;
                }
    }
    return true;
}

void checkAgainstSchema(const std::string& definition, const std::string& text) {
    std::ifstream in(ORBIT_ATLAS_SCHEMA);
    REQUIRE(in.good());
    json root = json::parse(in);
    json value = json::parse(text);
    std::string why;
    bool ok = validate(root["$defs"][definition], value, root, why);
    if (!ok)
        MESSAGE("schema violation in ", definition, ": ", why);
    CHECK(ok);
}

}  // namespace

TEST_CASE("generic subcommand text output is pinned") {
    RunResult r = run("generic -d 5,4,3,1,2,4,6");
    CHECK(r.exitCode == 0);
    CHECK(r.out == "[1,1]+[1,2]+[1,3]^2+[1,7]+[5,7]+[6,7]^2+[7,7]^2\n");
}

TEST_CASE("generic ascii line diagram") {
    RunResult r = run("generic -d 5,4,3,1,2,4,6 --format ascii");
    CHECK(r.exitCode == 0);
    CHECK(r.out ==
          "            *\n"
          "*           *\n"
          "*-*       *-*\n"
          "*-*-*     *-*\n"
          "*-*-*   *-*-*\n"
          "*-*-*-*-*-*-*\n");

    RunResult small = run("generic -d 2,1 --format ascii");
    CHECK(small.out ==
          "*\n"
          "*-*\n");
}

TEST_CASE("generic svg output is self-contained") {
    RunResult r = run("generic -d 1,2,1 --format svg");
    CHECK(r.exitCode == 0);
    CHECK(r.out.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0) == 0);
    CHECK(r.out.find("</svg>") != std::string::npos);
    CHECK(r.out.find("<circle") != std::string::npos);
    CHECK(r.out.find("<line") != std::string::npos);
}

TEST_CASE("components table is pinned") {
    RunResult r = run("components -d 1,2,4,5,4,2,1");
    CHECK(r.exitCode == 0);
    CHECK(r.out ==
          "M(d) = [1,7]+[2,6]+[3,5]^2+[4,4]\n"
          "components: 3\n"
          "(1,7) codim 1 [1,6]+[2,7]+[3,5]^2+[4,4]\n"
          "(2,6) codim 1 [1,7]+[2,5]+[3,5]+[3,6]+[4,4]\n"
          "(3,5) codim 1 [1,7]+[2,6]+[3,4]+[3,5]+[4,5]\n");
}

TEST_CASE("count output is pinned") {
    RunResult r = run("count -d 1,2,1 --method both");
    CHECK(r.exitCode == 0);
    CHECK(r.out == "brute=5 partitions=5\n");

    RunResult one = run("count -d 1,2,1 --method partitions");
    CHECK(one.out == "5\n");
}

TEST_CASE("pairing and rigid subcommands") {
    CHECK(run("pairing --from [1,2] --to [1,1] --kind hom").out == "1\n");
    CHECK(run("pairing --from [1,1] --to [2,2] --kind ext").out == "1\n");
    CHECK(run("pairing --from [1,1] --to [2,2] --kind euler").out == "-1\n");

    RunResult rigid = run("rigid -m [1,1]+[2,2]");
    CHECK(rigid.exitCode == 0);
    CHECK(rigid.out == "rigid=false selfext=1\n");
    CHECK(run("rigid -m [2,2]+[1,3]").out == "rigid=true selfext=0\n");
}

TEST_CASE("verify subcommand and exit codes") {
    RunResult pass = run("verify -d 1,1,1");
    CHECK(pass.exitCode == 0);
    CHECK(pass.out.find("verification: PASS") != std::string::npos);

    CHECK(run("verify -d 0,1").exitCode == 1);
    CHECK(run("--budget 3 verify -d 2,2,2").exitCode == 2);
    CHECK(run("nonsense -d 1,1").exitCode == 64);
    CHECK(run("components -d 1,0,1").exitCode == 1);
    CHECK(run("components -d 1,2x").exitCode == 1);
}

TEST_CASE("budget configuration sources") {
    // Environment variable caps the enumeration.
    std::string command = std::string("ORBIT_ATLAS_BUDGET=3 ") + ORBIT_ATLAS_BIN +
                          " verify -d 2,2,2 >/dev/null 2>&1";
    int status = std::system(command.c_str());
    CHECK(WEXITSTATUS(status) == 2);

    // Config file does the same; an explicit flag overrides it.
    std::string path = "/tmp/orbit_atlas_config_test.cfg";
    {
        std::ofstream out(path);
        out << "# limits\n";
        out << "enum_budget = 3\n";
        out << "tree_t_max = 12\n";
    }
    CHECK(run("--config " + path + " verify -d 2,2,2").exitCode == 2);
    CHECK(run("--config " + path + " --budget 100000 verify -d 2,2,2").exitCode == 0);
    CHECK(run("--config " + path + " --tree-max 2 locate -d 1,1,1").exitCode == 2);

    {
        std::ofstream out(path);
        out << "mystery = 1\n";
    }
    CHECK(run("--config " + path + " verify -d 1,1").exitCode == 1);
    CHECK(run("--config /nonexistent.cfg verify -d 1,1").exitCode == 1);
    std::remove(path.c_str());
}

TEST_CASE("classify output is pinned") {
    CHECK(run("classify -d 5,4,3,1,2,4,6").out ==
          "generic=true pure=false concave=true unimodal=false\n");
    CHECK(run("classify -d 1,2,4,5,4,2,1").out ==
          "generic=false pure=true concave=false unimodal=true\n");
}

TEST_CASE("fan dot output is pinned for t=2") {
    RunResult r = run("fan --t 2 --emit dot");
    CHECK(r.exitCode == 0);
    CHECK(r.out ==
          "graph exchange_t2 {\n"
          "  v0 [label=\"[1,2]+[2,2]\"];\n"
          "  v1 [label=\"[1,1]+[1,2]\"];\n"
          "  v0 -- v1 [label=\"[1,1]/[2,2]\"];\n"
          "}\n");
}

TEST_CASE("deterministic output") {
    CHECK(run("components -d 5,4,3,1,2,4,6").out == run("components -d 5,4,3,1,2,4,6").out);
    CHECK(run("fan --t 4 --emit json").out == run("fan --t 4 --emit json").out);
}

TEST_CASE("json outputs validate against the shipped schema") {
    checkAgainstSchema("generic", run("generic -d 5,4,3,1,2,4,6 --format json").out);
    checkAgainstSchema("components", run("components -d 1,2,4,5,4,2,1 --json").out);
    checkAgainstSchema("count", run("count -d 1,2,1 --method both --json").out);
    checkAgainstSchema("pairing", run("pairing --from [1,3] --to [2,6] --kind ext --json").out);
    checkAgainstSchema("rigid", run("rigid -m [1,1]+[2,2] --json").out);
    checkAgainstSchema("verify", run("verify -d 1,2,1 --json").out);
    checkAgainstSchema("classify", run("classify -d 1,2,4,5,4,2,1 --json").out);
    checkAgainstSchema("fan", run("fan --t 3 --emit json").out);
    checkAgainstSchema("locate", run("locate -d 1,2,1 --json").out);
}

TEST_CASE("text and json encode the same component data") {
    RunResult text = run("components -d 5,4,3,1,2,4,6");
    json doc = json::parse(run("components -d 5,4,3,1,2,4,6 --json").out);
    CHECK(doc["components"].size() == 6);
    for (const auto& component : doc["components"]) {
        std::string row = "(" + std::to_string(component["i"].get<int>()) + "," +
                          std::to_string(component["j"].get<int>()) + ") codim " +
                          std::to_string(component["codim"].get<int>()) + " " +
                          component["representative"].get<std::string>();
        CHECK(text.out.find(row) != std::string::npos);
    }
}

TEST_CASE("batch runs per-line computations") {
    std::string path = "/tmp/orbit_atlas_batch_test.txt";
    {
        std::ofstream out(path);
        out << "5,4,3,1,2,4,6\n";
        out << "1,2,4,5,4,2,1\n";
        out << "1,2,3,5,3,2,3,2,1\n";
    }
    RunResult golden = run("batch " + path);
    CHECK(golden.exitCode == 0);
    CHECK(golden.out.find("passed 3/3") != std::string::npos);

    {
        std::ofstream out(path);
    }
    RunResult empty = run("batch " + path);
    CHECK(empty.exitCode == 0);
    CHECK(empty.out.find("passed 0/0") != std::string::npos);

    {
        std::ofstream out(path);
        out << "components 1,1\n";
        out << "components 0,1\n";
        out << "count 1,2,1\n";
        out << "verify 1,1,1\n";
    }
    RunResult mixed = run("batch " + path);
    CHECK(mixed.exitCode == 1);
    CHECK(mixed.out.find("passed 3/4") != std::string::npos);
    CHECK(mixed.out.find("2: components 0,1: fail") != std::string::npos);

    CHECK(run("batch /nonexistent/path").exitCode == 66);
    std::remove(path.c_str());
}
