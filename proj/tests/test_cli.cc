#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

using std::ifstream;
using std::ofstream;
using std::string;
using std::stringstream;

namespace fs = std::filesystem;

namespace
{
    struct Run
    {
        int exit_code;
        string out;
    };

    auto run(const string & args) -> Run
    {
        string command = string{ HGW_TOOL_PATH } + " " + args + " 2>/dev/null";
        auto pipe = popen(command.c_str(), "r");
        if (! pipe)
            throw std::runtime_error{ "popen failed" };
        string out;
        char buf[4096];
        size_t n;
        while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0)
            out.append(buf, n);
        int status = pclose(pipe);
        return Run{ WIFEXITED(status) ? WEXITSTATUS(status) : -1, out };
    }

    auto slurp(const fs::path & p) -> string
    {
        ifstream in{ p };
        stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    auto count_lines(const string & s) -> int
    {
        int n = 0;
        for (auto c : s)
            if (c == '\n')
                ++n;
        return n;
    }

    struct ScratchDir
    {
        fs::path path;

        explicit ScratchDir(const string & tag) :
            path(fs::temp_directory_path() / ("hgw_cli_" + tag + "_" + std::to_string(::getpid())))
        {
            fs::remove_all(path);
            fs::create_directories(path);
        }

        ~ScratchDir()
        {
            std::error_code ec;
            fs::remove_all(path, ec);
        }
    };

    const string quaternary_document = R"({
  "domain": { "family": "random" },
  "relations": {
    "R": { "arity": 4, "orbits": ["N,N,N,N,N,=", "E,N,N,N,N,=", "N,N,N,N,N,N"] }
  },
  "variables": ["a", "b", "c", "d"],
  "constraints": [ { "scope": ["a", "b", "c", "d"], "relation": "R" } ]
})";

    const string triangle_document = R"({
  "domain": { "family": "henson", "k": 3 },
  "relations": {},
  "variables": ["x", "y", "z"],
  "constraints": [
    { "scope": ["x", "y"], "relation": "E" },
    { "scope": ["y", "z"], "relation": "E" },
    { "scope": ["x", "z"], "relation": "E" }
  ]
})";
}

TEST(Cli, HelpAndUsageErrors)
{
    EXPECT_EQ(run("--help").exit_code, 0);
    EXPECT_EQ(run("solve").exit_code, 2);
    EXPECT_EQ(run("no-such-command").exit_code, 2);
    EXPECT_EQ(run("solve --in /nonexistent/file.json").exit_code, 2);
}

TEST(Cli, EnumerateTypes)
{
    auto r = run("enumerate-types --family random --arity 3");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(count_lines(r.out), 15);

    EXPECT_EQ(count_lines(run("enumerate-types --family henson --k 3 --arity 3").out), 14);
    EXPECT_EQ(count_lines(run("enumerate-types --family random --arity 2").out), 3);
}

TEST(Cli, BehaviorTable)
{
    auto r = run("behaviors --spec min:n_dominated --print");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("  = | = N N\n  E | N E N\n  N | N N N\n"), string::npos) << r.out;
}

TEST(Cli, SolveExitCodes)
{
    ScratchDir dir{ "solve" };
    {
        ofstream{ dir.path / "triangle.json" } << triangle_document;
    }
    auto triangle = (dir.path / "triangle.json").string();

    auto unsat = run("solve --mode oracle --in " + triangle);
    EXPECT_EQ(unsat.exit_code, 1);
    EXPECT_NE(unsat.out.find("status: unsat"), string::npos) << unsat.out;

    auto search = run("solve --mode search --in " + triangle);
    EXPECT_EQ(search.exit_code, 1);

    {
        ofstream{ dir.path / "bad.json" } << "{ \"domain\": ";
    }
    EXPECT_EQ(run("solve --in " + (dir.path / "bad.json").string()).exit_code, 2);

    {
        ofstream{ dir.path / "q.json" } << quaternary_document;
    }
    auto cert_path = dir.path / "cert.json";
    auto sat = run("solve --mode search --in " + (dir.path / "q.json").string() + " --cert " + cert_path.string());
    EXPECT_EQ(sat.exit_code, 0);
    EXPECT_NE(sat.out.find("status: sat"), string::npos) << sat.out;
    auto cert = nlohmann::json::parse(slurp(cert_path));
    EXPECT_EQ(cert["status"], "sat");
    EXPECT_EQ(cert["assignment"].size(), 4u);
}

TEST(Cli, FixturesAreMinimalButUnsatisfiable)
{
    ScratchDir dir{ "fixtures" };
    ASSERT_EQ(run("fixtures --family henson --k 4 --out-dir " + dir.path.string()).exit_code, 0);
    for (auto name : { "i1.json", "i2-source.json", "i2.json" }) {
        ASSERT_TRUE(fs::exists(dir.path / name)) << name;
    }

    auto i1 = (dir.path / "i1.json").string();
    EXPECT_EQ(run("solve --mode oracle --in " + i1).exit_code, 1);
    auto width = run("solve --mode width --k 1 --l auto --in " + i1);
    EXPECT_EQ(width.exit_code, 0);
    EXPECT_NE(width.out.find("assuming"), string::npos) << width.out;

    auto i2 = (dir.path / "i2.json").string();
    EXPECT_EQ(run("solve --mode oracle --in " + i2).exit_code, 1);
    auto m = run("minimalize --k 2 --l 3 --in " + i2 + " --out " + (dir.path / "m.json").string());
    EXPECT_EQ(m.exit_code, 0);
    auto doc = nlohmann::json::parse(slurp(dir.path / "m.json"));
    EXPECT_EQ(doc["domain"]["family"], "henson");
}

TEST(Cli, Translate)
{
    ScratchDir dir{ "translate" };
    {
        ofstream{ dir.path / "t.json" } << triangle_document;
    }
    auto r = run("translate --m 3 --in " + (dir.path / "t.json").string());
    EXPECT_EQ(r.exit_code, 0);
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["domain"]["family"], "finite-types");
    EXPECT_EQ(doc["domain"]["m"], 3);

    EXPECT_EQ(run("translate --m 4 --in " + (dir.path / "t.json").string()).exit_code, 2);
}

TEST(Cli, ClassifyJson)
{
    ScratchDir dir{ "classify" };
    {
        ofstream{ dir.path / "q.json" } << quaternary_document;
    }
    auto json_path = (dir.path / "c.json").string();
    auto r = run("classify --in " + (dir.path / "q.json").string() + " --json " + json_path);
    EXPECT_EQ(r.exit_code, 0);
    auto doc = nlohmann::json::parse(slurp(json_path));
    ASSERT_TRUE(doc.contains("R"));
    EXPECT_EQ(doc["R"].size(), 11u);
    bool found = false;
    for (auto & entry : doc["R"]) {
        if (entry["shape"] == "[(E(x1,x2) => =(x3,x4))]") {
            found = true;
            EXPECT_TRUE(entry["entails"].get<bool>());
        }
    }
    EXPECT_TRUE(found);
}

TEST(Cli, BenchIsReproducible)
{
    auto a = run("bench --instances 5 --seed 3");
    auto b = run("bench --instances 5 --seed 3");
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(count_lines(a.out), 6);
    EXPECT_EQ(a.out.find("disagreements=1"), string::npos);
}
