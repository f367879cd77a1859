#include <doctest.h>

#include <erogers/cli.hpp>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = erogers::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir()
    {
        path = fs::temp_directory_path() / ("erogers-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string & name) const { return (path / name).string(); }
    static int & counter()
    {
        static int c = 0;
        return c;
    }
};

void write(const std::string & path, const std::string & text)
{
    std::ofstream(path) << text;
}

std::string slurp(const std::string & path)
{
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), {}};
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("construct efr writes instance, certificate and manifest")
    {
        TempDir dir;
        auto r = cli({"construct", "efr", "--d", "2", "--r", "5", "--R", "3", "--out", dir / "efr.hg"});
        REQUIRE(r.code == 0);
        CHECK(r.out.find("command=efr") != std::string::npos);
        auto cert = nlohmann::json::parse(slurp(dir / "efr.hg.cert.json"));
        CHECK(cert["checks"]["ii_linear"]["verdict"] == "pass");
        auto manifest = nlohmann::json::parse(slurp(dir / "efr.hg.manifest.json"));
        CHECK(manifest["artifact_version"] == "0.1.0");
        CHECK(manifest.contains("wall_clock_ms"));

        CHECK(cli({"verify", "linear", dir / "efr.hg"}).code == 0);
        CHECK(cli({"verify", "triangle-free", dir / "efr.hg"}).code == 0);
    }

    TEST_CASE("exit codes for fail, usage and precondition")
    {
        TempDir dir;
        write(dir / "bad.hg", "4 2 3\n0 1 2\n0 1 3\n");
        CHECK(cli({"verify", "linear", dir / "bad.hg"}).code == 1);
        auto tri = cli({"verify", "triangle-free", dir / "bad.hg"});
        CHECK(tri.code == 3);
        CHECK(tri.err.find("0") != std::string::npos);

        write(dir / "broken.g", "3 2\n0 1\n1 x\n");
        auto parse = cli({"verify", "subgraph-free", dir / "broken.g", "--pattern", "K3"});
        CHECK(parse.code == 2);
        CHECK(parse.err.find("line 3") != std::string::npos);

        CHECK(cli({"construct", "nonsense"}).code == 2);
        CHECK(cli({"construct", "theorem1", "--d", "2", "--r", "5", "--R", "3", "--f", "K3", "--seed", "1",
                      "--out", dir / "t1.g"})
                  .code
            == 3);
    }

    TEST_CASE("REQUIRE_SEED makes an implicit seed a usage error")
    {
        TempDir dir;
        ::setenv("REQUIRE_SEED", "1", 1);
        auto r = cli({"construct", "girth-hypergraph", "--t", "20", "--r", "3", "--out", dir / "h.hg"});
        ::unsetenv("REQUIRE_SEED");
        CHECK(r.code == 2);
        CHECK(cli({"construct", "girth-hypergraph", "--t", "20", "--r", "3", "--out", dir / "h.hg"}).code == 0);
    }

    TEST_CASE("replay reproduces the recorded outputs")
    {
        TempDir dir;
        REQUIRE(cli({"construct", "theorem1", "--d", "2", "--r", "5", "--R", "3", "--f", "C5", "--seed", "4",
                     "--out", dir / "t1.g"})
                    .code
            == 0);
        auto r = cli({"replay", dir / "t1.g.manifest.json", "--out", dir / "again.g"});
        CHECK(r.code == 0);
        CHECK(r.out.find("differs") == std::string::npos);
        CHECK(slurp(dir / "t1.g") == slurp(dir / "again.g"));
        CHECK(slurp(dir / "t1.g.cert.json") == slurp(dir / "again.g.cert.json"));
    }

    TEST_CASE("search and oracle summaries")
    {
        TempDir dir;
        write(dir / "c5.g", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
        auto ff = cli({"search", "max-ffree", "--in", dir / "c5.g", "--f", "P3"});
        CHECK(ff.code == 0);
        CHECK(ff.out.find("size=3") != std::string::npos);
        CHECK(ff.out.find("status=optimal") != std::string::npos);

        auto bf = cli({"oracle", "brute-force-f", "--f", "K2", "--g", "K3", "--n", "5"});
        CHECK(bf.code == 0);
        CHECK(bf.out.rfind("2\n", 0) == 0);

        CHECK(cli({"verify", "hom-free", "--f", "C4", "--g", "C5"}).code == 0);
        CHECK(cli({"verify", "hom-free", "--f", "K3", "--g", "C5"}).code == 1);
    }

    TEST_CASE("pipelines from the command line")
    {
        TempDir dir;
        write(dir / "c7.g", "7 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n0 6\n");
        auto ck = cli({"pipeline", "ckfree", "--in", dir / "c7.g", "--k", "3", "--seed", "1", "--out", dir / "ck.json"});
        CHECK(ck.code == 0);
        CHECK(ck.out.find("size=7") != std::string::npos);

        write(dir / "c5.g", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
        auto rw = cli({"pipeline", "ramsey-witness", "--host", dir / "c5.g", "--f", "K2", "--g", "K3", "--t", "3",
            "--rft", "3"});
        CHECK(rw.code == 0);
        auto gp = cli({"pipeline", "gplus", "--g", "C5", "--v", "0", "--w", "2", "--out", dir / "gp.json"});
        CHECK(gp.code == 0);
        CHECK(cli({"pipeline", "gplus", "--g", "C5", "--v", "0", "--w", "1", "--out", dir / "gp2.json"}).code == 3);
    }
}
