#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <set>
#include <fstream>
#include <random>
#include <sstream>

#include "klr/cli.hpp"

using namespace klr;
using namespace klr::cli;
namespace fs = std::filesystem;

namespace {

const char* kA1Level2 = R"({"cartan": {"labels": ["1"], "matrix": [[2]]}, "q_coeffs": "standard",
                            "lambda": {"1": 2}, "beta": {"1": 1}})";
const char* kA1Level1 = R"({"cartan": {"labels": ["1"], "matrix": [[2]]}, "lambda": {"1": 1}, "nmax": 2})";
const char* kA2 = R"({"cartan": {"labels": ["a", "b"], "matrix": [[2, -1], [-1, 2]]},
                      "lambda": {"a": 1}, "nmax": 2})";

struct TempDir {
    fs::path path;
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("klrtest-" + std::to_string(rd()) + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path / name) << text;
        return (path / name).string();
    }
};

struct Outcome {
    int code;
    std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "klrtool");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string config_error(const std::string& text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

Json strip_timing(Json j) {
    for (auto& r : j["reports"]) r.erase("elapsed_ms");
    return j;
}

}  // namespace

TEST_CASE("minimal config round-trips through emit") {
    JobConfig a = parse_config(kA1Level2);
    const std::string once = emit_config(a);
    JobConfig b = parse_config(once);
    CHECK(emit_config(b) == once);
    CHECK(b.lam.levels == std::vector<int>{2});
    CHECK(b.beta->coeffs == std::vector<int>{1});
    CHECK(!b.q_override);
    CHECK(b.output == "tsv");
}

TEST_CASE("explicit q_coeffs round-trip and mirror") {
    const char* text = R"({"cartan": {"labels": ["a", "b"], "matrix": [[2, -1], [-1, 2]]},
        "q_coeffs": {"a,b": [[1, 0, 2, 1], [0, 1, -3, 2]]}, "lambda": {"a": 1}, "nmax": 1,
        "degree_cap": 5, "output": "json", "cache_dir": "/tmp/x"})";
    JobConfig a = parse_config(text);
    REQUIRE(a.q_override);
    CHECK(a.q_override->poly(0, 1).at({1, 0}) == 2);
    CHECK(a.q_override->poly(1, 0).at({1, 0}) == mpq_class(-3, 2));
    JobConfig b = parse_config(emit_config(a));
    CHECK(*b.q_override == *a.q_override);
    CHECK(emit_config(b) == emit_config(a));
    CHECK(b.degree_cap == 5);
    CHECK(b.cache_dir == "/tmp/x");
}

TEST_CASE("strict schema rejects unknown fields by name") {
    CHECK(config_error(R"({"cartan": {"matrix": [[2]]}, "lambda": {}, "nmax": 1, "colour": 2})")
              .starts_with("colour:"));
    CHECK(config_error(R"({"cartan": {"matrix": [[2]], "rank": 1}, "lambda": {}, "nmax": 1})")
              .starts_with("cartan.rank:"));
    CHECK(config_error(R"({"cartan": {"matrix": [[2]]}, "lambda": {"7": 1}, "nmax": 1})").starts_with("lambda.7:"));
    CHECK(config_error(R"({"cartan": {"matrix": [[2]]}, "lambda": {}, "nmax": 1, "output": "csv"})")
              .starts_with("output:"));
    CHECK(config_error(R"({"cartan": {"matrix": [[2]]}, "lambda": {}})").find("beta") != std::string::npos);
    CHECK(config_error(R"({"cartan": {"matrix": [[2]]}, "lambda": {}, "nmax": 1, "beta": {}})") != "");
    CHECK(config_error("{not json").starts_with("config:"));
}

TEST_CASE("duplicate labels and negative levels are rejected") {
    CHECK(config_error(R"({"cartan": {"labels": ["x", "x"], "matrix": [[2, -1], [-1, 2]]}, "lambda": {}, "nmax": 1})")
              .starts_with("cartan.labels:"));
    std::string neg = config_error(R"({"cartan": {"matrix": [[2]]}, "lambda": {"1": -1}, "nmax": 1})");
    CHECK(neg.starts_with("lambda.1:"));
    CHECK(neg.find("dominant") != std::string::npos);
}

TEST_CASE("inhomogeneous q_coeffs name the pair and the exponents") {
    std::string e = config_error(R"({"cartan": {"labels": ["a", "b"], "matrix": [[2, -1], [-1, 2]]},
        "q_coeffs": {"a,b": [[1, 0, 1, 1], [1, 1, 3, 1]]}, "lambda": {"a": 1}, "nmax": 1})");
    CHECK(e.starts_with("q_coeffs:"));
    CHECK(e.find("a,b") != std::string::npos);
    CHECK(e.find("(1,1)") != std::string::npos);
    std::string asym = config_error(R"({"cartan": {"labels": ["a", "b"], "matrix": [[2, -1], [-1, 2]]},
        "q_coeffs": {"a,b": [[1, 0, 1, 1], [0, 1, 1, 1]], "b,a": [[1, 0, 1, 1], [0, 1, 2, 1]]},
        "lambda": {"a": 1}, "nmax": 1})");
    CHECK(asym.find("not symmetric") != std::string::npos);
}

TEST_CASE("GCM violation exits 2 with the axiom named") {
    TempDir t;
    auto path = t.write("bad.json", R"({"cartan": {"labels": ["1", "2"], "matrix": [[2, -1], [0, 2]]},
                                        "lambda": {"1": 1}, "nmax": 1})");
    auto r = invoke({"--config", path, "cyclotomic"});
    CHECK(r.code == 2);
    CHECK(r.err.find("a_ij = 0 iff a_ji = 0") != std::string::npos);
    CHECK(r.err.find("cartan.matrix") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    TempDir t;
    auto path = t.write("a.json", kA1Level2);
    CHECK(invoke({"--config", path, "frobnicate"}).code == 2);
    CHECK(invoke({"--config", path, "check", "nonsense"}).code == 2);
    CHECK(invoke({"cyclotomic"}).code == 2);
    CHECK(invoke({"--config", (t.path / "missing.json").string(), "cyclotomic"}).code == 2);
    CHECK(invoke({"--config", path, "--jobs", "x", "check"}).code == 2);
}

TEST_CASE("cyclotomic table for A1 level 2 at alpha") {
    TempDir t;
    auto r = invoke({"--config", t.write("a.json", kA1Level2), "cyclotomic"});
    CHECK(r.code == 0);
    CHECK(r.out.find("beta\tmu\tnu\tdim\tdim_q\n") != std::string::npos);
    CHECK(r.out.find("(1)\t*\t*\t2\t1 + q^2\n") != std::string::npos);
}

TEST_CASE("TSV prints Laurent polynomials in ascending exponents") {
    LaurentPoly p = LaurentPoly(2, 5) + LaurentPoly(-1, -2) + LaurentPoly(3);
    Table tab{"t", {"p"}, {{p}}};
    CHECK(emit_tsv({tab}) == "# t\np\n-q^-2 + 3 + 2q^5\n");
    Json j = tables_json({tab});
    CHECK(j["t"]["rows"][0][0] == Json({{"-2", -1}, {"0", 3}, {"5", 2}}));
}

TEST_CASE("check all on A1 level 1 through height 2 passes") {
    TempDir t;
    auto r = invoke({"--config", t.write("a.json", kA1Level1), "check", "all", "--json"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    REQUIRE(!j["reports"].empty());
    for (auto& rep : j["reports"]) CHECK(rep["status"] == "pass");
    CHECK(j["summary"]["failed"] == 0);
}

TEST_CASE("compare and gram tables for A2") {
    TempDir t;
    auto path = t.write("a2.json", kA2);
    auto c = invoke({"--config", path, "compare"});
    CHECK(c.code == 0);
    CHECK(c.out.find("fail") == std::string::npos);
    auto g = invoke({"--config", path, "gram", "--json"});
    CHECK(g.code == 0);
    Json j = Json::parse(g.out);
    // weight Lambda_1 - alpha_a - alpha_b: f_a f_b v vanishes, f_b f_a v does not
    bool found = false;
    for (auto& row : j["gram_rank"]["rows"])
        if (row[0] == "(1,1)") {
            CHECK(row[1] == 2);
            CHECK(row[2] == 1);
            found = true;
        }
    CHECK(found);
}

TEST_CASE("basis tables respect the degree cap") {
    TempDir t;
    auto r = invoke({"--config", t.write("a.json", kA1Level1), "basis", "--degree-cap", "2", "--json"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    // R(2 alpha) = span tau^{0,1} x1^a x2^b: degrees -2, 0, 2 hold 1, 3, 5 monomials
    std::map<int, long long> counts;
    for (auto& row : j["basis_counts"]["rows"])
        if (row[0] == "(2)") counts[row[1].get<int>()] = row[2].get<long long>();
    CHECK(counts == std::map<int, long long>{{-2, 1}, {0, 3}, {2, 5}});
}

TEST_CASE("sha256 matches the published test vector") {
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("cache hit reproduces identical structures") {
    TempDir t;
    auto D = CartanDatum::build({{2, -1}, {-1, 2}});
    QSpec q = default_qspec(D);
    DominantWeight lam{{1, 1}};
    RootCombo beta{{1, 1}};

    Context plain(D, q);
    auto built = plain.cyc(lam, beta);

    auto store = std::make_shared<DiskCache>(t.path / "c", D, q);
    Context first(D, q);
    first.set_store(store);
    first.cyc(lam, beta);
    CHECK(store->misses() == 1);
    CHECK(DiskCache::stat(t.path / "c").entries == 1);

    Context second(D, q);
    second.set_store(store);
    auto loaded = second.cyc(lam, beta);
    CHECK(store->hits() == 1);
    CHECK(loaded->basis() == built->basis());
    CHECK(loaded->ideal_relations() == built->ideal_relations());
    CHECK(loaded->graded_dim() == built->graded_dim());
    Elem x = built->klr().x(0, built->seqs());
    Elem tau = built->klr().tau(0, built->seqs());
    CHECK(loaded->multiply(x, tau) == built->multiply(x, tau));
}

TEST_CASE("cache keys separate data and schema mismatch is a miss") {
    TempDir t;
    auto D = CartanDatum::build({{2}});
    QSpec q = default_qspec(D);
    DiskCache cache(t.path, D, q);
    auto R = std::make_shared<const KLRAlgebra>(D, q, 2);
    const std::string k2 = cache.key(*R, DominantWeight{{2}}, RootCombo{{2}});
    CHECK(k2.size() == 64);
    CHECK(k2 != cache.key(*R, DominantWeight{{3}}, RootCombo{{2}}));
    auto D2 = CartanDatum::build({{2, -1}, {-1, 2}});
    DiskCache other(t.path, D2, default_qspec(D2));
    auto R2 = std::make_shared<const KLRAlgebra>(D2, default_qspec(D2), 2);
    CHECK(other.key(*R2, DominantWeight{{2, 0}}, RootCombo{{2, 0}}) != k2);

    CycAlgebra A(R, DominantWeight{{2}}, RootCombo{{2}});
    cache.save(A);
    REQUIRE(cache.load(R, DominantWeight{{2}}, RootCombo{{2}}));

    Json j;
    std::ifstream(cache.entry_path(k2)) >> j;
    j["schema"] = DiskCache::kSchemaVersion + 1;
    std::ofstream(cache.entry_path(k2)) << j.dump();
    CHECK(!cache.load(R, DominantWeight{{2}}, RootCombo{{2}}));

    std::ofstream(cache.entry_path(k2)) << "{truncated";
    CHECK(!cache.load(R, DominantWeight{{2}}, RootCombo{{2}}));
    CHECK(cache.hits() == 1);
    CHECK(cache.misses() == 2);
}

TEST_CASE("cache on or off leaves output unchanged") {
    TempDir t;
    auto path = t.write("a2.json", kA2);
    auto dir = (t.path / "cache").string();
    auto off = invoke({"--config", path, "check", "all", "--json"});
    auto cold = invoke({"--config", path, "check", "all", "--json", "--cache-dir", dir});
    auto warm = invoke({"--config", path, "check", "all", "--json", "--cache-dir", dir});
    REQUIRE(off.code == 0);
    CHECK(cold.code == 0);
    CHECK(warm.code == 0);
    CHECK(strip_timing(Json::parse(off.out)).dump() == strip_timing(Json::parse(cold.out)).dump());
    CHECK(strip_timing(Json::parse(off.out)).dump() == strip_timing(Json::parse(warm.out)).dump());
    CHECK(invoke({"--config", path, "cyclotomic", "--cache-dir", dir}).out == invoke({"--config", path, "cyclotomic"}).out);

    auto stat = invoke({"cache", "stat", "--cache-dir", dir, "--json"});
    CHECK(stat.code == 0);
    CHECK(Json::parse(stat.out)["cache"]["rows"][0][1].get<int>() > 0);
    setenv("KLR_CACHE_DIR", dir.c_str(), 1);
    auto cleared = invoke({"cache", "clear"});
    unsetenv("KLR_CACHE_DIR");
    CHECK(cleared.code == 0);
    CHECK(DiskCache::stat(dir).entries == 0);
    CHECK(invoke({"cache", "stat"}).code == 2);
}

TEST_CASE("--check selects named checks") {
    TempDir t;
    auto r = invoke({"--config", t.write("a.json", kA1Level2), "check", "--check", "sl2", "--check", "exact", "--json"});
    CHECK(r.code == 0);
    std::set<std::string> seen;
    Json j = Json::parse(r.out);
    for (auto& rep : j["reports"]) seen.insert(rep["check"].get<std::string>());
    CHECK(seen == std::set<std::string>{"exact", "sl2"});
}
