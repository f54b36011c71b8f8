#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <liekit/json_io.hpp>

#include <cstdio>

using namespace liekit;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(LIEKIT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("json documents are byte-deterministic") {
    RootSystem a2 = build_root_system("A2");
    ChevalleyBasis cb(a2);
    std::string d1 = root_system_json(a2, &cb).dump(2);
    RootSystem again = build_root_system("A2");
    ChevalleyBasis cb2(again);
    std::string d2 = root_system_json(again, &cb2).dump(2);
    CHECK(d1 == d2);

    VermaWindow w1(a2, cb, Weight::fundamental_int({0, 0}), 4);
    VermaWindow w2(again, cb2, Weight::fundamental_int({0, 0}), 4);
    CHECK(window_payload(w1).dump() == window_payload(w2).dump());
}

TEST_CASE("window cache roundtrip") {
    RootSystem a2 = build_root_system("A2");
    ChevalleyBasis cb(a2);
    Weight lam = Weight::fundamental_int({0, 0});
    VermaWindow w(a2, cb, lam, 6);
    std::filesystem::path dir = std::filesystem::temp_directory_path() / "liekit-cache-test";
    std::filesystem::remove_all(dir);
    store_window_cache(dir, w);
    auto loaded = load_window_cache(dir, a2, lam, 6);
    REQUIRE(loaded.has_value());
    CHECK(loaded->dump() == window_payload(w).dump());

    // a different depth is a different key: miss
    CHECK_FALSE(load_window_cache(dir, a2, lam, 5).has_value());

    // corruption is detected via the checksum
    std::filesystem::path f = cache_path(dir, cache_key(a2, lam, 6));
    {
        std::ifstream is(f);
        std::string contents((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
        auto pos = contents.find("\"gram\"");
        REQUIRE(pos != std::string::npos);
        contents[contents.find('1', pos)] = '2';
        std::ofstream os(f);
        os << contents;
    }
    std::string warning;
    CHECK_FALSE(load_window_cache(dir, a2, lam, 6, &warning).has_value());
    CHECK(!warning.empty());
    std::filesystem::remove_all(dir);
}

TEST_CASE("cache keys include the code version") {
    RootSystem a2 = build_root_system("A2");
    std::string key = cache_key(a2, Weight::fundamental_int({1, 0}), 4);
    CHECK(key.find(kOrderTag) != std::string::npos);
    CHECK(key.find(kCodeVersion) != std::string::npos);
}

TEST_CASE("a version bump invalidates cached entries") {
    RootSystem a2 = build_root_system("A2");
    ChevalleyBasis cb(a2);
    Weight lam = Weight::fundamental_int({1, 0});
    VermaWindow w(a2, cb, lam, 4);
    std::filesystem::path dir = std::filesystem::temp_directory_path() / "liekit-cache-version";
    std::filesystem::remove_all(dir);
    store_window_cache(dir, w);
    // rewrite the entry under the same file name but an older key, as a
    // stale binary would have left it
    std::string key = cache_key(a2, lam, 4);
    std::filesystem::path f = cache_path(dir, key);
    std::ifstream is(f);
    Json doc = Json::parse(is);
    is.close();
    std::string stale = key;
    stale.replace(stale.find(kCodeVersion), std::string(kCodeVersion).size(), "liekit-0");
    doc["key"] = stale;
    {
        std::ofstream os(f);
        os << doc.dump(1) << "\n";
    }
    std::string warning;
    CHECK_FALSE(load_window_cache(dir, a2, lam, 4, &warning).has_value());
    CHECK(!warning.empty());
    std::filesystem::remove_all(dir);
}

TEST_CASE("cli: byte-identical output across runs") {
    RunResult a = run_cli("rootsys --type B2");
    RunResult b = run_cli("rootsys --type B2");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"schema\"") != std::string::npos);
}

TEST_CASE("cli: jh subcommand reproduces the sl2 example") {
    RunResult r = run_cli("jh --type GL2 --parabolic \"\" --verma-weight 0,0 --smooth trivial --depth 4");
    REQUIRE(r.exit_code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["total_length"] == 3);
    // same computation in the A1 fundamental convention
    RunResult r2 = run_cli("jh --type A1 --parabolic \"\" --verma-weight 0 --smooth trivial --depth 4");
    REQUIRE(r2.exit_code == 0);
    CHECK(Json::parse(r2.out)["total_length"] == 3);
}

TEST_CASE("cli: drinfeld subcommand") {
    RunResult r = run_cli("drinfeld --d 1 --r 0 --s 0");
    REQUIRE(r.exit_code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["bott"]["i0"] == 0);
    CHECK(doc["bott"]["h_dim"] == "1");
    CHECK(doc["total_constituents"] == 2);
}

TEST_CASE("cli: audit abcd finds the G2 counterexample") {
    RunResult r = run_cli("audit abcd --type G2 --gamma 2,1 --n 3");
    REQUIRE(r.exit_code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["inequality_holds"] == false);
    REQUIRE(doc["violations"].size() == 1);
    CHECK(doc["violations"][0]["sum"] == 2);
}

TEST_CASE("cli: domain errors exit 1 with a structured object") {
    RunResult r = run_cli("rootsys --type E5");
    CHECK(r.exit_code == 1);
    Json doc = Json::parse(r.out);
    CHECK(doc["kind"] == "error");
    CHECK(doc["error"]["category"] == "invalid_input");
}

TEST_CASE("cli: usage errors exit 2") {
    RunResult r = run_cli("rootsys --no-such-flag");
    CHECK(r.exit_code == 2);
    RunResult r2 = run_cli("");
    CHECK(r2.exit_code == 2);
}

TEST_CASE("cli: cold and warm cache paths emit identical documents") {
    std::filesystem::path dir = std::filesystem::temp_directory_path() / "liekit-cache-cli";
    std::filesystem::remove_all(dir);
    std::string args = "verma --type A2 --verma-weight 0,0 --depth 5 --cache-dir " + dir.string();
    RunResult cold = run_cli(args);
    RunResult warm = run_cli(args);
    REQUIRE(cold.exit_code == 0);
    REQUIRE(warm.exit_code == 0);
    CHECK(cold.out == warm.out);
    RunResult nocache = run_cli("verma --type A2 --verma-weight 0,0 --depth 5");
    CHECK(nocache.out == cold.out);
    std::filesystem::remove_all(dir);
}
