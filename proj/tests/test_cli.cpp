#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <random>

#include "confalg/manifest.hpp"
#include "examples.hpp"

using namespace confalg;
using namespace confalg::examples;

namespace {

std::string data_dir() {
    const char* d = std::getenv("CONFALG_DATA_DIR");
    return d ? d : "data";
}

std::string cli() {
    const char* c = std::getenv("CONFALG_CLI");
    REQUIRE(c != nullptr);
    return c;
}

struct RunResult {
    int code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = cli() + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[512];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string tmp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("checks on the bundled manifests pass") {
    std::string d = data_dir();
    CHECK(run("check-lie " + d + "/virasoro.json").code == 0);
    CHECK(run("check-assoc " + d + "/cur-mat2.json").code == 0);
    CHECK(run("check-assoc " + d + "/cur-dual-numbers.json").code == 0);
    CHECK(run("check-ainf " + d + "/phi-extension.json --up-to 5").code == 0);
    CHECK(run("mc-check " + d + "/phi-extension.json --up-to 5").code == 0);
    CHECK(run("cocycle " + d + "/skeletal-3cocycle.json").code == 0);
    CHECK(run("check-2term " + d + "/two-algebra-roundtrip.json").code == 0);
    CHECK(run("roundtrip " + d + "/two-algebra-roundtrip.json").code == 0);
    RunResult r = run("roundtrip " + d +
                      "/two-algebra-roundtrip.json --name skeletal-two-algebra");
    CHECK(r.code == 0);
    CHECK(r.output.find("hexagon: pass") != std::string::npos);
}

TEST_CASE("a broken multiplication is reported with a witness") {
    Manifest m = parse_manifest(data_dir() + "/cur-mat2.json");
    ConfMap mult = m.map("mult");
    mult.set_entry({"e11", "e12"}, "e12", Poly::zero());
    mult.set_entry({"e11", "e12"}, "e21", Poly::one());
    Manifest bad;
    bad.add_module("A", m.module("A"));
    bad.add_map("mult", mult, {"A", "A"}, "A");
    bad.add_structure("broken", {{"kind", "assoc"},
                                 {"module", "A"},
                                 {"mult", "mult"}});
    std::string path = tmp_path("confalg-cli-broken.json");
    write_manifest(bad, path);

    RunResult r = run("check-assoc " + path);
    CHECK(r.code == 1);
    CHECK(r.output.find("fails on (") != std::string::npos);
    CHECK(r.output.find("difference") != std::string::npos);
}

TEST_CASE("transfer emits the requested products") {
    std::string out = tmp_path("confalg-cli-transfer.json");
    RunResult r = run("transfer " + data_dir() +
                      "/contraction-rank3.json --up-to 4 --out " + out);
    CHECK(r.code == 0);

    Manifest m = parse_manifest(out);
    AInfStructure t = manifest_ainf(m, "transferred");
    CHECK(t.mults.count(2) == 1);
    CHECK(t.mults.count(3) == 1);
    CHECK(t.mults.count(4) == 1);
    CHECK_FALSE(t.mults.at(2).is_zero());
    CHECK_FALSE(t.mults.at(3).is_zero());
    CHECK(check_ainf(t, 5).pass);

    // binary and general modes agree on a binary input
    std::string out2 = tmp_path("confalg-cli-transfer-general.json");
    CHECK(run("transfer " + data_dir() +
              "/contraction-rank3.json --up-to 4 --general --out " + out2)
              .code == 0);
    Manifest m2 = parse_manifest(out2);
    CHECK(manifest_ainf(m2, "transferred") == t);
}

TEST_CASE("skeletal builds a valid structure and rejects non-cocycles") {
    std::string out = tmp_path("confalg-cli-skeletal.json");
    RunResult ok = run("skeletal " + data_dir() +
                       "/skeletal-3cocycle.json --out " + out);
    CHECK(ok.code == 0);
    Manifest m = parse_manifest(out);
    CHECK(check_ainf(manifest_ainf(m, "skeletal"), 5).pass);

    // perturb theta into a non-cocycle
    Manifest src = parse_manifest(data_dir() + "/skeletal-3cocycle.json");
    ConfMap theta = src.map("theta");
    theta.add_entry({"u", "u", "u"}, "u", Poly::L(1));
    Manifest bad;
    bad.add_module("A", src.module("A"));
    bad.add_map("mult", src.map("mult"), {"A", "A"}, "A");
    bad.add_map("left", src.map("left"), {"A", "A"}, "A");
    bad.add_map("right", src.map("right"), {"A", "A"}, "A");
    bad.add_map("theta", theta, {"A", "A", "A"}, "A");
    for (const auto& [name, fields] : src.structures)
        bad.add_structure(name, fields);
    std::string path = tmp_path("confalg-cli-noncocycle.json");
    write_manifest(bad, path);
    CHECK(run("cocycle " + path).code == 1);
    CHECK(run("skeletal " + path).code == 1);
}

TEST_CASE("functor commands") {
    std::string d = data_dir();
    std::string out = tmp_path("confalg-cli-cells.json");
    CHECK(run("functor-s " + d + "/two-algebra-roundtrip.json --out " + out)
              .code == 0);
    Manifest cells = parse_manifest(out);
    Manifest orig = parse_manifest(d + "/two-algebra-roundtrip.json");
    CHECK(manifest_two_algebra(cells, cells.first_of_kind("two_algebra")) ==
          manifest_two_algebra(orig, "skeletal-two-algebra"));

    std::string back = tmp_path("confalg-cli-two-term.json");
    CHECK(run("functor-t " + d + "/two-algebra-roundtrip.json --out " + back)
              .code == 0);
    Manifest two = parse_manifest(back);
    CHECK(manifest_two_term(two, two.first_of_kind("two_term")) ==
          manifest_two_term(orig, "skeletal-two-term"));
}

TEST_CASE("delta, cocycle and hh-ranks") {
    std::string d = data_dir();
    RunResult ranks =
        run("hh-ranks " + d + "/skeletal-3cocycle.json --arity 2 --dmax 1 --lmax 1");
    CHECK(ranks.code == 0);
    CHECK(ranks.output.find("domain 32, rank 25, kernel 7") !=
          std::string::npos);

    std::string out = tmp_path("confalg-cli-delta.json");
    RunResult delta = run("delta " + d +
                          "/skeletal-3cocycle.json --out " + out);
    CHECK(delta.code == 0);
    CHECK(delta.output.find(": 0") != std::string::npos);

    // random cochains are reproducible from the seed
    std::string flags = " --seed 7 --arity 2 --dmax 1 --lmax 1";
    // the bundled manifest already has a cochain, so strip it first
    Manifest src = parse_manifest(d + "/skeletal-3cocycle.json");
    Manifest b;
    b.add_module("A", src.module("A"));
    b.add_map("mult", src.map("mult"), {"A", "A"}, "A");
    b.add_map("left", src.map("left"), {"A", "A"}, "A");
    b.add_map("right", src.map("right"), {"A", "A"}, "A");
    b.add_structure("cur-dual", src.structure("cur-dual"));
    b.add_structure("adjoint", src.structure("adjoint"));
    std::string path = tmp_path("confalg-cli-bimodule.json");
    write_manifest(b, path);
    RunResult r1 = run("delta " + path + flags);
    RunResult r2 = run("delta " + path + flags);
    CHECK(r1.code == 0);
    CHECK(r1.output == r2.output);
    CHECK(run("delta " + path).code == 2);  // no cochain, no seed
}

TEST_CASE("lie-delta, ainf-delta and semidirect") {
    // Virasoro adjoint module plus a seeded cochain
    LieConfAlgebra v = virasoro();
    ConformalLModule ad = adjoint_lmodule(v);
    std::mt19937 rng(5);
    Cochain c = random_cochain(v.module, v.module, 2, 1, 1, rng);
    c.map = symmetrize(c.map, SymMode::skew);
    Manifest lm;
    manifest_put_lie(lm, "vir", v);
    lm.add_map("action", ad.action, {"vir.module", "vir.module"}, "vir.module");
    lm.add_structure("adjoint", {{"kind", "representation"},
                                 {"base", "vir"},
                                 {"module", "vir.module"},
                                 {"action", "action"}});
    manifest_put_cochain(lm, "phi", v.module, v.module, c);
    std::string lpath = tmp_path("confalg-cli-lmod.json");
    write_manifest(lm, lpath);
    std::string lout = tmp_path("confalg-cli-lie-delta.json");
    CHECK(run("lie-delta " + lpath + " --out " + lout).code == 0);
    Manifest lres = parse_manifest(lout);
    CHECK(manifest_cochain(lres, "delta") == lie_delta(ad, c));

    // dual-number current algebra with its adjoint as an ainf representation
    AInfStructure base = from_assoc(cur_dual());
    ConformalBimodule adj = adjoint_bimodule(cur_dual());
    Manifest am;
    manifest_put_ainf(am, "base", base);
    am.add_map("act1", adj.right, {"base.module", "base.module"},
               "base.module");
    am.add_map("act2", adj.left, {"base.module", "base.module"},
               "base.module");
    am.add_structure("rep",
                     {{"kind", "representation"},
                      {"base", "base"},
                      {"module", "base.module"},
                      {"actions", {{"2", {"act1", "act2"}}}}});
    std::mt19937 rng2(9);
    Cochain phi = random_cochain(base.module, adj.module, 2, 1, 1, rng2);
    manifest_put_cochain(am, "phi", base.module, adj.module, phi);
    std::string apath = tmp_path("confalg-cli-arep.json");
    write_manifest(am, apath);
    CHECK(run("ainf-delta " + apath).code == 0);

    std::string sout = tmp_path("confalg-cli-semidirect.json");
    CHECK(run("semidirect " + apath + " --up-to 4 --out " + sout).code == 0);
    Manifest sres = parse_manifest(sout);
    AInfStructure sd = manifest_ainf(sres, "semidirect");
    CHECK(check_ainf(sd, 4).pass);
    CHECK(sd.module.rank() == 4);
}

TEST_CASE("skew-symmetrization through the CLI") {
    std::string out = tmp_path("confalg-cli-skew.json");
    CHECK(run("skew " + data_dir() + "/cur-mat2.json --out " + out).code == 0);
    Manifest m = parse_manifest(out);
    LieConfAlgebra l = manifest_lie(m, m.first_of_kind("lie"));
    CHECK(check_lie(l).pass);
    CHECK(l.bracket == skew_symmetrize_assoc(cur_mat2()).bracket);

    std::string out2 = tmp_path("confalg-cli-skew-linf.json");
    CHECK(run("skew " + data_dir() + "/phi-extension.json --up-to 4 --out " +
              out2)
              .code == 0);
    Manifest m2 = parse_manifest(out2);
    CHECK(check_linf(manifest_linf(m2, m2.first_of_kind("linf")), 4).pass);
}

TEST_CASE("input errors exit with code 2") {
    std::string d = data_dir();
    CHECK(run("check-ainf " + d + "/phi-extension.json").code == 2);
    CHECK(run("check-lie " + d + "/cur-mat2.json").code == 2);
    CHECK(run("check-lie /nonexistent/nowhere.json").code == 2);
    CHECK(run("no-such-command " + d + "/virasoro.json").code == 2);
    CHECK(run("hh-ranks " + d + "/skeletal-3cocycle.json").code == 2);

    // unknown generator named in the diagnostic
    std::string path = tmp_path("confalg-cli-badgen.json");
    std::FILE* f = std::fopen(path.c_str(), "w");
    std::fputs(R"({"modules": [{"name": "A", "generators": [["u", 0]]}],
                   "maps": [{"name": "f", "sources": ["A"], "target": "A",
                             "degree": 0,
                             "table": [[["ghost"], [["u", "1"]]]]}]})",
               f);
    std::fclose(f);
    RunResult r = run("check-assoc " + path);
    CHECK(r.code == 2);
    CHECK(r.output.find("ghost") != std::string::npos);
}
