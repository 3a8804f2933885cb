#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "stratos/cli.hpp"
#include "stratos/format.hpp"
#include "stratos/sequent.hpp"

using namespace stratos;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
    std::filesystem::path p = std::filesystem::temp_directory_path() / name;
    std::ofstream f(p);
    f << text;
    return p;
}

}  // namespace

TEST_CASE("check distinguishes input errors from success") {
    Run ok = cli({"check", "--expr", "a@2 in b@3"});
    CHECK(ok.code == 0);
    CHECK(ok.out == "stratified\n");
    Run bad = cli({"check", "--expr", "a@2 in c@4"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("error:") == 0);
    Run syntax = cli({"check", "--expr", "a@2 in"});
    CHECK(syntax.code == 2);
    Run tst = cli({"check", "--expr", "a@0 in b@1", "--tst"});
    CHECK(tst.code == 2);
    CHECK(cli({"check", "--expr", "a@0 in b@1"}).code == 0);
}

TEST_CASE("check reads files line by line") {
    auto p = write_temp("stratos_check.sst", "# comment\na@2 in b@3\n\nb@3 in c@4\n");
    Run r = cli({"check", "--file", p.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "stratified\nstratified\n");
    std::filesystem::remove(p);
}

TEST_CASE("infer reports the assignment") {
    Run r = cli({"infer", "--expr", "x in y"});
    CHECK(r.code == 0);
    CHECK(r.out.find("var x @ 1\n") != std::string::npos);
    CHECK(r.out.find("var y @ 2\n") != std::string::npos);
    CHECK(r.out.find("formula: x@1 in y@2\n") != std::string::npos);
    Run anchored = cli({"infer", "--expr", "x in y", "--anchor", "4"});
    CHECK(anchored.out.find("var x @ 4\n") != std::string::npos);
    Run cyc = cli({"infer", "--expr", "a in a"});
    CHECK(cyc.code == 2);
    CHECK(cyc.err.find("cycle") != std::string::npos);
}

TEST_CASE("interp prints internal syntax in both formats") {
    Run r = cli({"interp", "--expr", "forall a@1. a@1 = a@1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("all [") == 0);
    Run t = cli({"interp", "--expr", "a@1 in { b@1 | bot }", "--format", "tree"});
    CHECK(t.code == 0);
    CHECK(t.out == "[\"neg\",[\"and\",[]]]\n");
}

TEST_CASE("subst applies trailing specs") {
    Run r = cli({"subst", "--expr", "elt(atm(b@0), a@1) [a@1 := full@1]"});
    CHECK(r.code == 0);
    CHECK(r.out == "top\n");
    Run s = cli({"subst", "--expr", "atm(a@1) [a@1 := empty@1]"});
    CHECK(s.code == 0);
    CHECK(s.out == "empty@1\n");
    Run theta = cli({"subst", "--expr", "elt(atm(b@1), a@2) [a@1 :=theta full@1]"});
    CHECK(theta.code == 0);
    CHECK(theta.out == "top\n");
    CHECK(cli({"subst", "--expr", "atm(a@1)"}).code == 2);
}

TEST_CASE("sat evaluates over a model file") {
    CHECK(cli({"sat", "--expr", "top"}).code == 0);
    Run f = cli({"sat", "--expr", "bot"});
    CHECK(f.code == 1);
    CHECK(f.out == "false\n");
    auto p = write_temp("stratos_model.sst",
                        "prepoint\n# a fact and a pushed substitution\n"
                        "a@1 <- atm(b@0)\namgis c@1 := full@1\n");
    Run r = cli({"sat", "--expr", "elt(atm(b@0), a@1)", "--file", p.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "true\n");
    Run q = cli({"sat", "--expr", "elt(atm(b@0), c@1)", "--file", p.string()});
    CHECK(q.code == 0);
    std::filesystem::remove(p);
}

TEST_CASE("prove emits derivations that re-check") {
    Run r = cli({"prove", "--expr", "|- (X -> X)", "--depth", "3"});
    CHECK(r.code == 0);
    DerivPtr d = parse_derivation(r.out);
    CHECK(check_derivation(d));
    Run again = cli({"prove", "--expr", "|- (X -> X)", "--depth", "3"});
    CHECK(again.out == r.out);
    Run no = cli({"prove", "--expr", "|- bot", "--depth", "2"});
    CHECK(no.code == 1);
    CHECK(no.out == "no derivation within depth 2\n");
    Run seq = cli({"prove", "--expr", "X, Y |- X"});
    CHECK(seq.code == 0);
}

TEST_CASE("checkproof and cutfree consume derivation files") {
    Run r = cli({"prove", "--expr", "|- (X -> X)", "--depth", "3"});
    REQUIRE(r.code == 0);
    auto p = write_temp("stratos_proof.sst", r.out);
    CHECK(cli({"checkproof", "--file", p.string()}).code == 0);
    CHECK(cli({"checkproof", "--file", p.string()}).out == "valid derivation\n");
    auto bad = write_temp("stratos_bad.sst", "ax | principal: X | seq: X |- Y\n");
    Run b = cli({"checkproof", "--file", bad.string()});
    CHECK(b.code == 1);
    CHECK(b.out.find("invalid derivation:") == 0);

    std::string cut =
        "cut | principal: X | seq: X |- X\n"
        "  ax | principal: X | seq: X |- X\n"
        "  ax | principal: X | seq: X |- X\n";
    auto c = write_temp("stratos_cut.sst", cut);
    Run e = cli({"cutfree", "--file", c.string()});
    CHECK(e.code == 0);
    DerivPtr out = parse_derivation(e.out);
    CHECK(cut_free(out));
    CHECK(check_derivation(out));
    std::filesystem::remove(p);
    std::filesystem::remove(bad);
    std::filesystem::remove(c);
}

TEST_CASE("theory queries bounded derivability") {
    auto p = write_temp("stratos_theory.sst", "theta-closed\neq: atm(a@0) == full@0\n");
    Run info = cli({"theory", "--file", p.string()});
    CHECK(info.code == 0);
    CHECK(info.out == "theory: 1 axiom, theta-closed\n");
    Run hit = cli({"theory", "--file", p.string(), "--expr", "atm(a@0) == full@0", "--depth", "1"});
    CHECK(hit.code == 0);
    CHECK(hit.out.find("axiom") != std::string::npos);
    Run shifted =
        cli({"theory", "--file", p.string(), "--expr", "atm(a@1) == full@1", "--depth", "1"});
    CHECK(shifted.code == 0);
    Run miss = cli({"theory", "--file", p.string(), "--expr", "empty@0 == full@0", "--depth", "2"});
    CHECK(miss.code == 1);
    CHECK(miss.out == "not derivable within depth 2\n");
    std::filesystem::remove(p);
}

TEST_CASE("laws runs deterministic suites") {
    Run r = cli({"laws", "--suite", "constants", "--n", "5", "--seed", "11"});
    CHECK(r.code == 0);
    CHECK(r.out.find("suite constants | seed 11 | n 5\n") == 0);
    CHECK(r.out.find("law constants.top_bot: OK (5 instances)\n") != std::string::npos);
    Run again = cli({"laws", "--suite", "constants", "--n", "5", "--seed", "11"});
    CHECK(again.out == r.out);
    CHECK(cli({"laws", "--suite", "nonesuch"}).code == 2);
}

TEST_CASE("flag errors exit 2") {
    CHECK(cli({"check", "--bogus"}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"check"}).code == 2);  // no input
    CHECK(cli({"laws", "--suite", "sigma", "--n", "xyz"}).code == 2);
}

TEST_CASE("fuel override via the environment") {
    std::uint64_t sig = sigma_fuel();
    std::uint64_t cut = cut_fuel();
    setenv("STRATOS_FUEL", "nonsense", 1);
    CHECK(cli({"sat", "--expr", "top"}).code == 2);
    setenv("STRATOS_FUEL", "100000", 1);
    CHECK(cli({"sat", "--expr", "top"}).code == 0);
    CHECK(sigma_fuel() == 100000);
    unsetenv("STRATOS_FUEL");
    set_sigma_fuel(sig);
    set_cut_fuel(cut);
}
