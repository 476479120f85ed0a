// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Usage: acceptance <path-to-cli-binary> <fixtures-dir>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "patchalg/verify.hpp"

using namespace patchalg;
using nlohmann::json;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool pass, const std::string& note = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion, what.c_str(),
                note.empty() ? "" : " -- ", note.c_str());
    if (!pass) ++failures;
}

bool all_pass(const std::vector<Certificate>& certs, std::string& first_failure) {
    for (const auto& c : certs)
        if (!c.pass) {
            first_failure = c.name + ": " + to_json(c).dump();
            return false;
        }
    return true;
}

long long cases_of(const std::vector<Certificate>& certs, const std::string& name) {
    for (const auto& c : certs)
        if (c.name == name) return c.details.value("cases", 0);
    return -1;
}

int run_command(const std::string& cmd) {
    int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json parse_report(const std::string& path) {
    json doc = json::parse(slurp(path), nullptr, false);
    if (doc.is_discarded()) return json();
    doc.erase("timing_ms");
    return doc;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: acceptance <cli-binary> <fixtures-dir>\n");
        return 2;
    }
    std::string cli = argv[1];
    std::string fixtures = argv[2];
    std::string tmp = "acceptance_tmp";
    std::system(("mkdir -p " + tmp).c_str());

    VerifyOptions opt;
    opt.seed = 17;
    opt.cap = 4096;
    auto corpus = default_corpus();
    std::string why;

    // 1. Boolean layer
    {
        auto certs = check_boolean_layer();
        bool ok = all_pass(certs, why);
        ok = ok && cases_of(certs, "boolean.ideal-join-cover") > 0;
        report(1, "Boolean layer: join-cover criterion, maximal-ideal facts, Stone round trips",
               ok, ok ? "" : why);
    }

    // 2. Presheaf layer
    {
        auto certs = check_presheaf_layer(corpus, opt);
        bool ok = all_pass(certs, why);
        long long valid_cases = cases_of(certs, "presheaf.random-valid");
        long long mutant_cases = cases_of(certs, "presheaf.mutants-fail");
        ok = ok && valid_cases >= 200 * static_cast<long long>(corpus.size());
        ok = ok && mutant_cases >= 200;
        report(2,
               "presheaf layer: 200 seeded presheaves per ring validate both ways, sections "
               "recovered from stalks, mutants fail",
               ok, ok ? "" : why);
    }

    // 3. Equivalence of bundles and presheaves
    {
        auto certs = check_equivalence(opt);
        bool ok = all_pass(certs, why);
        ok = ok && cases_of(certs, "equivalence.functoriality") >= 100;
        report(3, "functor equivalence: exhaustive round trips (|Y| <= 3) and functoriality",
               ok, ok ? "" : why);
    }

    // 4. Patch space correspondence
    {
        auto certs = check_correspondence(opt);
        bool ok = all_pass(certs, why);
        report(4, "patch spaces correspond to distinguished presheaves over gf(16) and gf(64)",
               ok, ok ? "" : why);
    }

    std::vector<AlgebraCase> algebras = build_algebra_corpus(corpus, opt);

    // 5. Patch algebra core
    {
        auto certs = check_algebra_core(algebras, opt);
        bool ok = all_pass(certs, why);
        ok = ok && cases_of(certs, "algebra.membership-negative") >= 500;
        report(5,
               "patch algebra core: evaluation bijection, decomposition uniqueness, negative "
               "membership, colon recovery, stalk projections",
               ok, ok ? "" : why);
    }

    // 6. Pierce spectrum theorem
    {
        auto certs = check_pierce_theorem(algebras, opt);
        bool ok = all_pass(certs, why);
        report(6,
               "Pierce spectrum and stalks certified over gf(16)/gf(64) subspaces; "
               "decomposable fixture flagged",
               ok, ok ? "" : why);
    }

    // 7. Structure of patch algebras
    {
        auto certs = check_structure(algebras, opt);
        bool ok = all_pass(certs, why);
        report(7,
               "structure over field ambients: Rickart, semihereditary, clean, Gelfand, "
               "spectra bijections; dual-number fixture is clean but not Rickart",
               ok, ok ? "" : why);
    }

    // 8. CLI: determinism, mutant fixture, error codes, runtime
    {
        bool ok = true;
        std::string note;
        auto t0 = std::chrono::steady_clock::now();
        int rc1 = run_command(cli + " verify --seed 17 --json " + tmp + "/verify1.json > " + tmp +
                              "/verify1.out 2>&1");
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              t0)
                        .count();
        if (rc1 != 0) {
            ok = false;
            note = "default verify exited " + std::to_string(rc1);
        }
        if (ms > 60000.0) {
            ok = false;
            note = "verify took " + std::to_string(ms) + " ms";
        }
        int rc2 = run_command(cli + " verify --seed 17 --json " + tmp + "/verify2.json > " + tmp +
                              "/verify2.out 2>&1");
        if (rc2 != 0) ok = false;
        json r1 = parse_report(tmp + "/verify1.json");
        json r2 = parse_report(tmp + "/verify2.json");
        if (r1.is_null() || r1.dump() != r2.dump()) {
            ok = false;
            note = "verify verdicts differ between identical runs";
        }
        int rc3 = run_command(cli + " verify " + fixtures + "/corpus_with_mutant.json --json " +
                              tmp + "/verify3.json > " + tmp + "/verify3.out 2>&1");
        if (rc3 != 1) {
            ok = false;
            note = "mutant corpus exited " + std::to_string(rc3) + ", wanted 1";
        }
        std::string out3 = slurp(tmp + "/verify3.out");
        if (out3.find("intersection law") == std::string::npos) {
            ok = false;
            note = "mutant failure does not name the violated law";
        }
        int rc4 = run_command(cli + " ring " + fixtures + "/malformed.json > /dev/null 2>&1");
        if (rc4 != 2) {
            ok = false;
            note = "malformed spec exited " + std::to_string(rc4) + ", wanted 2";
        }
        int rc5 = run_command(cli + " ring " + fixtures + "/zmod1.json > /dev/null 2>&1");
        if (rc5 != 3) {
            ok = false;
            note = "zero ring exited " + std::to_string(rc5) + ", wanted 3";
        }
        int rc6 = run_command(cli + " ring " + fixtures + "/gf_big.json --cap 8 > /dev/null 2>&1");
        if (rc6 != 4) {
            ok = false;
            note = "cap overflow exited " + std::to_string(rc6) + ", wanted 4";
        }
        report(8, "CLI verify: deterministic exit 0 on the default corpus, mutant fixture exits "
                  "1 naming the violated law, schema/admissibility/cap exit codes",
               ok, note);
    }

    if (failures == 0) std::printf("acceptance: all criteria passed\n");
    return failures == 0 ? 0 : 1;
}
