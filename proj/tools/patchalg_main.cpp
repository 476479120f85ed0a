// Command-line front end.
//
//   patchalg ring <spec.json>                 tables, idempotents, spectra, predicates
//   patchalg space <spec.json> --select ...   a subspace of the subring space
//   patchalg presheaf <file> [--select ...]   presheaf of a space, or a supplied one
//   patchalg algebra <file> [--select ...]    patch algebra with Pierce/structure reports
//   patchalg verify [corpus.json]             the theorem suites; exit 0 iff all pass
//
// Common flags: --json OUT, --dot OUT, --seed N, --cap N. The environment
// variable PATCHALG_CAP overrides the built-in cap; --cap overrides both.
// Exit codes: 0 ok, 1 verification failure, 2 schema error, 3 inadmissible
// input, 4 cap exceeded.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "patchalg/dot.hpp"
#include "patchalg/presheafspec.hpp"
#include "patchalg/report.hpp"
#include "patchalg/ringspec.hpp"
#include "patchalg/verify.hpp"

using nlohmann::json;
using namespace patchalg;

namespace {

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::schema: return 2;
        case ErrorKind::admissibility: return 3;
        case ErrorKind::structural: return 3;
        case ErrorKind::cap_exceeded: return 4;
        case ErrorKind::internal: return 1;
    }
    return 1;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), ErrorKind::schema, "cannot open file: " + path);
    json doc = json::parse(in, nullptr, false);
    require(!doc.is_discarded(), ErrorKind::schema, "malformed JSON in " + path);
    return doc;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    require(out.good(), ErrorKind::admissibility, "cannot write file: " + path);
    out << content;
}

void emit(const Report& rep, const std::string& json_path) {
    std::cout << rep.to_json().dump(2) << "\n";
    if (!json_path.empty()) write_file(json_path, rep.to_json().dump(2) + "\n");
}

std::size_t effective_cap(std::size_t cli_cap) {
    if (cli_cap != 0) return cli_cap;
    if (const char* env = std::getenv("PATCHALG_CAP")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        require(end && *end == '\0' && v > 0, ErrorKind::admissibility,
                "PATCHALG_CAP must be a positive integer");
        return static_cast<std::size_t>(v);
    }
    return kDefaultOpCap;
}

xmask_t parse_selection(const SubringSpace& sigma, const std::string& select) {
    if (select == "all") return sigma.all_mask();
    json sel = json::parse(select, nullptr, false);
    require(!sel.is_discarded() && sel.is_array(), ErrorKind::schema,
            "--select must be \"all\" or a JSON array of element lists");
    xmask_t mask = 0;
    for (const auto& arr : sel) {
        std::vector<elem_t> elems = parse_elem_list(arr, sigma.ring(), "selection");
        Subring s(sigma.ring(), elems);
        int idx = sigma.index_of(s);
        require(idx >= 0, ErrorKind::admissibility,
                "selection names a subset that is not a subring member: " + json(arr).dump());
        mask |= xmask_t(1) << idx;
    }
    return mask;
}

json subring_json(const Subring& s) {
    json elems = json::array();
    json labels = json::array();
    for (elem_t x : s.elements()) {
        elems.push_back(x);
        labels.push_back(s.ring().label(x));
    }
    return json{{"elements", elems}, {"labels", labels}, {"size", s.size()}};
}

json predicates_json(const Predicates& p) {
    return json{{"field", p.field},
                {"local", p.local},
                {"domain", p.domain},
                {"rickart", p.rickart},
                {"clean", p.clean},
                {"gelfand", p.gelfand},
                {"arithmetical", p.arithmetical},
                {"semihereditary", p.semihereditary},
                {"indecomposable", p.indecomposable}};
}

int cmd_ring(const std::string& spec_path, const std::string& json_path,
             const std::string& dot_path, std::size_t cap) {
    auto t0 = std::chrono::steady_clock::now();
    json spec = load_json(spec_path);
    FiniteRing R = ring_from_spec(spec);
    check_cap(R, cap, "ring report");

    Report rep;
    rep.command = "ring";
    rep.inputs = spec;
    json data;
    data["size"] = R.n();
    data["name"] = R.name();
    data["characteristic"] = R.characteristic();
    json labels = json::array();
    for (std::size_t a = 0; a < R.n(); ++a) labels.push_back(R.label(static_cast<elem_t>(a)));
    data["labels"] = labels;
    data["idempotents"] = idempotents(R);

    SubringSpace sigma = enumerate_subrings(R, cap);
    json subs = json::array();
    for (const Subring& s : sigma.members()) subs.push_back(subring_json(s));
    data["subrings"] = subs;
    data["subring_count"] = sigma.size();

    Spectra sp = spectra(R, cap);
    json primes = json::array();
    for (const RingIdeal& p : sp.primes) primes.push_back(p.elements());
    data["primes"] = primes;

    PierceData pd = pierce(R, cap);
    json stalks = json::array();
    for (const auto& q : pd.stalks) stalks.push_back(q.ring.n());
    data["pierce_stalk_sizes"] = stalks;
    data["predicates"] = predicates_json(predicates(R, cap));

    Certificate c;
    c.name = "ring.report";
    c.statement = "ring data computed with construction-time verification";
    c.pass = true;
    c.details = data;
    rep.certificates.push_back(std::move(c));
    rep.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (!dot_path.empty()) write_file(dot_path, dot_subring_lattice(sigma, R.name()));
    emit(rep, json_path);
    return 0;
}

int cmd_space(const std::string& spec_path, const std::string& select,
              const std::string& json_path, const std::string& dot_path, std::size_t cap) {
    auto t0 = std::chrono::steady_clock::now();
    json spec = load_json(spec_path);
    FiniteRing R = ring_from_spec(spec);
    SubringSpace sigma = enumerate_subrings(R, cap);
    xmask_t selected = parse_selection(sigma, select);
    SubringSpace X = subspace(sigma, selected);

    Report rep;
    rep.command = "space";
    rep.inputs = json{{"ring", spec}, {"select", select}};
    json data;
    json members = json::array();
    for (const Subring& s : X.members()) members.push_back(subring_json(s));
    data["members"] = members;
    auto check = is_patch_space(sigma, selected);
    data["patch_space"] = check.is_patch_space;
    data["finite_collapse"] = check.finite_collapse;
    json secs = json::object();
    for (xmask_t U = 0;; ++U) {
        secs[std::to_string(U)] = subring_json(sections(X, U));
        if (U == X.all_mask()) break;
    }
    data["sections"] = secs;

    Certificate c;
    c.name = "space.report";
    c.statement = "subspace data with patch-closure check";
    c.pass = true;
    c.details = data;
    rep.certificates.push_back(std::move(c));
    rep.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (!dot_path.empty()) write_file(dot_path, dot_subring_lattice(X, "selection"));
    emit(rep, json_path);
    return 0;
}

PatchPresheaf presheaf_from_inputs(const json& spec, const std::string& select, std::size_t cap,
                                   json& inputs_out) {
    if (spec.contains("ring")) {
        inputs_out = spec;
        return presheaf_from_spec(spec).presheaf;
    }
    FiniteRing R = ring_from_spec(spec);
    SubringSpace sigma = enumerate_subrings(R, cap);
    SubringSpace X = subspace(sigma, parse_selection(sigma, select));
    inputs_out = json{{"ring", spec}, {"select", select}};
    return presheaf_of_space(X);
}

int cmd_presheaf(const std::string& spec_path, const std::string& select,
                 const std::string& json_path, std::size_t cap) {
    auto t0 = std::chrono::steady_clock::now();
    json spec = load_json(spec_path);
    Report rep;
    rep.command = "presheaf";
    PatchPresheaf P = presheaf_from_inputs(spec, select, cap, rep.inputs);

    PresheafDiagnostics d = validate(P);
    require(d.ok, ErrorKind::admissibility,
            "presheaf invalid: " + d.message + " at pair (" + std::to_string(d.witness_e) + "," +
                std::to_string(d.witness_f) + ")");

    json data;
    data["atom_count"] = P.algebra().atoms();
    json secs = json::object();
    for (bmask_t e = 0; e < P.algebra().size(); ++e)
        secs[std::to_string(e)] = subring_json(P.section(e));
    data["sections"] = secs;
    json stalks = json::array();
    for (const Subring& s : all_stalks(P).members()) stalks.push_back(subring_json(s));
    data["stalks"] = stalks;
    DistinguishedResult dr = distinguished(P);
    data["distinguished"] = dr.ok;
    if (dr.ok)
        data["largest_indices"] = dr.e_t;
    else
        data["distinguished_violation"] = dr.violated;

    Certificate c;
    c.name = "presheaf.report";
    c.statement = "validated presheaf with stalks and distinguished structure";
    c.pass = true;
    c.details = data;
    rep.certificates.push_back(std::move(c));
    rep.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    emit(rep, json_path);
    return 0;
}

int cmd_algebra(const std::string& spec_path, const std::string& select,
                const std::string& json_path, const std::string& dot_path, std::size_t cap) {
    auto t0 = std::chrono::steady_clock::now();
    json spec = load_json(spec_path);
    Report rep;
    rep.command = "algebra";
    PatchPresheaf P = presheaf_from_inputs(spec, select, cap, rep.inputs);
    PresheafDiagnostics d = validate(P);
    require(d.ok, ErrorKind::admissibility,
            "presheaf invalid: " + d.message + " at pair (" + std::to_string(d.witness_e) + "," +
                std::to_string(d.witness_f) + ")");
    PatchAlgebra A = PatchAlgebra::build(P, cap);

    json data;
    data["size"] = A.size();
    data["atom_count"] = A.atoms();
    json stalks = json::array();
    for (int i = 0; i < A.atoms(); ++i) stalks.push_back(subring_json(A.atom_section(i)));
    data["atom_stalks"] = stalks;

    PierceReport pr = pierce_report(A, cap);
    data["pierce"] = json{{"ambient_indecomposable", pr.ambient_indecomposable},
                          {"idempotent_count", pr.idempotent_count},
                          {"embedded_count", pr.embedded_count},
                          {"spectrum_matches_atoms", pr.spectrum_matches_atoms},
                          {"certified", pr.certified()}};
    StructureReport sr = structure_report(A, cap);
    data["structure"] =
        json{{"predicates", predicates_json(sr.preds)},
             {"minimal_primes_biject_with_pierce", sr.minimal_primes_biject_with_pierce},
             {"quotients_match_stalks", sr.quotients_match_stalks},
             {"max_bijects_with_pierce", sr.max_bijects_with_pierce},
             {"localizations_match_stalks", sr.localizations_match_stalks},
             {"max_equals_min", sr.max_equals_min}};

    Certificate c;
    c.name = "algebra.report";
    c.statement = "patch algebra with Pierce and structure certificates";
    c.pass = true;
    c.details = data;
    rep.certificates.push_back(std::move(c));
    rep.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (!dot_path.empty()) write_file(dot_path, dot_pierce(A, "Pierce spectrum"));
    emit(rep, json_path);
    return 0;
}

int cmd_verify(const std::string& corpus_path, const std::string& json_path, std::uint64_t seed,
               std::size_t cap) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.command = "verify";
    VerifyOptions opt;
    opt.seed = seed;
    opt.cap = cap;
    std::vector<CorpusEntry> corpus;
    std::vector<std::pair<std::string, PatchPresheaf>> fixture_presheaves;

    if (corpus_path.empty()) {
        corpus = default_corpus();
        rep.inputs = json{{"corpus", "default"}, {"seed", seed}, {"cap", cap}};
    } else {
        json doc = load_json(corpus_path);
        require(doc.is_object(), ErrorKind::schema, "corpus config must be an object");
        if (doc.contains("seed")) opt.seed = doc["seed"].get<std::uint64_t>();
        if (doc.contains("cap")) opt.cap = doc["cap"].get<std::size_t>();
        if (doc.contains("rings")) {
            require(doc["rings"].is_array(), ErrorKind::schema, "\"rings\" must be an array");
            int i = 0;
            for (const auto& rs : doc["rings"])
                corpus.push_back({"ring " + std::to_string(i++), ring_from_spec(rs)});
        } else {
            corpus = default_corpus();
        }
        if (doc.contains("presheaves")) {
            require(doc["presheaves"].is_array(), ErrorKind::schema,
                    "\"presheaves\" must be an array");
            int i = 0;
            for (const auto& ps : doc["presheaves"]) {
                fixture_presheaves.emplace_back("fixture " + std::to_string(i++),
                                                presheaf_from_spec(ps).presheaf);
            }
        }
        rep.inputs = json{{"corpus", corpus_path}, {"seed", opt.seed}, {"cap", opt.cap}};
    }

    rep.certificates = run_all(corpus, opt);
    for (auto& [name, P] : fixture_presheaves) {
        Certificate c;
        c.name = "presheaf.fixture-validation";
        c.statement = "corpus presheaf fixture satisfies the intersection law R[e] * R[f] = "
                      "R[e v f] and the bottom law R[0] = R";
        PresheafDiagnostics d = validate(P);
        c.pass = d.ok;
        if (!d.ok)
            c.details = json{{"fixture", name},
                             {"violation", d.message},
                             {"pair", {d.witness_e, d.witness_f}}};
        rep.certificates.push_back(std::move(c));
    }
    rep.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    for (const Certificate& c : rep.certificates)
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << " ("
                  << c.details.value("cases", 0) << " cases)\n";
    if (!json_path.empty()) write_file(json_path, rep.to_json().dump(2) + "\n");
    if (!rep.all_pass()) {
        const Certificate* f = rep.first_failure();
        std::cout << "first counterexample: " << to_json(*f).dump() << "\n";
        return 1;
    }
    std::cout << "all checks passed\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite subring spaces, patch presheaves, bundles and patch algebras"};
    app.require_subcommand(1);

    std::string spec_path, json_path, dot_path, select = "all", corpus_path;
    std::size_t cap = 0;
    std::uint64_t seed = 17;

    auto add_common = [&](CLI::App* sub, bool with_select, bool with_dot) {
        sub->add_option("--json", json_path, "write the report to this file");
        if (with_dot) sub->add_option("--dot", dot_path, "write a DOT diagram to this file");
        sub->add_option("--cap", cap, "exhaustive-operation cap (default 4096)");
        if (with_select)
            sub->add_option("--select", select,
                            "\"all\" or a JSON array of subring element lists");
    };

    CLI::App* ring = app.add_subcommand("ring", "ring report from a spec file");
    ring->add_option("spec", spec_path, "ring spec JSON file")->required();
    add_common(ring, false, true);

    CLI::App* space = app.add_subcommand("space", "subspace of the subring space");
    space->add_option("spec", spec_path, "ring spec JSON file")->required();
    add_common(space, true, true);

    CLI::App* presheaf = app.add_subcommand("presheaf", "presheaf of a space or a supplied one");
    presheaf->add_option("spec", spec_path, "ring or presheaf spec JSON file")->required();
    add_common(presheaf, true, false);

    CLI::App* algebra = app.add_subcommand("algebra", "patch algebra with certificates");
    algebra->add_option("spec", spec_path, "ring or presheaf spec JSON file")->required();
    add_common(algebra, true, true);

    CLI::App* verify = app.add_subcommand("verify", "run the theorem suites");
    verify->add_option("corpus", corpus_path, "corpus config JSON file (optional)");
    verify->add_option("--json", json_path, "write the report to this file");
    verify->add_option("--seed", seed, "seed for the randomized suites");
    verify->add_option("--cap", cap, "exhaustive-operation cap (default 4096)");

    CLI11_PARSE(app, argc, argv);

    try {
        std::size_t effective = effective_cap(cap);
        if (ring->parsed()) return cmd_ring(spec_path, json_path, dot_path, effective);
        if (space->parsed()) return cmd_space(spec_path, select, json_path, dot_path, effective);
        if (presheaf->parsed()) return cmd_presheaf(spec_path, select, json_path, effective);
        if (algebra->parsed())
            return cmd_algebra(spec_path, select, json_path, dot_path, effective);
        if (verify->parsed()) return cmd_verify(corpus_path, json_path, seed, effective);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
