// Command-line front end: classify rings, build exterior algebras, run
// theorem-verification suites, run open-question probes.
//
// Exit codes: 0 success, 1 input/validation error, 2 verification
// counterexample, 3 resource cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ringlab/central.hpp"
#include "ringlab/classify.hpp"
#include "ringlab/config.hpp"
#include "ringlab/corpus.hpp"
#include "ringlab/criteria.hpp"
#include "ringlab/exterior.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCounterexample = 2;
constexpr int kExitCap = 3;

struct CliOptions {
    ringlab::RunConfig cfg;
    std::string format = "text";
    std::string manifest_path = "data/corpus_manifest.json";
};

ringlab::Ring resolve_ring(const std::string& target, const ringlab::RunConfig& cfg) {
    if (target.rfind("corpus:", 0) == 0) return ringlab::corpus_ring(target.substr(7), cfg);
    std::ifstream in(target);
    if (!in) throw ringlab::RingError("cannot open ring spec file " + target);
    std::stringstream ss;
    ss << in.rdbuf();
    ringlab::RingSpec spec = ringlab::parse_spec(ss.str());
    if (spec.name.empty()) spec.name = target;
    return ringlab::Ring::from_spec(spec, cfg.enumeration_cap);
}

void apply_config_file(const std::string& path, CliOptions& opt) {
    std::ifstream in(path);
    if (!in) throw ringlab::RingError("cannot open config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    nlohmann::json doc = nlohmann::json::parse(ss.str());
    if (doc.contains("enumeration_cap")) opt.cfg.enumeration_cap = doc["enumeration_cap"];
    if (doc.contains("socle_cap")) opt.cfg.socle_cap = doc["socle_cap"];
    if (doc.contains("threads")) opt.cfg.threads = doc["threads"];
    if (doc.contains("slow")) opt.cfg.slow = doc["slow"];
    if (doc.contains("format")) opt.format = doc["format"];
}

int cmd_classify(const CliOptions& opt, const std::string& target) {
    ringlab::Ring r = resolve_ring(target, opt.cfg);
    ringlab::ClassificationReport rep = ringlab::classify(r, opt.cfg);
    if (opt.format == "json") {
        std::cout << ringlab::to_json(r, rep).dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "ring:                " << rep.name << "\n"
              << "size:                " << rep.size << "\n"
              << "characteristic:      " << rep.characteristic << "\n"
              << "center size:         " << rep.center_size << "\n"
              << "centrally essential: " << (rep.centrally_essential ? "yes" : "no");
    if (rep.ce_witness)
        std::cout << "  (witness " << ringlab::element_json(r, *rep.ce_witness).dump() << ")";
    std::cout << "\n"
              << "idempotents:         " << rep.idempotent_count << "\n"
              << "|J(R)|:              " << rep.jacobson_size << "\n"
              << "commutative:         " << (rep.predicates.commutative ? "yes" : "no") << "\n"
              << "zero divisors:       " << (rep.predicates.has_zero_divisors ? "yes" : "no") << "\n"
              << "reduced:             " << (rep.predicates.reduced ? "yes" : "no") << "\n"
              << "semiprime:           " << (rep.predicates.semiprime ? "yes" : "no") << "\n"
              << "regular:             " << (rep.predicates.regular ? "yes" : "no") << "\n"
              << "right nonsingular:   " << (rep.predicates.right_nonsingular ? "yes" : "no")
              << "\n";
    return kExitOk;
}

int cmd_exterior(const CliOptions& opt, const std::string& target, int n,
                 const std::string& out_path) {
    ringlab::Ring base = resolve_ring(target, opt.cfg);
    ringlab::CenterData c = ringlab::center(base, opt.cfg);
    bool fast = ringlab::thm13_check(base, c, n, opt.cfg);
    ringlab::Ring built = ringlab::build_exterior(base, n, opt.cfg);
    std::string path = out_path;
    if (path.empty()) path = base.name() + "-ext" + std::to_string(n) + ".json";
    std::ofstream out(path);
    if (!out) throw ringlab::RingError("cannot write " + path);
    out << ringlab::write_spec(built);

    if (opt.format == "json") {
        nlohmann::json doc;
        doc["schema"] = 1;
        doc["base"] = base.name();
        doc["n"] = n;
        doc["size"] = built.size();
        doc["spec_file"] = path;
        nlohmann::json dims = nlohmann::json::array();
        for (int s = 0; s <= n; ++s) dims.push_back(ringlab::grade_dimension(n, s));
        doc["grading_dimensions"] = std::move(dims);
        doc["fast_centrally_essential"] = fast;
        std::cout << doc.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "built " << built.name() << ", size " << built.size() << ", written to " << path
              << "\n";
    std::cout << "grading dimensions:";
    for (int s = 0; s <= n; ++s) std::cout << " " << ringlab::grade_dimension(n, s);
    std::cout << "\nfast criterion verdict: centrally essential = " << (fast ? "yes" : "no")
              << "\n";
    return kExitOk;
}

int cmd_verify(const CliOptions& opt, const std::string& suite) {
    ringlab::Manifest m = ringlab::load_manifest(opt.manifest_path);
    std::vector<std::string> suites;
    if (suite == "all")
        suites = ringlab::all_suites();
    else
        suites.push_back(suite);
    bool all_pass = true;
    std::string first_counterexample;
    nlohmann::json reports = nlohmann::json::array();
    for (const auto& s : suites) {
        ringlab::SuiteResult res = ringlab::run_suite(s, m, opt.cfg);
        if (!res.pass && all_pass) {
            all_pass = false;
            first_counterexample = res.counterexample;
        }
        if (opt.format == "json") {
            reports.push_back(std::move(res.report));
        } else {
            std::cout << (res.pass ? "PASS " : "FAIL ") << s;
            if (!res.pass) std::cout << "  (" << res.counterexample << ")";
            std::cout << "\n";
        }
    }
    if (opt.format == "json") {
        nlohmann::json doc;
        doc["schema"] = 1;
        doc["pass"] = all_pass;
        doc["suites"] = std::move(reports);
        std::cout << doc.dump(2) << "\n";
    } else if (!all_pass) {
        std::cout << "first counterexample: " << first_counterexample << "\n";
    }
    return all_pass ? kExitOk : kExitCounterexample;
}

int cmd_probe(const CliOptions& opt, const std::string& target) {
    ringlab::Ring r = resolve_ring(target, opt.cfg);
    ringlab::CenterData c = ringlab::center(r, opt.cfg);
    if (!ringlab::is_centrally_essential(r, c, opt.cfg).essential) {
        std::cerr << "error: " << r.name() << " is not centrally essential\n";
        return kExitInput;
    }
    ringlab::ProbeReport rep = ringlab::open_question_probe(r, c, opt.cfg);
    nlohmann::json doc;
    doc["schema"] = 1;
    doc["ring"] = rep.ring;
    doc["q1_quotient_commutative"] = rep.q1_quotient_commutative;
    doc["q2_note"] = rep.q2_note;
    doc["q3_socles_equal"] = rep.q3_socles_equal;
    doc["q4_center_plus_radical_covers"] = rep.q4_center_plus_radical_covers;
    nlohmann::json sizes;
    sizes["center"] = rep.center_size;
    sizes["radical"] = rep.radical_size;
    sizes["center_plus_radical"] = rep.center_plus_radical_size;
    sizes["socle_right"] = rep.socle_right_size;
    sizes["socle_c"] = rep.socle_c_size;
    doc["sizes"] = std::move(sizes);
    if (opt.format == "json") {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "probe " << rep.ring << "\n"
                  << "  Q1 R/J commutative:      " << (rep.q1_quotient_commutative ? "yes" : "no")
                  << "\n"
                  << "  Q2: " << rep.q2_note << "\n"
                  << "  Q3 Soc(R_C) = Soc(R_R):  " << (rep.q3_socles_equal ? "yes" : "no") << "\n"
                  << "  Q4 R = C + J(R):         "
                  << (rep.q4_center_plus_radical_covers ? "yes" : "no") << "\n"
                  << "  |C| = " << rep.center_size << ", |J| = " << rep.radical_size
                  << ", |C+J| = " << rep.center_plus_radical_size
                  << ", |Soc(R_R)| = " << rep.socle_right_size
                  << ", |Soc(R_C)| = " << rep.socle_c_size << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-ring laboratory: exterior algebras and centrally essential rings"};
    app.require_subcommand(1);

    CliOptions opt;
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--format", opt.format, "Output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--max-enumeration", opt.cfg.enumeration_cap, "Element enumeration cap");
    app.add_option("--socle-cap", opt.cfg.socle_cap, "Socle computation size cap");
    app.add_option("--threads", opt.cfg.threads, "Worker count (0 = auto, RINGLAB_THREADS)");
    app.add_flag("--slow", opt.cfg.slow, "Enable slow-tier corpus entries");
    app.add_option("--manifest", opt.manifest_path, "Corpus manifest path");

    std::string classify_target, exterior_target, exterior_out, verify_suite, probe_target;
    int exterior_n = 1;

    auto* classify_cmd = app.add_subcommand("classify", "Classify a ring (corpus:<name> or spec file)");
    classify_cmd->add_option("target", classify_target)->required();

    auto* exterior_cmd = app.add_subcommand("exterior", "Build an exterior algebra and write its spec");
    exterior_cmd->add_option("target", exterior_target)->required();
    exterior_cmd->add_option("--n", exterior_n, "Number of wedge generators")->required();
    exterior_cmd->add_option("--out", exterior_out, "Output spec path");

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite over the corpus");
    verify_cmd->add_option("suite", verify_suite, "laws|thm13|thm14|lemma22|prop24|prop28|thm15|remark12|all")
        ->required();

    auto* probe_cmd = app.add_subcommand("probe", "Run open-question probes on a centrally essential ring");
    probe_cmd->add_option("target", probe_target)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) apply_config_file(config_path, opt);
        if (classify_cmd->parsed()) return cmd_classify(opt, classify_target);
        if (exterior_cmd->parsed()) return cmd_exterior(opt, exterior_target, exterior_n, exterior_out);
        if (verify_cmd->parsed()) return cmd_verify(opt, verify_suite);
        if (probe_cmd->parsed()) return cmd_probe(opt, probe_target);
    } catch (const ringlab::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const ringlab::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ringlab::RingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
