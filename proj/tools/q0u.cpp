// Batch front end: check proof scripts, evaluate wffs in described models,
// sweep validity over generated models, and run the built-in self-check.
//
// Exit codes: 0 pass, 1 logical rejection or counterexample, 2 usage,
// parse, or I/O error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "q0u/abbrev.hpp"
#include "q0u/errors.hpp"
#include "q0u/kernel.hpp"
#include "q0u/model_io.hpp"
#include "q0u/parser.hpp"
#include "q0u/printer.hpp"
#include "q0u/script.hpp"
#include "q0u/selfcheck.hpp"
#include "q0u/semantics.hpp"
#include "q0u/subst.hpp"

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitReject = 1;
constexpr int kExitUsage = 2;

struct ReportSink {
    std::string path;
    json doc = json::object();

    void set_command(const std::string& command) {
        doc["command"] = command;
        doc["diagnostics"] = json::array();
    }
    void diagnose(const std::string& location, const std::string& message) {
        doc["diagnostics"].push_back({{"location", location}, {"message", message}});
    }
    void finalize(int exit_code) {
        doc["status"] = exit_code == kExitPass ? "pass" : "fail";
        doc["exit_code"] = exit_code;
        if (path.empty()) return;
        std::ofstream out(path);
        if (!out) {
            std::cerr << "cannot write report to " << path << "\n";
            return;
        }
        out << doc.dump(2) << "\n";
    }
};

int run_check(const std::string& script_path, bool extended, ReportSink& report) {
    report.set_command("check");
    q0u::ProofScript script;
    try {
        script = q0u::load_script_file(script_path);
    } catch (const q0u::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        report.diagnose(script_path, e.what());
        return kExitUsage;
    }
    const q0u::CheckMode mode = extended ? q0u::CheckMode::Extended : q0u::CheckMode::Kernel;
    json proofs = json::array();
    bool all_accepted = true;
    for (const q0u::ScriptProof& entry : script.proofs) {
        q0u::Verdict verdict = q0u::check_proof(entry.proof, mode);
        json record = {{"label", entry.label},
                       {"accepted", verdict.accepted},
                       {"steps", entry.proof.main_steps.size()},
                       {"extended_steps", verdict.extended_steps}};
        if (verdict.accepted) {
            std::cout << "proof " << entry.label << ": accepted ("
                      << entry.proof.main_steps.size() << " steps)\n";
        } else {
            all_accepted = false;
            std::cout << "proof " << entry.label << ": REJECTED";
            for (const q0u::Diagnostic& d : verdict.diagnostics) {
                std::cout << " [" << d.location << ": " << d.message << "]";
                report.diagnose(entry.label + "/" + d.location, d.message);
                record["failure"] = {{"location", d.location}, {"message", d.message}};
            }
            std::cout << "\n";
        }
        for (const std::string& s : verdict.extended_steps)
            std::cout << "  [extended] " << s << "\n";
        proofs.push_back(std::move(record));
    }
    report.doc["proofs"] = std::move(proofs);
    return all_accepted ? kExitPass : kExitReject;
}

int run_eval(const std::string& model_path, const std::string& wff_text,
             std::optional<uint64_t> cap_override, ReportSink& report) {
    report.set_command("eval");
    try {
        q0u::LoadedModel loaded = q0u::load_model_file(model_path);
        if (cap_override) {
            q0u::Model recapped(loaded.model.base_labels(), *cap_override);
            for (const auto& [name, value] : loaded.model.constants())
                recapped.interpret(name, value);
            loaded.model = std::move(recapped);
        }
        q0u::Wff w = q0u::parse_wff(wff_text, loaded.signature);
        q0u::Wff core = q0u::expand(w);
        if (!q0u::free_variables(core).empty())
            throw q0u::eval_error("eval needs a closed wff (free variables have no value here)");
        q0u::PartialValue r = q0u::valuate(loaded.model, {}, core);
        std::string shown;
        if (!r.defined()) {
            shown = "undefined";
        } else if (core.type().is_omicron()) {
            shown = r.value->as_boolean() ? "T" : "F";
        } else {
            shown = "defined: " + q0u::print_value(loaded.model, *r.value);
            report.doc["value_json"] =
                json::parse(q0u::value_to_json_text(loaded.model, *r.value));
        }
        std::cout << shown << "\n";
        report.doc["result"] = shown;
        return kExitPass;
    } catch (const q0u::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        report.diagnose(wff_text, e.what());
        return kExitUsage;
    }
}

int run_validity(const std::string& wff_text, int max_base, uint64_t cap,
                 const std::vector<std::string>& const_decls, ReportSink& report) {
    report.set_command("validity");
    try {
        q0u::Signature sig;
        for (const std::string& decl : const_decls) {
            const size_t colon = decl.find(':');
            if (colon == std::string::npos)
                throw q0u::error("--const expects name:type, got '" + decl + "'");
            sig.declare(decl.substr(0, colon), q0u::parse_type(decl.substr(colon + 1)));
        }
        q0u::Wff core = q0u::expand(q0u::parse_wff(wff_text, sig));
        if (!core.type().is_omicron())
            throw q0u::eval_error("validity applies to wffs of type o");

        for (int n = 1; n <= max_base; ++n) {
            std::vector<std::string> labels;
            for (int k = 0; k < n; ++k)
                labels.push_back(std::string(1, static_cast<char>('a' + k)));
            // Every interpretation of the declared constants.
            std::vector<std::pair<std::string, q0u::Type>> names(sig.constants().begin(),
                                                                 sig.constants().end());
            std::vector<uint64_t> sizes, odometer(names.size(), 0);
            {
                q0u::Model probe(labels, cap);
                for (auto& [name, type] : names) {
                    probe.ensure_enumerable(type);
                    sizes.push_back(probe.domain_size(type));
                }
            }
            for (;;) {
                q0u::Model m(labels, cap);
                for (size_t k = 0; k < names.size(); ++k)
                    m.interpret(names[k].first, m.element(names[k].second, odometer[k]));
                auto cex = q0u::find_falsifying_assignment(m, core);
                if (cex) {
                    std::cout << "counter-model: base size " << n << "\n";
                    json jconsts = json::object();
                    for (const auto& [name, value] : m.constants()) {
                        std::cout << "  " << name << " = " << q0u::print_value(m, value) << "\n";
                        jconsts[name] = json::parse(q0u::value_to_json_text(m, value));
                    }
                    json jassign = json::object();
                    for (const auto& [var, value] : *cex) {
                        std::cout << "  " << q0u::print_variable(var) << " := "
                                  << q0u::print_value(m, value) << "\n";
                        jassign[q0u::print_variable(var)] =
                            json::parse(q0u::value_to_json_text(m, value));
                    }
                    report.doc["counter_model"] = {
                        {"base_size", n}, {"constants", jconsts}, {"assignment", jassign}};
                    report.diagnose(wff_text, "counter-model at base size " + std::to_string(n));
                    return kExitReject;
                }
                size_t k = 0;
                for (; k < names.size(); ++k) {
                    if (++odometer[k] < sizes[k]) break;
                    odometer[k] = 0;
                }
                if (k == names.size()) break;
            }
        }
        std::cout << "valid up to bound " << max_base << "\n";
        report.doc["valid_up_to_base"] = max_base;
        return kExitPass;
    } catch (const q0u::domain_cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        report.diagnose(wff_text, e.what());
        return kExitUsage;
    } catch (const q0u::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        report.diagnose(wff_text, e.what());
        return kExitUsage;
    }
}

int run_selfcheck(const std::string& mutate, int iota_base, uint64_t cap, ReportSink& report) {
    report.set_command("selfcheck");
    q0u::SelfcheckOptions opts;
    opts.cap = cap;
    if (iota_base > 0) opts.base_sizes = {iota_base};
    if (mutate == "A9") {
        opts.mutation = q0u::Mutation::A9;
    } else if (mutate == "R1") {
        opts.mutation = q0u::Mutation::R1;
    } else if (!mutate.empty()) {
        std::cerr << "unknown mutation '" << mutate << "' (expected A9 or R1)\n";
        return kExitUsage;
    }
    q0u::SuiteReport suite = q0u::run_selfcheck(opts);
    json sections = json::array();
    for (const q0u::SuiteSection& s : suite.sections) {
        std::cout << (s.pass ? "[PASS] " : "[FAIL] ") << s.name << "  (" << s.checked
                  << " checks, " << s.seconds << "s)\n";
        json failures = json::array();
        for (const q0u::SuiteFailure& f : s.failures) {
            std::cout << "       " << f.id << ": " << f.detail << "\n";
            failures.push_back({{"id", f.id}, {"detail", f.detail}});
            report.diagnose(s.name + "/" + f.id, f.detail);
        }
        sections.push_back({{"name", s.name},
                            {"checked", s.checked},
                            {"pass", s.pass},
                            {"seconds", s.seconds},
                            {"failures", failures}});
    }
    report.doc["sections"] = std::move(sections);
    std::cout << (suite.pass ? "selfcheck: PASS" : "selfcheck: FAIL") << "\n";
    return suite.pass ? kExitPass : kExitReject;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"proof checker and finite-model evaluator for a simple type theory "
                 "with partial functions and undefined terms"};
    app.require_subcommand(1);

    ReportSink report;
    auto add_report = [&report](CLI::App* sub) {
        sub->add_option("--report", report.path, "write a machine-readable JSON report here");
    };

    std::string script_path;
    bool extended = false;
    CLI::App* check = app.add_subcommand("check", "check the proofs in a script file");
    check->add_option("script", script_path, "proof script")->required();
    check->add_flag("--extended", extended, "allow derived (non-kernel) rules");
    add_report(check);

    std::string model_path, wff_text;
    uint64_t cap = q0u::Model::kDefaultCap;
    CLI::App* eval = app.add_subcommand("eval", "evaluate a closed wff in a model file");
    eval->add_option("model", model_path, "model description (JSON)")->required();
    eval->add_option("wff", wff_text, "wff text")->required();
    eval->add_option("--cap", cap, "domain size cap override");
    add_report(eval);

    std::string validity_wff;
    int max_base = 2;
    uint64_t validity_cap = q0u::Model::kDefaultCap;
    std::vector<std::string> const_decls;
    CLI::App* validity =
        app.add_subcommand("validity", "sweep validity over all small standard models");
    validity->add_option("wff", validity_wff, "wff text (type o)")->required();
    validity->add_option("--max-base", max_base, "largest base size to try")
        ->check(CLI::PositiveNumber);
    validity->add_option("--cap", validity_cap, "domain size cap");
    validity->add_option("--const", const_decls, "declare a constant, name:type (repeatable)");
    add_report(validity);

    std::string mutate;
    int iota_base = 0;
    uint64_t selfcap = q0u::Model::kDefaultCap;
    CLI::App* selfcheck = app.add_subcommand("selfcheck", "run the built-in verification battery");
    selfcheck->add_option("--mutate", mutate, "fault injection: A9 or R1 (expected to fail)");
    selfcheck->add_option("--iota-base", iota_base, "restrict the sweep to one base size");
    selfcheck->add_option("--cap", selfcap, "domain size cap");
    add_report(selfcheck);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    int exit_code = kExitUsage;
    if (check->parsed()) exit_code = run_check(script_path, extended, report);
    if (eval->parsed())
        exit_code = run_eval(model_path, wff_text,
                             eval->count("--cap") ? std::optional<uint64_t>(cap) : std::nullopt,
                             report);
    if (validity->parsed())
        exit_code = run_validity(validity_wff, max_base, validity_cap, const_decls, report);
    if (selfcheck->parsed()) exit_code = run_selfcheck(mutate, iota_base, selfcap, report);

    report.finalize(exit_code);
    return exit_code;
}
