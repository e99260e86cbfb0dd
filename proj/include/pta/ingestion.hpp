#pragma once

#include <map>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pta/catalog.hpp"
#include "pta/core.hpp"
#include "pta/diagnostics.hpp"

namespace pta {

// ---------------------------------------------------------------------------
// Pipeline model documents
// ---------------------------------------------------------------------------

inline const std::set<std::string>& model_document_keys() {
    static const std::set<std::string> keys = {
        "name", "stages", "assets", "agents", "controls", "slsa_capabilities",
        "flows", "boundaries"};
    return keys;
}

namespace detail {

inline std::string jptr(const std::string& base, const std::string& key) {
    return base + "/" + key;
}
inline std::string jptr(const std::string& base, std::size_t index) {
    return base + "/" + std::to_string(index);
}

// Asset/agent array elements are either bare id strings or declaration
// objects for custom ids.
inline void parse_id_list(const json& arr, const std::string& base, bool assets,
                          const Catalog& catalog, PipelineModel& model, DiagnosticSink& sink) {
    const char* custom_prefix = assets ? kCustomAssetPrefix : kCustomAgentPrefix;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const json& item = arr[i];
        std::string path = jptr(base, i);
        std::string id;
        if (item.is_string()) {
            id = item.get<std::string>();
        } else if (item.is_object()) {
            if (!item.contains("id") || !item["id"].is_string()) {
                sink.error(path, "custom declaration requires a string 'id'");
                continue;
            }
            id = item["id"].get<std::string>();
            if (id.rfind(custom_prefix, 0) != 0) {
                sink.error(jptr(path, "id"), "custom ids must use the reserved '" +
                                                 std::string(custom_prefix) + "' prefix");
                continue;
            }
            if (assets) {
                AssetRef ref{id, item.value("description", std::string())};
                auto it = model.custom_assets.find(id);
                if (it != model.custom_assets.end() && !(it->second == ref)) {
                    sink.error(path, "conflicting redefinition of custom asset '" + id + "'");
                    continue;
                }
                model.custom_assets[id] = ref;
            } else {
                ThreatAgentRef ref{id, item.value("name", std::string()),
                                   item.value("description", std::string())};
                auto it = model.custom_agents.find(id);
                if (it != model.custom_agents.end() && !(it->second == ref)) {
                    sink.error(path, "conflicting redefinition of custom agent '" + id + "'");
                    continue;
                }
                model.custom_agents[id] = ref;
            }
        } else {
            sink.error(path, "expected an id string or a declaration object");
            continue;
        }

        bool builtin = assets ? catalog.find_asset(id) != nullptr
                              : catalog.find_agent(id) != nullptr;
        bool custom = assets ? model.custom_assets.count(id) > 0
                             : model.custom_agents.count(id) > 0;
        if (!builtin && !custom) {
            sink.error(path, std::string("unresolved ") + (assets ? "asset" : "agent") +
                                 " id '" + id + "' (not a catalog id or declared custom entry)");
            continue;
        }
        if (assets)
            model.assets.insert(id);
        else
            model.agents.insert(id);
    }
}

}  // namespace detail

// Parses and validates a pipeline-model document against the catalog.
// `partial` relaxes the requirements for import overlays: keys may be
// absent and the stages set may be empty.
inline LoadResult<PipelineModel> parse_pipeline_model(const json& doc, const Catalog& catalog,
                                                      bool partial = false) {
    using namespace detail;
    DiagnosticSink sink;
    PipelineModel model;
    LoadResult<PipelineModel> out;

    if (!doc.is_object()) {
        sink.error("", "model document must be a JSON object");
        out.diagnostics = sink.take();
        return out;
    }

    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (!model_document_keys().count(it.key()))
            sink.error(jptr("", it.key()), "unknown top-level key");

    if (doc.contains("name")) {
        if (doc["name"].is_string())
            model.name = doc["name"].get<std::string>();
        else
            sink.error("/name", "expected a string");
    } else if (!partial) {
        sink.error("", "missing required key 'name'");
    }

    if (doc.contains("stages")) {
        if (doc["stages"].is_array()) {
            for (std::size_t i = 0; i < doc["stages"].size(); ++i) {
                const json& s = doc["stages"][i];
                std::string path = jptr("/stages", i);
                if (!s.is_string()) {
                    sink.error(path, "expected a stage name string");
                    continue;
                }
                auto stage = parse_stage(s.get<std::string>());
                if (!stage || !is_canonical(*stage)) {
                    std::string hint = suggest(s.get<std::string>(), canonical_stage_names());
                    sink.error(path, "unknown stage '" + s.get<std::string>() + "'" +
                                         (hint.empty() ? "" : ", did you mean '" + hint + "'?"));
                    continue;
                }
                model.stages.insert(*stage);
            }
        } else {
            sink.error("/stages", "expected an array");
        }
    } else if (!partial) {
        sink.error("", "missing required key 'stages'");
    }
    if (!partial && doc.contains("stages") && doc["stages"].is_array() && model.stages.empty() &&
        !sink.has_errors())
        sink.error("/stages", "stages must be non-empty");

    if (doc.contains("assets")) {
        if (doc["assets"].is_array())
            parse_id_list(doc["assets"], "/assets", /*assets=*/true, catalog, model, sink);
        else
            sink.error("/assets", "expected an array");
    }
    if (doc.contains("agents")) {
        if (doc["agents"].is_array())
            parse_id_list(doc["agents"], "/agents", /*assets=*/false, catalog, model, sink);
        else
            sink.error("/agents", "expected an array");
    }

    if (doc.contains("controls")) {
        if (doc["controls"].is_array()) {
            for (std::size_t i = 0; i < doc["controls"].size(); ++i) {
                const json& c = doc["controls"][i];
                std::string path = jptr("/controls", i);
                if (!c.is_string()) {
                    sink.error(path, "expected a control id string");
                    continue;
                }
                std::string id = c.get<std::string>();
                if (!catalog.find_control(id)) {
                    std::vector<std::string> ids;
                    for (const auto& ctrl : catalog.controls) ids.push_back(ctrl.id);
                    std::string hint = suggest(id, ids);
                    sink.error(path, "unknown control id '" + id + "'" +
                                         (hint.empty() ? "" : ", did you mean '" + hint + "'?"));
                    continue;
                }
                model.controls.insert(id);
            }
        } else {
            sink.error("/controls", "expected an array");
        }
    }

    if (doc.contains("slsa_capabilities")) {
        if (doc["slsa_capabilities"].is_array()) {
            for (std::size_t i = 0; i < doc["slsa_capabilities"].size(); ++i) {
                const json& c = doc["slsa_capabilities"][i];
                std::string path = jptr("/slsa_capabilities", i);
                if (!c.is_string()) {
                    sink.error(path, "expected a capability name string");
                    continue;
                }
                auto cap = parse_slsa_capability(c.get<std::string>());
                if (!cap) {
                    std::vector<std::string> names;
                    for (auto k : kAllSlsaCapabilities) names.emplace_back(to_string(k));
                    std::string hint = suggest(c.get<std::string>(), names);
                    sink.error(path, "unknown SLSA capability '" + c.get<std::string>() + "'" +
                                         (hint.empty() ? "" : ", did you mean '" + hint + "'?"));
                    continue;
                }
                model.slsa_capabilities.insert(*cap);
            }
        } else {
            sink.error("/slsa_capabilities", "expected an array");
        }
    }
    if (!slsa_capabilities_contiguous(model.slsa_capabilities))
        sink.warning("/slsa_capabilities",
                     "capability set skips a level; the attained level is the highest "
                     "contiguous prefix");

    if (doc.contains("flows")) {
        if (doc["flows"].is_array()) {
            for (std::size_t i = 0; i < doc["flows"].size(); ++i) {
                const json& f = doc["flows"][i];
                std::string path = jptr("/flows", i);
                if (!f.is_object()) {
                    sink.error(path, "expected a flow object");
                    continue;
                }
                DataFlow flow;
                if (f.contains("from") && f["from"].is_string())
                    flow.from = f["from"].get<std::string>();
                else
                    sink.error(path, "flow requires a string 'from'");
                if (f.contains("to") && f["to"].is_string())
                    flow.to = f["to"].get<std::string>();
                else
                    sink.error(path, "flow requires a string 'to'");
                flow.label = f.value("label", std::string());
                flow.crosses_boundary = f.value("crosses_boundary", false);
                if (!flow.from.empty() && flow.from == flow.to)
                    sink.error(path, "flow endpoints must differ ('" + flow.from + "')");
                model.flows.push_back(std::move(flow));
            }
        } else {
            sink.error("/flows", "expected an array");
        }
    }

    if (doc.contains("boundaries")) {
        if (doc["boundaries"].is_array()) {
            for (std::size_t i = 0; i < doc["boundaries"].size(); ++i) {
                const json& b = doc["boundaries"][i];
                std::string path = jptr("/boundaries", i);
                if (!b.is_object()) {
                    sink.error(path, "expected a boundary object");
                    continue;
                }
                TrustBoundary boundary;
                if (b.contains("name") && b["name"].is_string())
                    boundary.name = b["name"].get<std::string>();
                else
                    sink.error(path, "boundary requires a string 'name'");
                if (b.contains("members") && b["members"].is_array())
                    for (const auto& m : b["members"])
                        if (m.is_string()) boundary.members.insert(m.get<std::string>());
                boundary.nested = b.value("nested", false);
                model.boundaries.push_back(std::move(boundary));
            }
        } else {
            sink.error("/boundaries", "expected an array");
        }
    }

    // Boundary member sets may overlap only when one is nested inside the
    // other (subset relation plus an explicit nested mark on the inner).
    for (std::size_t i = 0; i < model.boundaries.size(); ++i) {
        for (std::size_t j = i + 1; j < model.boundaries.size(); ++j) {
            const auto& a = model.boundaries[i];
            const auto& b = model.boundaries[j];
            std::vector<std::string> common;
            std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(),
                                  b.members.end(), std::back_inserter(common));
            if (common.empty()) continue;
            bool a_in_b = std::includes(b.members.begin(), b.members.end(), a.members.begin(),
                                        a.members.end());
            bool b_in_a = std::includes(a.members.begin(), a.members.end(), b.members.begin(),
                                        b.members.end());
            bool nested_ok = (a_in_b && a.nested) || (b_in_a && b.nested);
            if (!nested_ok)
                sink.error(jptr("/boundaries", j),
                           "boundary '" + b.name + "' overlaps '" + a.name +
                               "' without being marked nested inside it");
        }
    }

    out.diagnostics = sink.take();
    if (!std::any_of(out.diagnostics.begin(), out.diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; }))
        out.value = std::move(model);
    return out;
}

// Canonical model document; parse_pipeline_model(model_to_json(m)) == m.
inline json model_to_json(const PipelineModel& model) {
    json doc;
    doc["name"] = model.name;
    doc["stages"] = json::array();
    for (auto s : model.stages) doc["stages"].push_back(to_string(s));
    doc["assets"] = json::array();
    for (const auto& id : model.assets) {
        auto it = model.custom_assets.find(id);
        if (it == model.custom_assets.end())
            doc["assets"].push_back(id);
        else
            doc["assets"].push_back({{"id", id}, {"description", it->second.description}});
    }
    doc["agents"] = json::array();
    for (const auto& id : model.agents) {
        auto it = model.custom_agents.find(id);
        if (it == model.custom_agents.end())
            doc["agents"].push_back(id);
        else
            doc["agents"].push_back({{"id", id},
                                     {"name", it->second.name},
                                     {"description", it->second.description}});
    }
    doc["controls"] = json::array();
    for (const auto& id : model.controls) doc["controls"].push_back(id);
    doc["slsa_capabilities"] = json::array();
    for (auto c : model.slsa_capabilities) doc["slsa_capabilities"].push_back(to_string(c));
    doc["flows"] = json::array();
    for (const auto& f : model.flows)
        doc["flows"].push_back({{"from", f.from},
                                {"to", f.to},
                                {"label", f.label},
                                {"crosses_boundary", f.crosses_boundary}});
    doc["boundaries"] = json::array();
    for (const auto& b : model.boundaries) {
        json bj;
        bj["name"] = b.name;
        bj["members"] = json::array();
        for (const auto& m : b.members) bj["members"].push_back(m);
        bj["nested"] = b.nested;
        doc["boundaries"].push_back(std::move(bj));
    }
    return doc;
}

// Set-union merge of a validated base model with a partial overlay
// document. Overlay flows are appended; the name stays the base's.
// Conflicting custom-id redefinitions are merge errors.
inline LoadResult<PipelineModel> merge_models(const PipelineModel& base, const json& overlay,
                                              const Catalog& catalog) {
    LoadResult<PipelineModel> out;
    LoadResult<PipelineModel> overlay_result = parse_pipeline_model(overlay, catalog, true);
    out.diagnostics = overlay_result.diagnostics;
    if (!overlay_result.ok()) return out;
    const PipelineModel& over = *overlay_result.value;

    DiagnosticSink sink;
    PipelineModel merged = base;
    merged.stages.insert(over.stages.begin(), over.stages.end());
    merged.assets.insert(over.assets.begin(), over.assets.end());
    merged.agents.insert(over.agents.begin(), over.agents.end());
    merged.controls.insert(over.controls.begin(), over.controls.end());
    merged.slsa_capabilities.insert(over.slsa_capabilities.begin(), over.slsa_capabilities.end());
    merged.flows.insert(merged.flows.end(), over.flows.begin(), over.flows.end());

    for (const auto& [id, ref] : over.custom_assets) {
        auto it = merged.custom_assets.find(id);
        if (it != merged.custom_assets.end() && !(it->second == ref)) {
            sink.error("/assets", "conflicting redefinition of custom asset '" + id + "'");
            continue;
        }
        merged.custom_assets[id] = ref;
    }
    for (const auto& [id, ref] : over.custom_agents) {
        auto it = merged.custom_agents.find(id);
        if (it != merged.custom_agents.end() && !(it->second == ref)) {
            sink.error("/agents", "conflicting redefinition of custom agent '" + id + "'");
            continue;
        }
        merged.custom_agents[id] = ref;
    }
    for (const auto& b : over.boundaries) {
        auto same_name = std::find_if(merged.boundaries.begin(), merged.boundaries.end(),
                                      [&](const TrustBoundary& x) { return x.name == b.name; });
        if (same_name == merged.boundaries.end()) {
            merged.boundaries.push_back(b);
        } else if (!(*same_name == b)) {
            sink.error("/boundaries", "conflicting redefinition of boundary '" + b.name + "'");
        }
    }

    for (const auto& d : sink.items()) out.diagnostics.push_back(d);
    if (sink.has_errors()) return out;

    // The union must itself be a valid model.
    LoadResult<PipelineModel> check = parse_pipeline_model(model_to_json(merged), catalog);
    for (const auto& d : check.diagnostics) out.diagnostics.push_back(d);
    if (check.ok()) out.value = *check.value;
    return out;
}

// ---------------------------------------------------------------------------
// CI workflow import
// ---------------------------------------------------------------------------

// Advisory signal found while scanning a workflow. Evidence is stored
// pre-redacted: at most the first and last two characters of a secret
// candidate survive.
struct IndicatorFinding {
    std::string indicator_id;
    std::string file;
    std::string path;  // document path of the evidence
    std::string evidence;
    ThreatKey suggests_threat;
    IndicatorConfidence confidence = IndicatorConfidence::Medium;

    bool operator==(const IndicatorFinding&) const = default;
};

struct ImportResult {
    json partial_model;  // partial model document
    std::vector<IndicatorFinding> indicators;
};

// Masks a secret candidate down to its first and last two characters.
inline std::string redact_secret(const std::string& secret) {
    if (secret.size() <= 4) return "****";
    return secret.substr(0, 2) + "****" + secret.substr(secret.size() - 2);
}

namespace detail {

inline std::vector<std::regex> secret_regexes(const Catalog& catalog) {
    std::vector<std::regex> out;
    for (const auto& h : catalog.heuristics)
        if (h.kind == "secret_regex") out.emplace_back(h.pattern);
    return out;
}

// Every evidence excerpt passes through here so no indicator can leak a
// secret matched by another rule.
inline std::string redact_all_secrets(std::string text, const std::vector<std::regex>& patterns) {
    for (const auto& re : patterns) {
        std::string result;
        auto begin = std::sregex_iterator(text.begin(), text.end(), re);
        auto end = std::sregex_iterator();
        std::size_t last = 0;
        for (auto it = begin; it != end; ++it) {
            result.append(text, last, it->position() - last);
            result.append(redact_secret(it->str()));
            last = it->position() + it->length();
        }
        result.append(text, last, std::string::npos);
        text = std::move(result);
    }
    return text;
}

struct WorkflowScanner {
    const Catalog& catalog;
    const std::string& file;
    std::vector<std::regex> secrets;
    std::vector<IndicatorFinding> indicators;

    WorkflowScanner(const Catalog& cat, const std::string& f)
        : catalog(cat), file(f), secrets(secret_regexes(cat)) {}

    const ImportHeuristic* heuristic(const std::string& id) const {
        for (const auto& h : catalog.heuristics)
            if (h.id == id) return &h;
        return nullptr;
    }

    void emit(const ImportHeuristic& rule, const std::string& path, std::string evidence) {
        IndicatorFinding f;
        f.indicator_id = rule.id;
        f.file = file;
        f.path = path;
        f.evidence = redact_all_secrets(std::move(evidence), secrets);
        f.suggests_threat = rule.suggests_threat;
        f.confidence = rule.confidence;
        indicators.push_back(std::move(f));
    }

    void scan_scalar_for_secrets(const std::string& text, const std::string& path) {
        for (const auto& h : catalog.heuristics) {
            if (h.kind != "secret_regex") continue;
            std::regex re(h.pattern);
            auto begin = std::sregex_iterator(text.begin(), text.end(), re);
            for (auto it = begin; it != std::sregex_iterator(); ++it)
                emit(h, path, it->str());
        }
    }

    void scan_run_command(const std::string& text, const std::string& path) {
        scan_scalar_for_secrets(text, path);
        if (const ImportHeuristic* h = heuristic("direct-public-fetch")) {
            std::regex re(h->pattern);
            std::smatch m;
            if (std::regex_search(text, m, re)) emit(*h, path, m.str());
        }
    }

    void scan_uses_ref(const std::string& ref, const std::string& path) {
        const ImportHeuristic* h = heuristic("unpinned-action-ref");
        if (!h) return;
        if (ref.rfind("./", 0) == 0) return;  // local actions have no remote ref to pin
        if (!std::regex_search(ref, std::regex(h->pattern))) emit(*h, path, ref);
    }

    void scan_image_ref(const std::string& ref, const std::string& path) {
        const ImportHeuristic* h = heuristic("unpinned-container-image");
        if (!h) return;
        if (!std::regex_search(ref, std::regex(h->pattern))) emit(*h, path, ref);
    }

    void scan_env(const json& env, const std::string& path) {
        if (!env.is_object()) return;
        for (auto it = env.begin(); it != env.end(); ++it)
            if (it.value().is_string())
                scan_scalar_for_secrets(it.value().get<std::string>(), jptr(path, it.key()));
    }
};

inline bool deploy_labeled(const std::string& name, const std::string& pattern) {
    static const std::regex* cached = nullptr;
    static std::string cached_pattern;
    if (!cached || cached_pattern != pattern) {
        static std::regex re;
        re = std::regex(pattern, std::regex::icase);
        cached = &re;
        cached_pattern = pattern;
    }
    return std::regex_search(name, *cached);
}

}  // namespace detail

// Scans a generic workflow-shaped tree (jobs/steps/triggers), infers a
// partial model and emits indicator findings. Advisory only: the result is
// a document for the user to review and merge, never a full audit input.
// Trees without a jobs map degrade to zero inference.
inline ImportResult import_ci_workflow(const json& workflow, const Catalog& catalog,
                                       const std::string& file_name = "") {
    using namespace detail;
    ImportResult result;
    json& doc = result.partial_model;
    doc["stages"] = json::array();
    doc["assets"] = json::array();
    doc["agents"] = json::array();
    doc["controls"] = json::array();
    doc["slsa_capabilities"] = json::array();
    doc["flows"] = json::array();
    doc["boundaries"] = json::array();

    if (!workflow.is_object() || !workflow.contains("jobs") || !workflow["jobs"].is_object() ||
        workflow["jobs"].empty()) {
        return result;  // empty or non-workflow tree: zero inference
    }

    if (workflow.contains("name") && workflow["name"].is_string())
        doc["name"] = workflow["name"].get<std::string>();

    WorkflowScanner scanner(catalog, file_name);

    bool any_env = workflow.contains("env") && workflow["env"].is_object() &&
                   !workflow["env"].empty();
    scanner.scan_env(workflow.value("env", json::object()), "/env");

    bool any_deploy_job = false;
    const ImportHeuristic* deploy_rule = scanner.heuristic("auto-deploy-on-push");
    std::string deploy_pattern = deploy_rule ? deploy_rule->pattern : "(deploy|release|publish|prod)";

    for (auto job_it = workflow["jobs"].begin(); job_it != workflow["jobs"].end(); ++job_it) {
        const std::string& job_id = job_it.key();
        const json& job = job_it.value();
        std::string job_path = jptr("/jobs", job_id);
        if (!job.is_object()) continue;

        std::string job_name = job.value("name", job_id);
        if (deploy_labeled(job_id, deploy_pattern) || deploy_labeled(job_name, deploy_pattern))
            any_deploy_job = true;

        if (job.contains("env")) {
            any_env = any_env || (job["env"].is_object() && !job["env"].empty());
            scanner.scan_env(job["env"], jptr(job_path, "env"));
        }
        if (job.contains("container")) {
            const json& c = job["container"];
            if (c.is_string())
                scanner.scan_image_ref(c.get<std::string>(), jptr(job_path, "container"));
            else if (c.is_object() && c.contains("image") && c["image"].is_string())
                scanner.scan_image_ref(c["image"].get<std::string>(),
                                       jptr(jptr(job_path, "container"), "image"));
        }
        if (job.contains("steps") && job["steps"].is_array()) {
            for (std::size_t i = 0; i < job["steps"].size(); ++i) {
                const json& step = job["steps"][i];
                std::string step_path = jptr(jptr(job_path, "steps"), i);
                if (!step.is_object()) continue;
                if (step.contains("uses") && step["uses"].is_string())
                    scanner.scan_uses_ref(step["uses"].get<std::string>(),
                                          jptr(step_path, "uses"));
                if (step.contains("run") && step["run"].is_string())
                    scanner.scan_run_command(step["run"].get<std::string>(),
                                             jptr(step_path, "run"));
                if (step.contains("env")) {
                    any_env = any_env || (step["env"].is_object() && !step["env"].empty());
                    scanner.scan_env(step["env"], jptr(step_path, "env"));
                }
            }
        }
    }

    doc["stages"].push_back(to_string(PipelineStage::Build));
    if (any_deploy_job) doc["stages"].push_back(to_string(PipelineStage::Deployment));

    doc["assets"].push_back("AS2");
    doc["assets"].push_back("AS3");
    if (any_env) doc["assets"].push_back("AS4");
    doc["agents"].push_back("TA1");
    doc["agents"].push_back("TA2");

    // Push-triggered workflow that also deploys: auto-deploy indicator.
    if (deploy_rule && any_deploy_job && workflow.contains("on")) {
        const json& on = workflow["on"];
        bool push_trigger = (on.is_string() && on.get<std::string>() == "push") ||
                            (on.is_array() && std::any_of(on.begin(), on.end(),
                                                          [](const json& t) {
                                                              return t.is_string() &&
                                                                     t.get<std::string>() == "push";
                                                          })) ||
                            (on.is_object() && on.contains("push"));
        if (push_trigger) scanner.emit(*deploy_rule, "/on", "push-triggered deploy job");
    }

    result.indicators = std::move(scanner.indicators);
    return result;
}

}  // namespace pta
