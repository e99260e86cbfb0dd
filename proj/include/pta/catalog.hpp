#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pta/core.hpp"
#include "pta/diagnostics.hpp"

namespace pta {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Catalog record types
// ---------------------------------------------------------------------------

// One row of the stage-wise threat-control traceability matrix.
struct ThreatCatalogEntry {
    ThreatKey key;
    IdSet assets;
    IdSet agents;
    StrideSet stride;
    std::string description;
    std::vector<OwaspCategory> owasp;     // printed order
    std::vector<std::string> controls;    // registry ids, printed order
    std::set<SlsaLevel> slsa_levels;      // empty = "SLSA: None"
    std::set<SsdfPracticeId> ssdf;
    std::map<std::string, std::string> agent_notes;  // role notes, e.g. TA2 -> "DevOps Insider"

    bool operator==(const ThreatCatalogEntry&) const = default;
};

enum class Coverage { None, Partial, Full };

inline const char* to_string(Coverage c) {
    switch (c) {
        case Coverage::None: return "none";
        case Coverage::Partial: return "partial";
        case Coverage::Full: return "full";
    }
    return "";
}

inline std::optional<Coverage> parse_coverage(const std::string& s) {
    if (s == "none") return Coverage::None;
    if (s == "partial") return Coverage::Partial;
    if (s == "full") return Coverage::Full;
    return std::nullopt;
}

// SLSA threat-mitigation coverage by STRIDE category: 6 rows x L1..L4.
struct SlsaStrideCoverage {
    std::map<StrideCategory, std::array<Coverage, 4>> matrix;
    std::map<StrideCategory, std::string> gap_notes;

    Coverage at(StrideCategory c, SlsaLevel level) const {
        if (level == SlsaLevel::L0) return Coverage::None;
        return matrix.at(c)[static_cast<int>(level) - 1];
    }

    bool operator==(const SlsaStrideCoverage&) const = default;
};

struct SlsaApplicability {
    enum class Kind { No, Partial, Yes };
    Kind kind = Kind::No;
    std::set<SlsaLevel> levels;  // for Partial/Yes

    bool operator==(const SlsaApplicability&) const = default;
};

inline const char* to_string(SlsaApplicability::Kind k) {
    switch (k) {
        case SlsaApplicability::Kind::No: return "no";
        case SlsaApplicability::Kind::Partial: return "partial";
        case SlsaApplicability::Kind::Yes: return "yes";
    }
    return "";
}

inline std::optional<SlsaApplicability::Kind> parse_applicability_kind(const std::string& s) {
    if (s == "no") return SlsaApplicability::Kind::No;
    if (s == "partial") return SlsaApplicability::Kind::Partial;
    if (s == "yes") return SlsaApplicability::Kind::Yes;
    return std::nullopt;
}

// Stage-wise applicability of SLSA controls vs STRIDE modeling. Row labels
// keep the published wording; `stage` is the canonical stage they map onto.
struct StageApplicabilityRow {
    std::string stage_label;
    PipelineStage stage = PipelineStage::Source;
    std::string typical_threats;
    SlsaApplicability slsa_applies;
    bool stride_required = true;

    bool operator==(const StageApplicabilityRow&) const = default;
};

// Security-aspect coverage gaps of SLSA used in isolation.
struct AspectGap {
    std::string aspect;
    std::string slsa_coverage;
    std::string gap;

    bool operator==(const AspectGap&) const = default;
};

// One toolchain recommendation row; threats may have several.
struct ToolchainEntry {
    std::string threat_id;
    std::string objective;
    std::string tools_text;
    std::vector<PipelineStage> stages;  // canonical or extended

    bool operator==(const ToolchainEntry&) const = default;
};

struct IncidentAnnotation {
    StrideCategory stride = StrideCategory::Spoofing;
    std::string incident_name;
    int year = 0;
    std::string summary;

    bool operator==(const IncidentAnnotation&) const = default;
};

enum class IndicatorConfidence { Low, Medium, High };

inline const char* to_string(IndicatorConfidence c) {
    switch (c) {
        case IndicatorConfidence::Low: return "low";
        case IndicatorConfidence::Medium: return "medium";
        case IndicatorConfidence::High: return "high";
    }
    return "";
}

inline std::optional<IndicatorConfidence> parse_confidence(const std::string& s) {
    if (s == "low") return IndicatorConfidence::Low;
    if (s == "medium") return IndicatorConfidence::Medium;
    if (s == "high") return IndicatorConfidence::High;
    return std::nullopt;
}

// Workflow-import heuristic rule. Editorial and versioned: the rules live in
// the catalog data file so the threat keys they suggest are validated
// against the entries at load time.
struct ImportHeuristic {
    std::string id;
    int version = 1;
    std::string kind;     // secret_regex | unpinned_action | unpinned_image | direct_fetch | auto_deploy
    std::string pattern;  // rule-specific regex
    ThreatKey suggests_threat;
    IndicatorConfidence confidence = IndicatorConfidence::Medium;
    std::string description;

    bool operator==(const ImportHeuristic&) const = default;
};

// The validated knowledge base all analysis runs against.
struct Catalog {
    std::string version;
    std::vector<AssetRef> assets;
    std::vector<ThreatAgentRef> agents;
    std::vector<ControlDescriptor> controls;   // registry, data-file order
    std::vector<ThreatCatalogEntry> entries;   // table order
    SlsaStrideCoverage coverage;
    std::vector<StageApplicabilityRow> applicability;
    std::vector<AspectGap> aspects;
    std::vector<ToolchainEntry> toolchain;
    std::vector<IncidentAnnotation> incidents;
    std::vector<ImportHeuristic> heuristics;

    bool operator==(const Catalog&) const = default;

    const ControlDescriptor* find_control(const std::string& id) const {
        for (const auto& c : controls)
            if (c.id == id) return &c;
        return nullptr;
    }

    const ThreatCatalogEntry* find_entry(const ThreatKey& key) const {
        for (const auto& e : entries)
            if (e.key == key) return &e;
        return nullptr;
    }

    const AssetRef* find_asset(const std::string& id) const {
        for (const auto& a : assets)
            if (a.id == id) return &a;
        return nullptr;
    }

    const ThreatAgentRef* find_agent(const std::string& id) const {
        for (const auto& a : agents)
            if (a.id == id) return &a;
        return nullptr;
    }
};

// Entries for one canonical stage, in table order.
inline std::vector<ThreatCatalogEntry> threats_for(PipelineStage stage, const Catalog& catalog) {
    std::vector<ThreatCatalogEntry> out;
    for (const auto& e : catalog.entries)
        if (e.key.stage == stage) out.push_back(e);
    return out;
}

// Control descriptors for one entry, in the row's listed order; nullopt for
// an unknown key.
inline std::optional<std::vector<ControlDescriptor>> controls_for_threat(const ThreatKey& key,
                                                                         const Catalog& catalog) {
    const ThreatCatalogEntry* entry = catalog.find_entry(key);
    if (!entry) return std::nullopt;
    std::vector<ControlDescriptor> out;
    for (const auto& id : entry->controls) {
        const ControlDescriptor* c = catalog.find_control(id);
        if (c) out.push_back(*c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Loading
// ---------------------------------------------------------------------------

namespace detail {

inline std::string ptr(const std::string& base, const std::string& key) {
    return base + "/" + key;
}
inline std::string ptr(const std::string& base, std::size_t index) {
    return base + "/" + std::to_string(index);
}

inline bool expect_string(const json& j, const std::string& path, DiagnosticSink& sink) {
    if (j.is_string()) return true;
    sink.error(path, "expected a string");
    return false;
}

inline bool expect_array(const json& j, const std::string& path, DiagnosticSink& sink) {
    if (j.is_array()) return true;
    sink.error(path, "expected an array");
    return false;
}

inline bool expect_object(const json& j, const std::string& path, DiagnosticSink& sink) {
    if (j.is_object()) return true;
    sink.error(path, "expected an object");
    return false;
}

inline std::optional<std::string> get_string(const json& obj, const std::string& key,
                                             const std::string& base, DiagnosticSink& sink,
                                             bool required = true) {
    if (!obj.contains(key)) {
        if (required) sink.error(base, "missing required key '" + key + "'");
        return std::nullopt;
    }
    if (!obj[key].is_string()) {
        sink.error(ptr(base, key), "expected a string");
        return std::nullopt;
    }
    return obj[key].get<std::string>();
}

inline std::optional<PipelineStage> get_stage(const json& j, const std::string& path,
                                              DiagnosticSink& sink, bool canonical_only) {
    if (!j.is_string()) {
        sink.error(path, "expected a stage name string");
        return std::nullopt;
    }
    auto stage = parse_stage(j.get<std::string>());
    if (!stage) {
        std::vector<std::string> names;
        for (auto st : kAllStages) names.emplace_back(to_string(st));
        std::string hint = suggest(j.get<std::string>(), names);
        sink.error(path, "unknown stage '" + j.get<std::string>() + "'" +
                             (hint.empty() ? "" : ", did you mean '" + hint + "'?"));
        return std::nullopt;
    }
    if (canonical_only && !is_canonical(*stage)) {
        sink.error(path, "stage '" + std::string(to_string(*stage)) +
                             "' is not canonical (use source/build/deployment/monitoring)");
        return std::nullopt;
    }
    return stage;
}

}  // namespace detail

// Parses and cross-validates a catalog document. Diagnostics carry
// JSON-pointer-style paths; the value is present only when no error was
// produced. Loading the builtin data and a byte-identical external copy
// yields equal catalogs.
inline LoadResult<Catalog> load_catalog(const json& doc) {
    using namespace detail;
    DiagnosticSink sink;
    Catalog cat;

    LoadResult<Catalog> out;
    if (!doc.is_object()) {
        sink.error("", "catalog document must be a JSON object");
        out.diagnostics = sink.take();
        return out;
    }

    static const std::set<std::string> known_keys = {
        "version", "assets",  "agents",  "controls",  "entries",   "coverage",
        "applicability", "aspects", "toolchain", "incidents", "heuristics"};
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (!known_keys.count(it.key()))
            sink.error(ptr("", it.key()), "unknown top-level key");
    }
    for (const auto& key : {"version", "assets", "agents", "controls", "entries", "coverage",
                            "applicability", "aspects", "toolchain", "incidents"}) {
        if (!doc.contains(key)) sink.error("", std::string("missing required key '") + key + "'");
    }
    if (sink.has_errors()) {
        out.diagnostics = sink.take();
        return out;
    }

    if (doc["version"].is_string())
        cat.version = doc["version"].get<std::string>();
    else
        sink.error("/version", "expected a string");

    // -- assets
    if (expect_array(doc["assets"], "/assets", sink)) {
        std::set<std::string> seen;
        for (std::size_t i = 0; i < doc["assets"].size(); ++i) {
            const json& a = doc["assets"][i];
            std::string base = ptr("/assets", i);
            if (!expect_object(a, base, sink)) continue;
            auto id = get_string(a, "id", base, sink);
            auto desc = get_string(a, "description", base, sink);
            if (!id || !desc) continue;
            if (!seen.insert(*id).second) sink.error(ptr(base, "id"), "duplicate asset id '" + *id + "'");
            cat.assets.push_back({*id, *desc});
        }
    }

    // -- agents
    if (expect_array(doc["agents"], "/agents", sink)) {
        std::set<std::string> seen;
        for (std::size_t i = 0; i < doc["agents"].size(); ++i) {
            const json& a = doc["agents"][i];
            std::string base = ptr("/agents", i);
            if (!expect_object(a, base, sink)) continue;
            auto id = get_string(a, "id", base, sink);
            auto name = get_string(a, "name", base, sink);
            auto desc = get_string(a, "description", base, sink);
            if (!id || !name || !desc) continue;
            if (!seen.insert(*id).second) sink.error(ptr(base, "id"), "duplicate agent id '" + *id + "'");
            cat.agents.push_back({*id, *name, *desc});
        }
    }

    // -- control registry
    if (expect_array(doc["controls"], "/controls", sink)) {
        std::set<std::string> seen;
        for (std::size_t i = 0; i < doc["controls"].size(); ++i) {
            const json& c = doc["controls"][i];
            std::string base = ptr("/controls", i);
            if (!expect_object(c, base, sink)) continue;
            auto id = get_string(c, "id", base, sink);
            auto text = get_string(c, "text", base, sink);
            auto type_s = get_string(c, "control_type", base, sink);
            if (!id || !text || !type_s) continue;
            if (text->empty()) sink.error(ptr(base, "text"), "control text must be non-empty");
            auto type = parse_control_type(*type_s);
            if (!type) {
                sink.error(ptr(base, "control_type"),
                           "expected preventive, detective or corrective, got '" + *type_s + "'");
                continue;
            }
            if (!seen.insert(*id).second)
                sink.error(ptr(base, "id"), "duplicate control id '" + *id + "'");
            ControlDescriptor d;
            d.id = *id;
            d.text = *text;
            d.control_type = *type;
            d.classification = c.value("classification", std::string("editorial"));
            cat.controls.push_back(std::move(d));
        }
    }

    // -- entries
    if (expect_array(doc["entries"], "/entries", sink)) {
        std::set<std::pair<std::string, int>> seen_keys;
        for (std::size_t i = 0; i < doc["entries"].size(); ++i) {
            const json& e = doc["entries"][i];
            std::string base = ptr("/entries", i);
            if (!expect_object(e, base, sink)) continue;
            ThreatCatalogEntry entry;

            auto tid = get_string(e, "threat_id", base, sink);
            if (tid) {
                auto n = threat_number(*tid);
                if (!n || *n < 1 || *n > 14)
                    sink.error(ptr(base, "threat_id"), "threat id must be T1..T14, got '" + *tid + "'");
                entry.key.threat_id = *tid;
            }
            if (e.contains("stage")) {
                auto stage = get_stage(e["stage"], ptr(base, "stage"), sink, /*canonical_only=*/true);
                if (stage) entry.key.stage = *stage;
            } else {
                sink.error(base, "missing required key 'stage'");
            }
            if (tid && !seen_keys.insert({entry.key.threat_id, stage_index(entry.key.stage)}).second)
                sink.error(base, "duplicate entry key (" + entry.key.threat_id + ", " +
                                     to_string(entry.key.stage) + ")");

            if (e.contains("assets") && expect_array(e["assets"], ptr(base, "assets"), sink)) {
                for (std::size_t k = 0; k < e["assets"].size(); ++k)
                    if (expect_string(e["assets"][k], ptr(ptr(base, "assets"), k), sink))
                        entry.assets.insert(e["assets"][k].get<std::string>());
            }
            if (e.contains("agents") && expect_array(e["agents"], ptr(base, "agents"), sink)) {
                for (std::size_t k = 0; k < e["agents"].size(); ++k)
                    if (expect_string(e["agents"][k], ptr(ptr(base, "agents"), k), sink))
                        entry.agents.insert(e["agents"][k].get<std::string>());
            }

            auto stride_s = get_string(e, "stride", base, sink);
            if (stride_s) {
                auto parsed = parse_stride_flags(*stride_s);
                if (!parsed.ok()) {
                    sink.error(ptr(base, "stride"), parsed.diagnostics.front().message);
                } else if (parsed.value->empty()) {
                    sink.error(ptr(base, "stride"), "entry must set at least one STRIDE flag");
                } else {
                    entry.stride = *parsed.value;
                }
            }

            auto desc = get_string(e, "description", base, sink);
            if (desc) entry.description = *desc;

            if (e.contains("owasp") && expect_array(e["owasp"], ptr(base, "owasp"), sink)) {
                for (std::size_t k = 0; k < e["owasp"].size(); ++k) {
                    const json& o = e["owasp"][k];
                    std::string obase = ptr(ptr(base, "owasp"), k);
                    if (!expect_object(o, obase, sink)) continue;
                    auto code = get_string(o, "code", obase, sink);
                    if (!code) continue;
                    auto cat_code = parse_owasp_code(*code);
                    if (!cat_code) {
                        sink.error(ptr(obase, "code"), "OWASP code must be A01..A10, got '" + *code + "'");
                        continue;
                    }
                    cat_code->name = o.value("name", std::string());
                    entry.owasp.push_back(*cat_code);
                }
            }

            if (e.contains("controls") && expect_array(e["controls"], ptr(base, "controls"), sink)) {
                for (std::size_t k = 0; k < e["controls"].size(); ++k)
                    if (expect_string(e["controls"][k], ptr(ptr(base, "controls"), k), sink))
                        entry.controls.push_back(e["controls"][k].get<std::string>());
            }

            if (e.contains("slsa_levels") &&
                expect_array(e["slsa_levels"], ptr(base, "slsa_levels"), sink)) {
                for (std::size_t k = 0; k < e["slsa_levels"].size(); ++k) {
                    std::string lpath = ptr(ptr(base, "slsa_levels"), k);
                    if (!expect_string(e["slsa_levels"][k], lpath, sink)) continue;
                    auto level = parse_slsa_level(e["slsa_levels"][k].get<std::string>());
                    if (!level || *level == SlsaLevel::L0)
                        sink.error(lpath, "expected L1..L4");
                    else
                        entry.slsa_levels.insert(*level);
                }
            }

            if (e.contains("ssdf") && expect_array(e["ssdf"], ptr(base, "ssdf"), sink)) {
                for (std::size_t k = 0; k < e["ssdf"].size(); ++k) {
                    std::string spath = ptr(ptr(base, "ssdf"), k);
                    if (!expect_string(e["ssdf"][k], spath, sink)) continue;
                    auto practice = parse_ssdf_practice(e["ssdf"][k].get<std::string>());
                    if (!practice) {
                        sink.error(spath, "invalid SSDF practice id '" +
                                              e["ssdf"][k].get<std::string>() + "'");
                        continue;
                    }
                    // Tables may repeat an id within one row; sets, not bags.
                    if (!entry.ssdf.insert(*practice).second)
                        sink.info(spath, "duplicate SSDF practice id '" + practice->code +
                                             "' in one row, deduplicated");
                }
            }
            if (e.contains("ssdf") && entry.ssdf.empty())
                sink.error(ptr(base, "ssdf"), "entry must list at least one SSDF practice");
            if (!e.contains("ssdf"))
                sink.error(base, "missing required key 'ssdf'");

            if (e.contains("agent_notes")) {
                if (expect_object(e["agent_notes"], ptr(base, "agent_notes"), sink)) {
                    for (auto it = e["agent_notes"].begin(); it != e["agent_notes"].end(); ++it)
                        if (it.value().is_string())
                            entry.agent_notes[it.key()] = it.value().get<std::string>();
                }
            }

            cat.entries.push_back(std::move(entry));
        }
    }

    // -- coverage matrix
    if (expect_object(doc["coverage"], "/coverage", sink)) {
        const json& cov = doc["coverage"];
        if (cov.contains("matrix") && expect_object(cov["matrix"], "/coverage/matrix", sink)) {
            for (auto c : kAllStride) {
                std::string row_path = ptr("/coverage/matrix", to_string(c));
                if (!cov["matrix"].contains(to_string(c))) {
                    sink.error("/coverage/matrix",
                               std::string("missing row '") + to_string(c) + "'");
                    continue;
                }
                const json& row = cov["matrix"][to_string(c)];
                if (!row.is_array() || row.size() != 4) {
                    sink.error(row_path, "expected an array of 4 cells (L1..L4)");
                    continue;
                }
                std::array<Coverage, 4> cells{};
                bool row_ok = true;
                for (std::size_t k = 0; k < 4; ++k) {
                    std::string cpath = ptr(row_path, k);
                    if (!row[k].is_string()) {
                        sink.error(cpath, "missing or non-string coverage cell");
                        row_ok = false;
                        continue;
                    }
                    auto value = parse_coverage(row[k].get<std::string>());
                    if (!value) {
                        sink.error(cpath, "expected none, partial or full, got '" +
                                              row[k].get<std::string>() + "'");
                        row_ok = false;
                        continue;
                    }
                    cells[k] = *value;
                }
                if (row_ok) cat.coverage.matrix[c] = cells;
            }
        } else if (!cov.contains("matrix")) {
            sink.error("/coverage", "missing required key 'matrix'");
        }
        if (cov.contains("gap_notes") && cov["gap_notes"].is_object()) {
            for (auto c : kAllStride)
                if (cov["gap_notes"].contains(to_string(c)) &&
                    cov["gap_notes"][to_string(c)].is_string())
                    cat.coverage.gap_notes[c] = cov["gap_notes"][to_string(c)].get<std::string>();
        }
        // Row-monotonicity holds for every published row; enforced here so a
        // hand-edited catalog cannot silently weaken the assessment logic.
        for (const auto& [category, cells] : cat.coverage.matrix) {
            for (std::size_t k = 1; k < 4; ++k) {
                if (static_cast<int>(cells[k]) < static_cast<int>(cells[k - 1])) {
                    sink.error(ptr(ptr("/coverage/matrix", to_string(category)), k),
                               "coverage must be monotone non-decreasing across levels");
                }
            }
        }
    }

    // -- stage applicability
    if (expect_array(doc["applicability"], "/applicability", sink)) {
        for (std::size_t i = 0; i < doc["applicability"].size(); ++i) {
            const json& r = doc["applicability"][i];
            std::string base = ptr("/applicability", i);
            if (!expect_object(r, base, sink)) continue;
            StageApplicabilityRow row;
            auto label = get_string(r, "stage_label", base, sink);
            if (label) row.stage_label = *label;
            if (r.contains("stage")) {
                auto stage = get_stage(r["stage"], ptr(base, "stage"), sink, true);
                if (stage) row.stage = *stage;
            } else {
                sink.error(base, "missing required key 'stage'");
            }
            auto t = get_string(r, "typical_threats", base, sink);
            if (t) row.typical_threats = *t;
            if (r.contains("slsa_applies") && r["slsa_applies"].is_object()) {
                auto kind_s = get_string(r["slsa_applies"], "kind", ptr(base, "slsa_applies"), sink);
                if (kind_s) {
                    auto kind = parse_applicability_kind(*kind_s);
                    if (!kind)
                        sink.error(ptr(ptr(base, "slsa_applies"), "kind"),
                                   "expected no, partial or yes");
                    else
                        row.slsa_applies.kind = *kind;
                }
                if (r["slsa_applies"].contains("levels") && r["slsa_applies"]["levels"].is_array())
                    for (const auto& lv : r["slsa_applies"]["levels"])
                        if (lv.is_string()) {
                            auto level = parse_slsa_level(lv.get<std::string>());
                            if (level) row.slsa_applies.levels.insert(*level);
                        }
            } else {
                sink.error(base, "missing required key 'slsa_applies'");
            }
            if (r.contains("stride_required") && r["stride_required"].is_boolean())
                row.stride_required = r["stride_required"].get<bool>();
            cat.applicability.push_back(std::move(row));
        }
        if (cat.applicability.size() != 4)
            sink.error("/applicability", "expected exactly 4 rows, got " +
                                             std::to_string(cat.applicability.size()));
    }

    // -- aspect gaps
    if (expect_array(doc["aspects"], "/aspects", sink)) {
        for (std::size_t i = 0; i < doc["aspects"].size(); ++i) {
            const json& a = doc["aspects"][i];
            std::string base = ptr("/aspects", i);
            if (!expect_object(a, base, sink)) continue;
            auto aspect = get_string(a, "aspect", base, sink);
            auto coverage = get_string(a, "slsa_coverage", base, sink);
            auto gap = get_string(a, "gap", base, sink);
            if (aspect && coverage && gap) cat.aspects.push_back({*aspect, *coverage, *gap});
        }
        if (cat.aspects.size() != 6)
            sink.error("/aspects",
                       "expected exactly 6 rows, got " + std::to_string(cat.aspects.size()));
    }

    // -- toolchain
    if (expect_array(doc["toolchain"], "/toolchain", sink)) {
        for (std::size_t i = 0; i < doc["toolchain"].size(); ++i) {
            const json& t = doc["toolchain"][i];
            std::string base = ptr("/toolchain", i);
            if (!expect_object(t, base, sink)) continue;
            ToolchainEntry entry;
            auto tid = get_string(t, "threat_id", base, sink);
            if (tid) entry.threat_id = *tid;
            auto obj = get_string(t, "objective", base, sink);
            if (obj) entry.objective = *obj;
            auto tools = get_string(t, "tools_text", base, sink);
            if (tools) entry.tools_text = *tools;
            if (t.contains("stages") && expect_array(t["stages"], ptr(base, "stages"), sink)) {
                for (std::size_t k = 0; k < t["stages"].size(); ++k) {
                    auto stage = get_stage(t["stages"][k], ptr(ptr(base, "stages"), k), sink,
                                           /*canonical_only=*/false);
                    if (stage) entry.stages.push_back(*stage);
                }
            }
            cat.toolchain.push_back(std::move(entry));
        }
    }

    // -- incidents
    if (expect_array(doc["incidents"], "/incidents", sink)) {
        for (std::size_t i = 0; i < doc["incidents"].size(); ++i) {
            const json& inc = doc["incidents"][i];
            std::string base = ptr("/incidents", i);
            if (!expect_object(inc, base, sink)) continue;
            IncidentAnnotation a;
            auto stride_s = get_string(inc, "stride", base, sink);
            if (stride_s) {
                auto c = parse_stride_category(*stride_s);
                if (!c)
                    sink.error(ptr(base, "stride"), "unknown STRIDE category '" + *stride_s + "'");
                else
                    a.stride = *c;
            }
            auto name = get_string(inc, "incident_name", base, sink);
            if (name) a.incident_name = *name;
            if (inc.contains("year") && inc["year"].is_number_integer())
                a.year = inc["year"].get<int>();
            else
                sink.error(ptr(base, "year"), "expected an integer year");
            auto summary = get_string(inc, "summary", base, sink);
            if (summary) a.summary = *summary;
            cat.incidents.push_back(std::move(a));
        }
    }

    // -- heuristics (optional)
    if (doc.contains("heuristics") && expect_array(doc["heuristics"], "/heuristics", sink)) {
        for (std::size_t i = 0; i < doc["heuristics"].size(); ++i) {
            const json& h = doc["heuristics"][i];
            std::string base = ptr("/heuristics", i);
            if (!expect_object(h, base, sink)) continue;
            ImportHeuristic heur;
            auto id = get_string(h, "id", base, sink);
            if (id) heur.id = *id;
            if (h.contains("version") && h["version"].is_number_integer())
                heur.version = h["version"].get<int>();
            auto kind = get_string(h, "kind", base, sink);
            if (kind) heur.kind = *kind;
            heur.pattern = h.value("pattern", std::string());
            if (h.contains("suggests_threat") && h["suggests_threat"].is_object()) {
                const json& st = h["suggests_threat"];
                std::string sbase = ptr(base, "suggests_threat");
                auto tid = get_string(st, "threat_id", sbase, sink);
                if (tid) heur.suggests_threat.threat_id = *tid;
                if (st.contains("stage")) {
                    auto stage = get_stage(st["stage"], ptr(sbase, "stage"), sink, true);
                    if (stage) heur.suggests_threat.stage = *stage;
                }
            } else {
                sink.error(base, "missing required key 'suggests_threat'");
            }
            auto conf_s = get_string(h, "confidence", base, sink);
            if (conf_s) {
                auto conf = parse_confidence(*conf_s);
                if (!conf)
                    sink.error(ptr(base, "confidence"), "expected low, medium or high");
                else
                    heur.confidence = *conf;
            }
            heur.description = h.value("description", std::string());
            cat.heuristics.push_back(std::move(heur));
        }
    }

    // -- cross references
    {
        std::set<std::string> referenced_controls;
        for (std::size_t i = 0; i < cat.entries.size(); ++i) {
            const auto& entry = cat.entries[i];
            std::string base = ptr("/entries", i);
            for (const auto& aid : entry.assets)
                if (!cat.find_asset(aid))
                    sink.error(ptr(base, "assets"), "dangling asset reference '" + aid + "'");
            for (const auto& gid : entry.agents)
                if (!cat.find_agent(gid))
                    sink.error(ptr(base, "agents"), "dangling agent reference '" + gid + "'");
            for (std::size_t k = 0; k < entry.controls.size(); ++k) {
                if (!cat.find_control(entry.controls[k]))
                    sink.error(ptr(ptr(base, "controls"), k),
                               "dangling control reference '" + entry.controls[k] + "'");
                referenced_controls.insert(entry.controls[k]);
            }
        }
        for (std::size_t i = 0; i < cat.controls.size(); ++i)
            if (!referenced_controls.count(cat.controls[i].id))
                sink.error(ptr(ptr("/controls", i), "id"),
                           "control '" + cat.controls[i].id + "' is referenced by no entry");
        for (std::size_t i = 0; i < cat.heuristics.size(); ++i)
            if (!cat.find_entry(cat.heuristics[i].suggests_threat))
                sink.error(ptr(ptr("/heuristics", i), "suggests_threat"),
                           "heuristic suggests unknown threat key (" +
                               cat.heuristics[i].suggests_threat.threat_id + ", " +
                               to_string(cat.heuristics[i].suggests_threat.stage) + ")");
    }

    // Derive reverse references once the entry set is final.
    for (auto& control : cat.controls) {
        for (const auto& entry : cat.entries)
            for (const auto& cid : entry.controls)
                if (cid == control.id) control.source_threats.push_back(entry.key.str());
    }

    out.diagnostics = sink.take();
    if (!std::any_of(out.diagnostics.begin(), out.diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; }))
        out.value = std::move(cat);
    return out;
}

// ---------------------------------------------------------------------------
// Export
// ---------------------------------------------------------------------------

// Canonical JSON form of a catalog; load_catalog(catalog_to_json(c)) == c.
inline json catalog_to_json(const Catalog& cat) {
    json doc;
    doc["version"] = cat.version;

    doc["assets"] = json::array();
    for (const auto& a : cat.assets)
        doc["assets"].push_back({{"id", a.id}, {"description", a.description}});

    doc["agents"] = json::array();
    for (const auto& a : cat.agents)
        doc["agents"].push_back({{"id", a.id}, {"name", a.name}, {"description", a.description}});

    doc["controls"] = json::array();
    for (const auto& c : cat.controls)
        doc["controls"].push_back({{"id", c.id},
                                   {"text", c.text},
                                   {"control_type", to_string(c.control_type)},
                                   {"classification", c.classification}});

    doc["entries"] = json::array();
    for (const auto& e : cat.entries) {
        json j;
        j["threat_id"] = e.key.threat_id;
        j["stage"] = to_string(e.key.stage);
        j["assets"] = json::array();
        for (const auto& id : e.assets) j["assets"].push_back(id);
        j["agents"] = json::array();
        for (const auto& id : e.agents) j["agents"].push_back(id);
        j["stride"] = stride_flags_string(e.stride);
        j["description"] = e.description;
        j["owasp"] = json::array();
        for (const auto& o : e.owasp) {
            json oj = {{"code", o.code}};
            if (!o.name.empty()) oj["name"] = o.name;
            j["owasp"].push_back(oj);
        }
        j["controls"] = e.controls;
        j["slsa_levels"] = json::array();
        for (auto l : e.slsa_levels) j["slsa_levels"].push_back(to_string(l));
        j["ssdf"] = json::array();
        for (const auto& p : e.ssdf) j["ssdf"].push_back(p.code);
        if (!e.agent_notes.empty()) {
            j["agent_notes"] = json::object();
            for (const auto& [id, note] : e.agent_notes) j["agent_notes"][id] = note;
        }
        doc["entries"].push_back(std::move(j));
    }

    doc["coverage"]["matrix"] = json::object();
    for (const auto& [category, cells] : cat.coverage.matrix) {
        json row = json::array();
        for (auto cell : cells) row.push_back(to_string(cell));
        doc["coverage"]["matrix"][to_string(category)] = std::move(row);
    }
    doc["coverage"]["gap_notes"] = json::object();
    for (const auto& [category, note] : cat.coverage.gap_notes)
        doc["coverage"]["gap_notes"][to_string(category)] = note;

    doc["applicability"] = json::array();
    for (const auto& r : cat.applicability) {
        json j;
        j["stage_label"] = r.stage_label;
        j["stage"] = to_string(r.stage);
        j["typical_threats"] = r.typical_threats;
        j["slsa_applies"]["kind"] = to_string(r.slsa_applies.kind);
        j["slsa_applies"]["levels"] = json::array();
        for (auto l : r.slsa_applies.levels) j["slsa_applies"]["levels"].push_back(to_string(l));
        j["stride_required"] = r.stride_required;
        doc["applicability"].push_back(std::move(j));
    }

    doc["aspects"] = json::array();
    for (const auto& a : cat.aspects)
        doc["aspects"].push_back(
            {{"aspect", a.aspect}, {"slsa_coverage", a.slsa_coverage}, {"gap", a.gap}});

    doc["toolchain"] = json::array();
    for (const auto& t : cat.toolchain) {
        json j;
        j["threat_id"] = t.threat_id;
        j["objective"] = t.objective;
        j["tools_text"] = t.tools_text;
        j["stages"] = json::array();
        for (auto s : t.stages) j["stages"].push_back(to_string(s));
        doc["toolchain"].push_back(std::move(j));
    }

    doc["incidents"] = json::array();
    for (const auto& inc : cat.incidents)
        doc["incidents"].push_back({{"stride", to_string(inc.stride)},
                                    {"incident_name", inc.incident_name},
                                    {"year", inc.year},
                                    {"summary", inc.summary}});

    doc["heuristics"] = json::array();
    for (const auto& h : cat.heuristics) {
        json j;
        j["id"] = h.id;
        j["version"] = h.version;
        j["kind"] = h.kind;
        j["pattern"] = h.pattern;
        j["suggests_threat"] = {{"threat_id", h.suggests_threat.threat_id},
                                {"stage", to_string(h.suggests_threat.stage)}};
        j["confidence"] = to_string(h.confidence);
        j["description"] = h.description;
        doc["heuristics"].push_back(std::move(j));
    }

    return doc;
}

}  // namespace pta
