#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "pta/catalog.hpp"
#include "pta/core.hpp"

namespace pta {

// ---------------------------------------------------------------------------
// Result types
// ---------------------------------------------------------------------------

// A catalog entry instantiated against a model: requires at least one
// matched asset and one matched agent.
struct ThreatFinding {
    ThreatKey entry_key;
    IdSet matched_assets;  // model ∩ entry
    IdSet matched_agents;  // model ∩ entry
    StrideSet stride;      // copied from entry
    PipelineStage stage = PipelineStage::Source;

    bool operator==(const ThreatFinding&) const = default;
};

enum class MitigationStatus { Unmitigated, Partial, Mitigated };

inline const char* to_string(MitigationStatus s) {
    switch (s) {
        case MitigationStatus::Unmitigated: return "unmitigated";
        case MitigationStatus::Partial: return "partial";
        case MitigationStatus::Mitigated: return "mitigated";
    }
    return "";
}

inline const char* display_name(MitigationStatus s) {
    switch (s) {
        case MitigationStatus::Unmitigated: return "Unmitigated";
        case MitigationStatus::Partial: return "Partial";
        case MitigationStatus::Mitigated: return "Mitigated";
    }
    return "";
}

inline std::optional<MitigationStatus> parse_status(const std::string& s) {
    if (s == "unmitigated") return MitigationStatus::Unmitigated;
    if (s == "partial") return MitigationStatus::Partial;
    if (s == "mitigated") return MitigationStatus::Mitigated;
    return std::nullopt;
}

// Exact coverage fraction; kept rational so reports are bit-stable.
struct Ratio {
    long long num = 0;
    long long den = 1;

    static Ratio of(long long n, long long d) {
        long long g = std::gcd(n, d);
        if (g == 0) return {0, 1};
        return {n / g, d / g};
    }

    double value() const { return den == 0 ? 0.0 : static_cast<double>(num) / den; }

    bool operator==(const Ratio&) const = default;
    bool operator<(const Ratio& other) const { return num * other.den < other.num * den; }
    bool operator<=(const Ratio& other) const { return num * other.den <= other.num * den; }
};

// Control-satisfaction verdict for one finding. Units are the entry's
// controls plus one SLSA unit when the entry lists SLSA levels; the SLSA
// unit is credited when the attained level reaches the entry's minimum
// listed level.
struct MitigationAssessment {
    ThreatFinding finding;
    std::vector<std::string> satisfied_controls;  // entry order
    std::vector<std::string> missing_controls;    // entry order
    bool slsa_assist = false;
    MitigationStatus status = MitigationStatus::Unmitigated;
    Ratio coverage_ratio;

    bool operator==(const MitigationAssessment&) const = default;
};

// Coverage row lookup at the attained level; all None at L0.
struct SlsaAssessment {
    SlsaLevel attained = SlsaLevel::L0;
    std::map<StrideCategory, Coverage> per_category;
    StrideSet unaddressed;  // categories with Coverage::None

    bool operator==(const SlsaAssessment&) const = default;
};

// One stage-applicability row joined with the model's open findings.
struct StageGap {
    std::string stage_label;
    PipelineStage stage = PipelineStage::Source;
    std::string typical_threats;
    SlsaApplicability slsa_applies;
    bool stride_required = true;
    bool editorial = false;  // synthesized row without a published source
    int open_findings = 0;   // non-Mitigated count for the stage
    StrideSet stride_residual;

    bool operator==(const StageGap&) const = default;
};

struct PriorityEntry {
    ThreatKey key;
    int score = 0;

    bool operator==(const PriorityEntry&) const = default;
};

struct AuditReport {
    std::string model_name;
    std::string catalog_version;
    std::vector<MitigationAssessment> findings;  // stage table order, row order
    SlsaAssessment slsa;
    std::vector<StageGap> stage_gaps;
    std::vector<PriorityEntry> priorities;  // descending score, ties by key

    bool operator==(const AuditReport&) const = default;
};

// ---------------------------------------------------------------------------
// Engine operations (pure functions over immutable inputs)
// ---------------------------------------------------------------------------

// Exactly the catalog entries whose stage is modeled and whose asset and
// agent sets both intersect the model's. A threat needs a target and an
// actor; entries failing either intersection produce no finding.
inline std::vector<ThreatFinding> identify_threats(const PipelineModel& model,
                                                   const Catalog& catalog) {
    std::vector<ThreatFinding> findings;
    for (const auto& entry : catalog.entries) {
        if (!model.stages.count(entry.key.stage)) continue;
        ThreatFinding f;
        for (const auto& id : entry.assets)
            if (model.assets.count(id)) f.matched_assets.insert(id);
        for (const auto& id : entry.agents)
            if (model.agents.count(id)) f.matched_agents.insert(id);
        if (f.matched_assets.empty() || f.matched_agents.empty()) continue;
        f.entry_key = entry.key;
        f.stride = entry.stride;
        f.stage = entry.key.stage;
        findings.push_back(std::move(f));
    }
    return findings;
}

inline MitigationAssessment assess_mitigation(const ThreatCatalogEntry& entry,
                                              const ThreatFinding& finding,
                                              const PipelineModel& model, SlsaLevel attained) {
    MitigationAssessment a;
    a.finding = finding;
    for (const auto& id : entry.controls) {
        if (model.controls.count(id))
            a.satisfied_controls.push_back(id);
        else
            a.missing_controls.push_back(id);
    }
    a.slsa_assist = !entry.slsa_levels.empty() && attained >= *entry.slsa_levels.begin();

    bool slsa_ok = entry.slsa_levels.empty() || a.slsa_assist;
    if (a.missing_controls.empty() && slsa_ok)
        a.status = MitigationStatus::Mitigated;
    else if (a.satisfied_controls.empty() && !a.slsa_assist)
        a.status = MitigationStatus::Unmitigated;
    else
        a.status = MitigationStatus::Partial;

    long long units = static_cast<long long>(entry.controls.size()) +
                      (entry.slsa_levels.empty() ? 0 : 1);
    long long satisfied = static_cast<long long>(a.satisfied_controls.size()) +
                          (a.slsa_assist ? 1 : 0);
    a.coverage_ratio = units == 0 ? Ratio{1, 1} : Ratio::of(satisfied, units);
    return a;
}

inline std::vector<MitigationAssessment> evaluate_controls(
    const PipelineModel& model, const Catalog& catalog,
    const std::vector<ThreatFinding>& findings) {
    SlsaLevel attained = slsa_level_from_capabilities(model.slsa_capabilities);
    std::vector<MitigationAssessment> out;
    out.reserve(findings.size());
    for (const auto& finding : findings) {
        const ThreatCatalogEntry* entry = catalog.find_entry(finding.entry_key);
        if (!entry) continue;  // findings come from the same catalog
        out.push_back(assess_mitigation(*entry, finding, model, attained));
    }
    return out;
}

inline SlsaAssessment assess_slsa(const PipelineModel& model, const Catalog& catalog) {
    SlsaAssessment a;
    a.attained = slsa_level_from_capabilities(model.slsa_capabilities);
    for (auto category : kAllStride) {
        Coverage c = catalog.coverage.at(category, a.attained);
        a.per_category[category] = c;
        if (c == Coverage::None) a.unaddressed.insert(category);
    }
    return a;
}

// Monitoring has no published applicability row; its gap row is synthesized
// and flagged editorial.
inline StageGap monitoring_gap_row() {
    StageGap gap;
    gap.stage_label = "Monitoring";
    gap.stage = PipelineStage::Monitoring;
    gap.typical_threats = "Log tampering, undetected runtime attacks, insufficient observability";
    gap.slsa_applies.kind = SlsaApplicability::Kind::No;
    gap.stride_required = true;
    gap.editorial = true;
    return gap;
}

inline std::vector<StageGap> stage_gap_analysis(const PipelineModel& model, const Catalog& catalog,
                                                const std::vector<MitigationAssessment>& assessments) {
    std::vector<StageGap> gaps;
    auto fill = [&](StageGap& gap) {
        for (const auto& a : assessments) {
            if (a.finding.stage != gap.stage || a.status == MitigationStatus::Mitigated) continue;
            ++gap.open_findings;
            gap.stride_residual.insert(a.finding.stride.begin(), a.finding.stride.end());
        }
    };
    for (const auto& row : catalog.applicability) {
        if (!model.stages.count(row.stage)) continue;
        StageGap gap;
        gap.stage_label = row.stage_label;
        gap.stage = row.stage;
        gap.typical_threats = row.typical_threats;
        gap.slsa_applies = row.slsa_applies;
        gap.stride_required = row.stride_required;
        fill(gap);
        gaps.push_back(std::move(gap));
    }
    if (model.stages.count(PipelineStage::Monitoring)) {
        StageGap gap = monitoring_gap_row();
        fill(gap);
        gaps.push_back(std::move(gap));
    }
    return gaps;
}

// Priority score = |stride| x |matched assets| for open findings, 0 once
// mitigated. The formula is tool-defined (the source framework prioritizes
// by risk but fixes no formula) and reports label it as such.
inline std::vector<PriorityEntry> prioritize(const std::vector<MitigationAssessment>& assessments) {
    std::vector<PriorityEntry> out;
    out.reserve(assessments.size());
    for (const auto& a : assessments) {
        int score = 0;
        if (a.status != MitigationStatus::Mitigated)
            score = static_cast<int>(a.finding.stride.size()) *
                    static_cast<int>(a.finding.matched_assets.size());
        out.push_back({a.finding.entry_key, score});
    }
    std::stable_sort(out.begin(), out.end(), [](const PriorityEntry& a, const PriorityEntry& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.key < b.key;
    });
    return out;
}

// identify -> evaluate -> assess_slsa -> stage gaps -> prioritize.
// Pure function of (model, catalog).
inline AuditReport full_audit(const PipelineModel& model, const Catalog& catalog) {
    AuditReport report;
    report.model_name = model.name;
    report.catalog_version = catalog.version;
    auto findings = identify_threats(model, catalog);
    report.findings = evaluate_controls(model, catalog, findings);
    report.slsa = assess_slsa(model, catalog);
    report.stage_gaps = stage_gap_analysis(model, catalog, report.findings);
    report.priorities = prioritize(report.findings);
    return report;
}

}  // namespace pta
