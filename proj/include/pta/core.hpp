#pragma once

#include <array>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pta/diagnostics.hpp"

namespace pta {

// ---------------------------------------------------------------------------
// STRIDE
// ---------------------------------------------------------------------------

enum class StrideCategory {
    Spoofing,
    Tampering,
    Repudiation,
    InformationDisclosure,
    DenialOfService,
    ElevationOfPrivilege,
};

inline constexpr std::array<StrideCategory, 6> kAllStride = {
    StrideCategory::Spoofing,          StrideCategory::Tampering,
    StrideCategory::Repudiation,       StrideCategory::InformationDisclosure,
    StrideCategory::DenialOfService,   StrideCategory::ElevationOfPrivilege,
};

using StrideSet = std::set<StrideCategory>;

inline const char* to_string(StrideCategory c) {
    switch (c) {
        case StrideCategory::Spoofing: return "spoofing";
        case StrideCategory::Tampering: return "tampering";
        case StrideCategory::Repudiation: return "repudiation";
        case StrideCategory::InformationDisclosure: return "information_disclosure";
        case StrideCategory::DenialOfService: return "denial_of_service";
        case StrideCategory::ElevationOfPrivilege: return "elevation_of_privilege";
    }
    return "";
}

inline const char* display_name(StrideCategory c) {
    switch (c) {
        case StrideCategory::Spoofing: return "Spoofing";
        case StrideCategory::Tampering: return "Tampering";
        case StrideCategory::Repudiation: return "Repudiation";
        case StrideCategory::InformationDisclosure: return "Information Disclosure";
        case StrideCategory::DenialOfService: return "Denial of Service";
        case StrideCategory::ElevationOfPrivilege: return "Elevation of Privilege";
    }
    return "";
}

inline char stride_letter(StrideCategory c) {
    static constexpr char letters[] = {'S', 'T', 'R', 'I', 'D', 'E'};
    return letters[static_cast<int>(c)];
}

inline std::optional<StrideCategory> parse_stride_category(const std::string& s) {
    for (auto c : kAllStride)
        if (s == to_string(c)) return c;
    return std::nullopt;
}

// Parses the compact per-row checklist ("YNNYNY", positions S,T,R,I,D,E).
// On failure the error names the offending position (1-based).
inline LoadResult<StrideSet> parse_stride_flags(const std::string& text) {
    LoadResult<StrideSet> result;
    if (text.size() != 6) {
        result.diagnostics.push_back(
            {Severity::Error, "",
             "stride checklist must be exactly 6 characters (S,T,R,I,D,E), got " +
                 std::to_string(text.size())});
        return result;
    }
    StrideSet set;
    for (std::size_t i = 0; i < 6; ++i) {
        char ch = text[i];
        if (ch == 'Y') {
            set.insert(kAllStride[i]);
        } else if (ch != 'N') {
            result.diagnostics.push_back(
                {Severity::Error, "",
                 std::string("stride checklist position ") + std::to_string(i + 1) + " (" +
                     display_name(kAllStride[i]) + ") must be 'Y' or 'N', got '" + ch + "'"});
            return result;
        }
    }
    result.value = std::move(set);
    return result;
}

inline std::string stride_flags_string(const StrideSet& set) {
    std::string out(6, 'N');
    for (std::size_t i = 0; i < 6; ++i)
        if (set.count(kAllStride[i])) out[i] = 'Y';
    return out;
}

// ---------------------------------------------------------------------------
// SLSA
// ---------------------------------------------------------------------------

// L0 is the artifact-defined "no assurance" baseline below the four
// published levels, so assessment is total.
enum class SlsaLevel { L0, L1, L2, L3, L4 };

inline constexpr std::array<SlsaLevel, 5> kAllSlsaLevels = {
    SlsaLevel::L0, SlsaLevel::L1, SlsaLevel::L2, SlsaLevel::L3, SlsaLevel::L4};

inline const char* to_string(SlsaLevel l) {
    switch (l) {
        case SlsaLevel::L0: return "L0";
        case SlsaLevel::L1: return "L1";
        case SlsaLevel::L2: return "L2";
        case SlsaLevel::L3: return "L3";
        case SlsaLevel::L4: return "L4";
    }
    return "";
}

inline std::optional<SlsaLevel> parse_slsa_level(const std::string& s) {
    for (auto l : kAllSlsaLevels)
        if (s == to_string(l)) return l;
    return std::nullopt;
}

enum class SlsaCapability {
    ScriptedBuild,                      // L1: build script available
    HostedBuildProvenance,              // L2: hosted build and provenance
    HardenedBuildVerifiableProvenance,  // L3: trustworthy builds
    HermeticReproducible,               // L4: hermetic and reproducible builds
};

inline constexpr std::array<SlsaCapability, 4> kAllSlsaCapabilities = {
    SlsaCapability::ScriptedBuild,
    SlsaCapability::HostedBuildProvenance,
    SlsaCapability::HardenedBuildVerifiableProvenance,
    SlsaCapability::HermeticReproducible,
};

inline const char* to_string(SlsaCapability c) {
    switch (c) {
        case SlsaCapability::ScriptedBuild: return "scripted_build";
        case SlsaCapability::HostedBuildProvenance: return "hosted_build_provenance";
        case SlsaCapability::HardenedBuildVerifiableProvenance:
            return "hardened_build_verifiable_provenance";
        case SlsaCapability::HermeticReproducible: return "hermetic_reproducible";
    }
    return "";
}

inline std::optional<SlsaCapability> parse_slsa_capability(const std::string& s) {
    for (auto c : kAllSlsaCapabilities)
        if (s == to_string(c)) return c;
    return std::nullopt;
}

// Highest level whose capability prefix is fully present. Levels build on
// each other, so a gap in the chain caps the result at the prefix.
inline SlsaLevel slsa_level_from_capabilities(const std::set<SlsaCapability>& caps) {
    SlsaLevel level = SlsaLevel::L0;
    for (std::size_t i = 0; i < kAllSlsaCapabilities.size(); ++i) {
        if (!caps.count(kAllSlsaCapabilities[i])) break;
        level = static_cast<SlsaLevel>(static_cast<int>(SlsaLevel::L1) + static_cast<int>(i));
    }
    return level;
}

// True when the set skips a level (e.g. hermetic without hosted): legal
// input, but validation surfaces it as a warning.
inline bool slsa_capabilities_contiguous(const std::set<SlsaCapability>& caps) {
    bool gap_seen = false;
    for (auto c : kAllSlsaCapabilities) {
        if (!caps.count(c)) {
            gap_seen = true;
        } else if (gap_seen) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// SSDF practice ids
// ---------------------------------------------------------------------------

// Practice id of the form <group>.<digit>[.<digit>] with group in
// {PO, PS, PW, RV}. Stored opaquely beyond that shape.
struct SsdfPracticeId {
    std::string code;

    auto operator<=>(const SsdfPracticeId&) const = default;
};

inline std::optional<SsdfPracticeId> parse_ssdf_practice(const std::string& s) {
    static const std::vector<std::string> groups = {"PO", "PS", "PW", "RV"};
    if (s.size() < 4) return std::nullopt;
    std::string group = s.substr(0, 2);
    bool group_ok = false;
    for (const auto& g : groups) group_ok = group_ok || g == group;
    if (!group_ok) return std::nullopt;
    if (s[2] != '.' || !std::isdigit(static_cast<unsigned char>(s[3]))) return std::nullopt;
    if (s.size() == 4) return SsdfPracticeId{s};
    if (s.size() == 6 && s[4] == '.' && std::isdigit(static_cast<unsigned char>(s[5])))
        return SsdfPracticeId{s};
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// OWASP Top 10 references
// ---------------------------------------------------------------------------

struct OwaspCategory {
    std::string code;  // "A01".."A10", zero-padded
    std::string name;  // optional display string (editorial beyond what rows print)

    bool operator==(const OwaspCategory&) const = default;
};

inline std::optional<OwaspCategory> parse_owasp_code(const std::string& s) {
    if (s.size() != 3 || s[0] != 'A') return std::nullopt;
    if (!std::isdigit(static_cast<unsigned char>(s[1])) ||
        !std::isdigit(static_cast<unsigned char>(s[2])))
        return std::nullopt;
    int n = (s[1] - '0') * 10 + (s[2] - '0');
    if (n < 1 || n > 10) return std::nullopt;
    return OwaspCategory{s, ""};
}

// ---------------------------------------------------------------------------
// Pipeline stages
// ---------------------------------------------------------------------------

// Canonical stages key catalog threat entries; the extended values appear
// only in toolchain recommendation rows.
enum class PipelineStage {
    Source,
    Build,
    Deployment,
    Monitoring,
    ArtifactStorage,
    Runtime,
    AccessControl,
};

inline constexpr std::array<PipelineStage, 4> kCanonicalStages = {
    PipelineStage::Source, PipelineStage::Build, PipelineStage::Deployment,
    PipelineStage::Monitoring};

inline constexpr std::array<PipelineStage, 7> kAllStages = {
    PipelineStage::Source,          PipelineStage::Build,   PipelineStage::Deployment,
    PipelineStage::Monitoring,      PipelineStage::ArtifactStorage,
    PipelineStage::Runtime,         PipelineStage::AccessControl};

inline const char* to_string(PipelineStage s) {
    switch (s) {
        case PipelineStage::Source: return "source";
        case PipelineStage::Build: return "build";
        case PipelineStage::Deployment: return "deployment";
        case PipelineStage::Monitoring: return "monitoring";
        case PipelineStage::ArtifactStorage: return "artifact_storage";
        case PipelineStage::Runtime: return "runtime";
        case PipelineStage::AccessControl: return "access_control";
    }
    return "";
}

inline const char* display_name(PipelineStage s) {
    switch (s) {
        case PipelineStage::Source: return "Source";
        case PipelineStage::Build: return "Build";
        case PipelineStage::Deployment: return "Deployment";
        case PipelineStage::Monitoring: return "Monitoring";
        case PipelineStage::ArtifactStorage: return "Artifact Storage";
        case PipelineStage::Runtime: return "Runtime";
        case PipelineStage::AccessControl: return "Access Control";
    }
    return "";
}

inline bool is_canonical(PipelineStage s) {
    return static_cast<int>(s) <= static_cast<int>(PipelineStage::Monitoring);
}

inline int stage_index(PipelineStage s) { return static_cast<int>(s); }

inline std::optional<PipelineStage> parse_stage(const std::string& s) {
    for (auto st : kAllStages)
        if (s == to_string(st)) return st;
    return std::nullopt;
}

inline std::vector<std::string> canonical_stage_names() {
    std::vector<std::string> out;
    for (auto st : kCanonicalStages) out.emplace_back(to_string(st));
    return out;
}

// ---------------------------------------------------------------------------
// Assets, agents, controls
// ---------------------------------------------------------------------------

// Built-in ids are AS1..AS11; user extensions carry the reserved "ASX-"
// prefix so they can never collide with the closed built-in set.
struct AssetRef {
    std::string id;
    std::string description;

    bool operator==(const AssetRef&) const = default;
};

// Built-in ids are TA1..TA7; extensions use "TAX-".
struct ThreatAgentRef {
    std::string id;
    std::string name;
    std::string description;

    bool operator==(const ThreatAgentRef&) const = default;
};

inline constexpr const char* kCustomAssetPrefix = "ASX-";
inline constexpr const char* kCustomAgentPrefix = "TAX-";

// Numeric suffix of a built-in id ("AS10" -> 10, "TA3" -> 3), or nullopt.
inline std::optional<int> builtin_id_number(const std::string& id, const char* prefix) {
    std::string p(prefix);
    if (id.size() <= p.size() || id.compare(0, p.size(), p) != 0) return std::nullopt;
    int n = 0;
    for (std::size_t i = p.size(); i < id.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) return std::nullopt;
        n = n * 10 + (id[i] - '0');
    }
    return n;
}

// Orders builtin ids numerically (AS2 < AS10), customs after, lexicographically.
inline bool id_less(const std::string& a, const std::string& b) {
    auto na = builtin_id_number(a, "AS");
    if (!na) na = builtin_id_number(a, "TA");
    auto nb = builtin_id_number(b, "AS");
    if (!nb) nb = builtin_id_number(b, "TA");
    if (na && nb) return *na < *nb;
    if (na != nb) return na.has_value();  // builtins sort before customs
    return a < b;
}

struct IdLess {
    bool operator()(const std::string& a, const std::string& b) const { return id_less(a, b); }
};

using IdSet = std::set<std::string, IdLess>;

enum class ControlType { Preventive, Detective, Corrective };

inline const char* to_string(ControlType t) {
    switch (t) {
        case ControlType::Preventive: return "preventive";
        case ControlType::Detective: return "detective";
        case ControlType::Corrective: return "corrective";
    }
    return "";
}

inline std::optional<ControlType> parse_control_type(const std::string& s) {
    if (s == "preventive") return ControlType::Preventive;
    if (s == "detective") return ControlType::Detective;
    if (s == "corrective") return ControlType::Corrective;
    return std::nullopt;
}

// A mitigating control bullet. Ids are slugs frozen in the data file, not
// regenerated at runtime; control_type assignment is editorial catalog data.
struct ControlDescriptor {
    std::string id;
    std::string text;
    ControlType control_type = ControlType::Preventive;
    std::string classification;          // provenance of control_type ("editorial")
    std::vector<std::string> source_threats;  // derived at load: keys referencing this control

    bool operator==(const ControlDescriptor&) const = default;
};

// ---------------------------------------------------------------------------
// Data-flow model
// ---------------------------------------------------------------------------

struct DataFlow {
    std::string from;
    std::string to;
    std::string label;
    bool crosses_boundary = false;

    bool operator==(const DataFlow&) const = default;
};

struct TrustBoundary {
    std::string name;
    std::set<std::string> members;
    bool nested = false;  // may be contained in another boundary

    bool operator==(const TrustBoundary&) const = default;
};

// The user-authored description of one CI/CD pipeline, matched against the
// catalog by the analysis engine. Immutable after construction.
struct PipelineModel {
    std::string name;
    std::set<PipelineStage> stages;  // canonical only
    IdSet assets;
    IdSet agents;
    std::set<std::string> controls;  // control registry ids
    std::set<SlsaCapability> slsa_capabilities;
    std::vector<DataFlow> flows;
    std::vector<TrustBoundary> boundaries;
    std::map<std::string, AssetRef> custom_assets;       // ASX- declarations
    std::map<std::string, ThreatAgentRef> custom_agents; // TAX- declarations

    bool operator==(const PipelineModel&) const = default;
};

// ---------------------------------------------------------------------------
// Threat keys
// ---------------------------------------------------------------------------

inline std::optional<int> threat_number(const std::string& threat_id) {
    return builtin_id_number(threat_id, "T");
}

// Composite key: the same threat id can appear at more than one stage with
// distinct content (T14 is keyed at both Build and Deployment).
struct ThreatKey {
    std::string threat_id;
    PipelineStage stage = PipelineStage::Source;

    bool operator==(const ThreatKey&) const = default;

    // Stage-major, then numeric threat id: the deterministic tie order used
    // by prioritization.
    bool operator<(const ThreatKey& other) const {
        if (stage != other.stage) return stage_index(stage) < stage_index(other.stage);
        auto a = threat_number(threat_id), b = threat_number(other.threat_id);
        if (a && b && *a != *b) return *a < *b;
        return threat_id < other.threat_id;
    }

    std::string str() const { return threat_id + "@" + to_string(stage); }
};

}  // namespace pta
