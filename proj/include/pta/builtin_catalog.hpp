#pragma once

#include <stdexcept>
#include <string>

#include "pta/catalog.hpp"

namespace pta {

// The embedded knowledge base: asset inventory, threat agents, the 15-row
// stage-wise threat-control traceability matrix, SLSA/STRIDE coverage, stage
// applicability, aspect gaps, toolchain recommendations, incident
// annotations and the versioned import heuristics. Control ids are frozen
// slugs of the bullet texts; control_type values are editorial assignments
// (classification: editorial). The duplicate SSDF id in the (T14, build)
// row is kept as printed and deduplicated at load.
inline const char* builtin_catalog_text() {
    return R"json({
  "version": "1.0.0",
  "assets": [
    {"id": "AS1", "description": "User Credentials (developers, admins, CI/CD systems)"},
    {"id": "AS2", "description": "Source Code"},
    {"id": "AS3", "description": "CI/CD Configuration Files and Scripts"},
    {"id": "AS4", "description": "Secrets (e.g., environment variables, hardcoded credentials)"},
    {"id": "AS5", "description": "Artifacts (e.g., binaries, images, packages, SBOMs)"},
    {"id": "AS6", "description": "Build Machine and Data/Files Used During Build"},
    {"id": "AS7", "description": "Deployment Infrastructure and Its Configuration"},
    {"id": "AS8", "description": "Build and Audit Logs"},
    {"id": "AS9", "description": "Access Control Policies"},
    {"id": "AS10", "description": "SCM Metadata (commit history, user mappings, timestamps)"},
    {"id": "AS11", "description": "Runtime Containers and Virtual Machines"}
  ],
  "agents": [
    {"id": "TA1", "name": "Public Malicious Actor", "description": "External attacker leveraging stolen credentials, exposed APIs, misconfigurations, or public interfaces"},
    {"id": "TA2", "name": "Insider (Developer / Employee)", "description": "Authorized user who may act maliciously or accidentally compromise security (e.g., misconfigurations, secret leaks)"},
    {"id": "TA3", "name": "Artifact Repository User", "description": "User with access to push or pull artifacts (e.g., container images, packages) from artifact repositories"},
    {"id": "TA4", "name": "Build Runner User", "description": "User or automated process with access to CI/CD runners, build scripts, and temporary build artifacts"},
    {"id": "TA5", "name": "Deployment Operator", "description": "User responsible for deploying builds into staging or production environments"},
    {"id": "TA6", "name": "Source Control Admin (SCM Admin)", "description": "Admin-level user with elevated permissions in SCM platforms like GitHub or GitLab"},
    {"id": "TA7", "name": "Artifact Repository Admin", "description": "Administrator with full control over the artifact repository (e.g., configuration, access control, cleanup)"}
  ],
  "controls": [
    {"id": "mfa-for-all-users", "text": "MFA for all users", "control_type": "preventive", "classification": "editorial"},
    {"id": "rate-limit-login", "text": "Rate limit login", "control_type": "preventive", "classification": "editorial"},
    {"id": "rbac-least-privilege", "text": "RBAC (least privilege)", "control_type": "preventive", "classification": "editorial"},
    {"id": "idp-only-login", "text": "IDP-only login", "control_type": "preventive", "classification": "editorial"},
    {"id": "isolate-ci-config-access", "text": "Isolate CI config access", "control_type": "preventive", "classification": "editorial"},
    {"id": "block-unreviewed-runs-opa", "text": "Block unreviewed runs (OPA)", "control_type": "preventive", "classification": "editorial"},
    {"id": "ephemeral-runners", "text": "Ephemeral runners", "control_type": "preventive", "classification": "editorial"},
    {"id": "branch-protection", "text": "Branch protection", "control_type": "preventive", "classification": "editorial"},
    {"id": "pre-commit-secret-scan", "text": "Pre-commit secret scan", "control_type": "detective", "classification": "editorial"},
    {"id": "repo-scanning-rotation", "text": "Repo scanning + rotation", "control_type": "corrective", "classification": "editorial"},
    {"id": "block-deploy-with-secrets", "text": "Block deploy with secrets", "control_type": "preventive", "classification": "editorial"},
    {"id": "restrict-app-install-to-admins", "text": "Restrict app install to admins", "control_type": "preventive", "classification": "editorial"},
    {"id": "enforce-github-org-policy", "text": "Enforce GitHub org policy", "control_type": "preventive", "classification": "editorial"},
    {"id": "review-app-scopes", "text": "Review app scopes", "control_type": "detective", "classification": "editorial"},
    {"id": "enforce-pr-review", "text": "Enforce PR review", "control_type": "preventive", "classification": "editorial"},
    {"id": "disable-auto-merge", "text": "Disable auto-merge", "control_type": "preventive", "classification": "editorial"},
    {"id": "manual-approval-required", "text": "Manual approval required", "control_type": "preventive", "classification": "editorial"},
    {"id": "restrict-uploads-to-trusted-pipelines", "text": "Restrict uploads to trusted pipelines", "control_type": "preventive", "classification": "editorial"},
    {"id": "attach-and-verify-metadata", "text": "Attach and verify metadata", "control_type": "detective", "classification": "editorial"},
    {"id": "artifact-signing-delete-restrictions", "text": "Artifact signing + delete restrictions", "control_type": "preventive", "classification": "editorial"},
    {"id": "use-internal-proxies-for-dependencies", "text": "Use internal proxies for dependencies", "control_type": "preventive", "classification": "editorial"},
    {"id": "enforce-scoped-package-usage", "text": "Enforce scoped package usage", "control_type": "preventive", "classification": "editorial"},
    {"id": "scan-dependencies-pre-commit", "text": "Scan dependencies pre-commit", "control_type": "detective", "classification": "editorial"},
    {"id": "block-internet-bound-pulls-egress-firewall", "text": "Block internet-bound pulls (egress firewall)", "control_type": "preventive", "classification": "editorial"},
    {"id": "force-internal-proxy-in-ci-configs", "text": "Force internal proxy in CI configs", "control_type": "preventive", "classification": "editorial"},
    {"id": "monitor-for-direct-fetch-attempts", "text": "Monitor for direct fetch attempts", "control_type": "detective", "classification": "editorial"},
    {"id": "block-unsafe-patterns-with-opa", "text": "Block unsafe patterns with OPA", "control_type": "preventive", "classification": "editorial"},
    {"id": "alert-if-secrets-printed", "text": "Alert if secrets printed", "control_type": "detective", "classification": "editorial"},
    {"id": "use-short-lived-oidc-based-secrets", "text": "Use short-lived/OIDC-based secrets", "control_type": "preventive", "classification": "editorial"},
    {"id": "pr-scan-with-sca-tools-mend-snyk", "text": "PR scan with SCA tools (Mend/Snyk)", "control_type": "detective", "classification": "editorial"},
    {"id": "maintain-sbom", "text": "Maintain SBOM", "control_type": "detective", "classification": "editorial"},
    {"id": "use-vetted-registries", "text": "Use vetted registries", "control_type": "preventive", "classification": "editorial"},
    {"id": "enforce-artifact-signing-sigstore", "text": "Enforce artifact signing (Sigstore)", "control_type": "preventive", "classification": "editorial"},
    {"id": "sha-256-validation-in-toto", "text": "SHA-256 validation + in-toto", "control_type": "detective", "classification": "editorial"},
    {"id": "verify-provenance-before-deploy", "text": "Verify provenance before deploy", "control_type": "preventive", "classification": "editorial"},
    {"id": "enforce-pipeline-trigger-approvals", "text": "Enforce pipeline trigger approvals", "control_type": "preventive", "classification": "editorial"},
    {"id": "separate-deploy-privileges-sod", "text": "Separate deploy privileges (SoD)", "control_type": "preventive", "classification": "editorial"},
    {"id": "enable-iac-drift-detection", "text": "Enable IaC drift detection", "control_type": "detective", "classification": "editorial"},
    {"id": "block-deploy-on-config-mismatch", "text": "Block deploy on config mismatch", "control_type": "preventive", "classification": "editorial"},
    {"id": "use-checkov-terraform-drift-tools", "text": "Use Checkov, Terraform drift tools", "control_type": "detective", "classification": "editorial"},
    {"id": "enable-audit-logs-in-github-ci-artifacts", "text": "Enable audit logs in GitHub, CI, artifacts", "control_type": "detective", "classification": "editorial"},
    {"id": "monitor-runners-with-falco", "text": "Monitor runners with Falco", "control_type": "detective", "classification": "editorial"},
    {"id": "enable-scm-ci-cd-registry-logs", "text": "Enable SCM, CI/CD, registry logs", "control_type": "detective", "classification": "editorial"},
    {"id": "forward-logs-to-siem", "text": "Forward logs to SIEM", "control_type": "detective", "classification": "editorial"},
    {"id": "monitor-runners-with-falco-or-similar", "text": "Monitor runners with Falco or similar", "control_type": "detective", "classification": "editorial"}
  ],
  "entries": [
    {
      "threat_id": "T1", "stage": "source",
      "assets": ["AS1", "AS2", "AS3", "AS4"],
      "agents": ["TA1", "TA2"],
      "stride": "YNNYNY",
      "description": "Stolen credentials used to access SCM.",
      "owasp": [{"code": "A01"}, {"code": "A07"}],
      "controls": ["mfa-for-all-users", "rate-limit-login", "rbac-least-privilege", "idp-only-login"],
      "slsa_levels": [],
      "ssdf": ["PO.1.1", "PO.2.1", "PO.5.1", "PO.5.2", "PS.1.1"]
    },
    {
      "threat_id": "T5", "stage": "source",
      "assets": ["AS2", "AS3", "AS5", "AS6", "AS7"],
      "agents": ["TA2", "TA6"],
      "stride": "YYYNNN",
      "description": "CI/CD config tampering to inject secrets or logic.",
      "owasp": [{"code": "A08"}, {"code": "A04"}],
      "controls": ["isolate-ci-config-access", "block-unreviewed-runs-opa", "ephemeral-runners", "branch-protection"],
      "slsa_levels": ["L3", "L4"],
      "ssdf": ["PO.2.1", "PO.2.3", "PO.3.2", "PO.4.2", "PO.5.1", "PS.1.1", "PW.7.2", "RV.3.2"]
    },
    {
      "threat_id": "T4", "stage": "source",
      "assets": ["AS6", "AS3", "AS2", "AS7"],
      "agents": ["TA2", "TA6"],
      "stride": "NYNYNN",
      "description": "Secrets hardcoded into code or artifacts.",
      "owasp": [{"code": "A02"}, {"code": "A04"}],
      "controls": ["pre-commit-secret-scan", "repo-scanning-rotation", "block-deploy-with-secrets"],
      "slsa_levels": [],
      "ssdf": ["PO.3.2", "PO.4.2", "PS.1.1", "PW.4.1", "PW.5.1", "PW.7.2", "RV.3.2", "RV.3.3"]
    },
    {
      "threat_id": "T11", "stage": "source",
      "assets": ["AS1", "AS2", "AS5", "AS9"],
      "agents": ["TA2", "TA4", "TA6"],
      "stride": "NNNYNY",
      "description": "Developer installs malicious 3rd party GitHub/OAuth app.",
      "owasp": [{"code": "A05"}, {"code": "A08"}],
      "controls": ["restrict-app-install-to-admins", "enforce-github-org-policy", "review-app-scopes"],
      "slsa_levels": [],
      "ssdf": ["PO.1.1", "PO.1.3", "PO.2.1", "PW.4.1", "RV.1.1"]
    },
    {
      "threat_id": "T3", "stage": "build",
      "assets": ["AS2", "AS3", "AS4", "AS5"],
      "agents": ["TA2", "TA6"],
      "stride": "NYNYNY",
      "description": "Developer pushes unreviewed code to auto-deploy branch.",
      "owasp": [{"code": "A08"}, {"code": "A04"}],
      "controls": ["enforce-pr-review", "disable-auto-merge", "manual-approval-required"],
      "slsa_levels": ["L4"],
      "ssdf": ["PO.3.3", "PW.5.1", "PW.7.1", "PW.7.2", "PS.1.1"]
    },
    {
      "threat_id": "T14", "stage": "build",
      "assets": ["AS5", "AS3"],
      "agents": ["TA2", "TA3", "TA7"],
      "stride": "NYYYYY",
      "description": "Malicious artifact pushed or deleted from repository.",
      "owasp": [{"code": "A08"}, {"code": "A05"}],
      "controls": ["restrict-uploads-to-trusted-pipelines", "attach-and-verify-metadata", "artifact-signing-delete-restrictions"],
      "slsa_levels": ["L2", "L3"],
      "ssdf": ["PS.3.1", "PO.3.2", "PS.1.1", "PS.3.1", "PS.3.2", "RV.1.3"]
    },
    {
      "threat_id": "T9", "stage": "build",
      "assets": ["AS2", "AS3", "AS6", "AS7"],
      "agents": ["TA1", "TA2", "TA3", "TA4"],
      "stride": "YYNYNY",
      "description": "Malicious packages pulled from public registries (e.g., typosquatting).",
      "owasp": [{"code": "A06"}, {"code": "A08"}],
      "controls": ["use-internal-proxies-for-dependencies", "enforce-scoped-package-usage", "scan-dependencies-pre-commit"],
      "slsa_levels": [],
      "ssdf": ["PO.3.1", "PO.3.2", "PO.4.1", "PO.4.2", "PO.5.1", "PW.1.3", "PW.1.4", "PW.4.2", "PW.4.4", "PW.8.1", "RV.1.1"]
    },
    {
      "threat_id": "T2", "stage": "build",
      "assets": ["AS2", "AS3", "AS4", "AS5", "AS6", "AS7"],
      "agents": ["TA2", "TA6"],
      "stride": "YYNYNY",
      "description": "Developers bypass proxy and pull from untrusted public sources.",
      "owasp": [{"code": "A06"}, {"code": "A08"}],
      "controls": ["block-internet-bound-pulls-egress-firewall", "force-internal-proxy-in-ci-configs", "monitor-for-direct-fetch-attempts"],
      "slsa_levels": [],
      "ssdf": ["PO.3.1", "PW.1.3", "PW.4.1", "PS.3.1"]
    },
    {
      "threat_id": "T8", "stage": "build",
      "assets": ["AS3", "AS2", "AS5"],
      "agents": ["TA2", "TA6"],
      "stride": "NYNYNY",
      "description": "Secrets exfiltrated via echo/base64 commands in CI job.",
      "owasp": [{"code": "A01"}, {"code": "A05"}],
      "controls": ["block-unsafe-patterns-with-opa", "alert-if-secrets-printed", "use-short-lived-oidc-based-secrets"],
      "slsa_levels": [],
      "ssdf": ["PO.3.1", "PO.3.2", "PO.4.2", "PW.4.1", "PW.6.1", "PW.8.1", "RV.1.2"]
    },
    {
      "threat_id": "T7", "stage": "build",
      "assets": ["AS1", "AS4", "AS2"],
      "agents": ["TA2", "TA5", "TA6"],
      "stride": "NYYNNY",
      "description": "Developer includes outdated/vulnerable dependencies.",
      "owasp": [{"code": "A06"}],
      "controls": ["pr-scan-with-sca-tools-mend-snyk", "maintain-sbom", "use-vetted-registries"],
      "slsa_levels": ["L4"],
      "ssdf": ["PO.3.1", "PO.4.1", "PO.4.2", "PO.5.1", "PW.4.1", "PW.5.1", "RV.1.1", "RV.2.1"]
    },
    {
      "threat_id": "T12", "stage": "build",
      "assets": ["AS4", "AS2", "AS8", "AS10"],
      "agents": ["TA2", "TA6", "TA7"],
      "stride": "YYYNNN",
      "description": "Attacker tampers artifact between pipeline stages.",
      "owasp": [{"code": "A08"}],
      "controls": ["enforce-artifact-signing-sigstore", "sha-256-validation-in-toto", "verify-provenance-before-deploy"],
      "slsa_levels": ["L3", "L4"],
      "ssdf": ["PO.1.3", "PO.3.2", "PS.1.1", "PS.2.1", "PS.3.1", "PS.3.2", "PW.4.1", "PW.4.4", "PW.6.1"]
    },
    {
      "threat_id": "T10", "stage": "deployment",
      "assets": ["AS2", "AS3", "AS4", "AS5"],
      "agents": ["TA2", "TA6"],
      "stride": "NYNNNY",
      "description": "Unauthorized triggering of production deployment pipeline.",
      "owasp": [{"code": "A08"}, {"code": "A05"}],
      "controls": ["enforce-pipeline-trigger-approvals", "separate-deploy-privileges-sod"],
      "slsa_levels": ["L4"],
      "ssdf": ["PO.2.1", "PO.2.2", "PO.5.1"]
    },
    {
      "threat_id": "T13", "stage": "deployment",
      "assets": ["AS7"],
      "agents": ["TA2"],
      "agent_notes": {"TA2": "DevOps Insider"},
      "stride": "NYNNNN",
      "description": "Deployment to misconfigured or compromised infra (e.g., drifted Kubernetes cluster).",
      "owasp": [{"code": "A05"}],
      "controls": ["enable-iac-drift-detection", "block-deploy-on-config-mismatch", "use-checkov-terraform-drift-tools"],
      "slsa_levels": [],
      "ssdf": ["PO.1.2", "PO.3.2", "PO.4.2", "PO.5.1", "PW.6.1", "PW.9.1", "PW.9.2"]
    },
    {
      "threat_id": "T14", "stage": "deployment",
      "assets": ["AS1", "AS2", "AS5"],
      "agents": ["TA1", "TA2", "TA6"],
      "stride": "NYNYNY",
      "description": "Lack of logging or monitoring in SCM/pipeline/repo leads to undetected tampering or data exfiltration.",
      "owasp": [{"code": "A10"}],
      "controls": ["enable-audit-logs-in-github-ci-artifacts", "monitor-runners-with-falco"],
      "slsa_levels": [],
      "ssdf": ["PO.3.2", "PO.5.1", "PO.5.2"]
    },
    {
      "threat_id": "T6", "stage": "monitoring",
      "assets": ["AS1", "AS2", "AS5"],
      "agents": ["TA1", "TA2", "TA6"],
      "stride": "NYNYNY",
      "description": "Missing monitoring or logging allows pipeline abuse or tampering to go undetected.",
      "owasp": [{"code": "A10", "name": "Insufficient Logging and Monitoring"}],
      "controls": ["enable-scm-ci-cd-registry-logs", "forward-logs-to-siem", "monitor-runners-with-falco-or-similar"],
      "slsa_levels": [],
      "ssdf": ["PO.3.2", "PO.5.1", "PO.5.2"]
    }
  ],
  "coverage": {
    "matrix": {
      "spoofing": ["none", "none", "partial", "partial"],
      "tampering": ["partial", "full", "full", "full"],
      "repudiation": ["partial", "full", "full", "full"],
      "information_disclosure": ["none", "partial", "full", "full"],
      "denial_of_service": ["none", "none", "none", "none"],
      "elevation_of_privilege": ["none", "none", "none", "partial"]
    },
    "gap_notes": {
      "spoofing": "Identity verification limited to build infrastructure, not developer actors",
      "tampering": "Source-side tampering still possible (pre-provenance)",
      "repudiation": "Build provenance helps, but source commit repudiation remains",
      "information_disclosure": "No controls for secrets in logs, tokens in environments",
      "denial_of_service": "Resource abuse and CI flooding not addressed",
      "elevation_of_privilege": "Limited to hardened builders; RBAC and misconfigurations ignored"
    }
  },
  "applicability": [
    {"stage_label": "Source Code", "stage": "source", "typical_threats": "Malicious commits, secrets in code", "slsa_applies": {"kind": "partial", "levels": ["L4"]}, "stride_required": true},
    {"stage_label": "CI Configuration", "stage": "source", "typical_threats": "Insecure runners, exposed tokens", "slsa_applies": {"kind": "no", "levels": []}, "stride_required": true},
    {"stage_label": "Build & Artifact Creation", "stage": "build", "typical_threats": "Tampering, unverified tools", "slsa_applies": {"kind": "yes", "levels": ["L2", "L3", "L4"]}, "stride_required": true},
    {"stage_label": "Image Deployment", "stage": "deployment", "typical_threats": "Privilege escalation, misconfigured RBAC", "slsa_applies": {"kind": "no", "levels": []}, "stride_required": true}
  ],
  "aspects": [
    {"aspect": "Identity Authentication", "slsa_coverage": "Assumes trust in build service identity", "gap": "Does not address Spoofing across developer identities or API tokens"},
    {"aspect": "Tamper Resistance", "slsa_coverage": "Focuses on artifact tampering", "gap": "Limited to build system - less emphasis on config tampering or SCM"},
    {"aspect": "Auditing & Accountability", "slsa_coverage": "Provides provenance", "gap": "Not sufficient for detailed forensic Repudiation events"},
    {"aspect": "Information Protection", "slsa_coverage": "Metadata integrity ensured", "gap": "Secrets and credentials protection not explicitly enforced"},
    {"aspect": "Availability & Resilience", "slsa_coverage": "Not a core focus", "gap": "Denial of Service (DoS) risks in pipeline stages are unaddressed"},
    {"aspect": "Privilege Management", "slsa_coverage": "Recommends two-person review (Level 4)", "gap": "Broader Elevation of Privilege risks in CI/CD roles are overlooked"}
  ],
  "toolchain": [
    {"threat_id": "T1", "objective": "Prevent unauthorized access to SCM by enforcing identity verification and access control mechanisms", "tools_text": "GitHub SSO, MFA, Branch protection, OIDC, Okta, Azure AD", "stages": ["source"]},
    {"threat_id": "T2", "objective": "Restrict dependency resolution to approved internal repositories", "tools_text": "Artifact proxy setup + policy enforcement in config files (.npmrc, settings.xml, etc.)", "stages": ["build"]},
    {"threat_id": "T3", "objective": "Enforce pre-build validation gates and restrict automatic builds from unverified branches", "tools_text": "PR approvals, branch whitelisting, OPA policies, signed commits (DCO/GPG)", "stages": ["build"]},
    {"threat_id": "T4", "objective": "Prevent secret exposure in code repositories", "tools_text": "Gitleaks, GitHub Push Protection, Vault, AWS Secrets Manager", "stages": ["source"]},
    {"threat_id": "T5", "objective": "Enforce integrity and review of pipeline/IaC config files", "tools_text": "GitHub Branch Protection, OPA, Checkov, KICS, CI linters", "stages": ["source", "build"]},
    {"threat_id": "T6", "objective": "Enable centralized, tamper-evident logging and real-time monitoring", "tools_text": "Falco, Osquery, GitHub/GitLab audit logs, ELK, Splunk, Wazuh, SIEM", "stages": ["source", "build", "deployment", "runtime"]},
    {"threat_id": "T7", "objective": "Identify/remediate vulnerable OSS packages", "tools_text": "Trivy, Mend, Snyk, Endor Labs, Dependabot, SBOM (Syft, CycloneDX)", "stages": ["source", "build"]},
    {"threat_id": "T8", "objective": "Secure secret handling in pipelines and restrict exfiltration risks", "tools_text": "Masked variables, job scoping, OPA command controls, audit logs", "stages": ["build", "runtime"]},
    {"threat_id": "T9", "objective": "Detect and block vulnerable/malicious packages", "tools_text": "SCA tools: Trivy, Mend, PR block policy", "stages": ["build"]},
    {"threat_id": "T9", "objective": "Enforce allow-listing / proxy registry use", "tools_text": "Internal proxy: Nexus, Verdaccio", "stages": ["source", "build"]},
    {"threat_id": "T9", "objective": "Lock dependency versions and validate checksums", "tools_text": "Lock files (e.g., go.sum, package-lock.json), checksum validation", "stages": ["source", "build"]},
    {"threat_id": "T9", "objective": "Enable runtime protection and outbound network controls", "tools_text": "Egress restrictions, sandboxing, Falco, Sysdig", "stages": ["runtime"]},
    {"threat_id": "T10", "objective": "Restrict CI/CD job triggers to authorized personnel with policy-based approval for production", "tools_text": "RBAC, deployment approvals, identity-based triggers, OPA", "stages": ["deployment"]},
    {"threat_id": "T11", "objective": "Restrict and monitor 3rd-party app integrations", "tools_text": "GitHub Allow Lists, OAuth policies, CI audit logs, SIEM alerts", "stages": ["source", "access_control"]},
    {"threat_id": "T12", "objective": "Ensure artifact integrity via cryptographic signing and policy enforcement", "tools_text": "Cosign, in-toto, SLSA Provenance, GPG, OPA policies, access logs", "stages": ["build", "deployment"]},
    {"threat_id": "T13", "objective": "Validate target infra config and detect drift before deploy", "tools_text": "Driftctl, Terraform diff, OPA, tfsec, Checkov, kube-bench", "stages": ["deployment"]},
    {"threat_id": "T14", "objective": "Enforce artifact signing and integrity verification", "tools_text": "SLSA Provenance, Sigstore Cosign, in-toto", "stages": ["build"]},
    {"threat_id": "T14", "objective": "Require strong authentication and RBAC for artifact repositories", "tools_text": "IAM policies, scoped tokens, RBAC in Artifactory, ECR", "stages": ["artifact_storage"]},
    {"threat_id": "T14", "objective": "Immutable artifact policies to prevent overwrites or deletion", "tools_text": "Registry immutability/versioning settings", "stages": ["artifact_storage"]},
    {"threat_id": "T14", "objective": "Audit logs and alerting on sensitive artifact operations", "tools_text": "CloudTrail, ELK, Splunk", "stages": ["artifact_storage", "runtime"]}
  ],
  "incidents": [
    {"stride": "spoofing", "incident_name": "Codecov Bash Uploader Attack", "year": 2021, "summary": "Malicious actor modified trusted Bash Uploader script, exfiltrating secrets from CI environments."},
    {"stride": "spoofing", "incident_name": "CircleCI Incident", "year": 2023, "summary": "Compromised developer credentials enabled access to sensitive CI environment variables and tokens."},
    {"stride": "spoofing", "incident_name": "XcodeGhost", "year": 2015, "summary": "Developers unknowingly used a trojanized Xcode version, leading to spoofed app signing."},
    {"stride": "tampering", "incident_name": "SolarWinds Orion Backdoor", "year": 2020, "summary": "Build system compromise led to injection of malicious code into Orion software updates."},
    {"stride": "tampering", "incident_name": "PHP Git Server Breach", "year": 2021, "summary": "Attacker pushed malicious commits directly to PHP's source repo."},
    {"stride": "tampering", "incident_name": "Homebrew GitHub Attack", "year": 2021, "summary": "Attacker attempted to tamper with popular package management tools via GitHub pull requests."},
    {"stride": "repudiation", "incident_name": "Event-Stream npm Attack", "year": 2018, "summary": "Malicious code was added to a dependency without proper review; lack of logging delayed detection."},
    {"stride": "repudiation", "incident_name": "JetBrains TeamCity Exploitation", "year": 2020, "summary": "Attribution was difficult due to insufficient audit logs and observability in CI systems."},
    {"stride": "information_disclosure", "incident_name": "Uber AWS Credentials Leak", "year": 2016, "summary": "Hardcoded AWS keys pushed to GitHub, leading to data breach of 57 million users."},
    {"stride": "information_disclosure", "incident_name": "Heroku & Travis CI OAuth Leak", "year": 2022, "summary": "Exposed GitHub tokens gave attackers access to CI-connected repositories."},
    {"stride": "information_disclosure", "incident_name": "Slack GitHub Token Exposure", "year": 2015, "summary": "GitHub integration tokens were accidentally leaked, potentially granting repo access."},
    {"stride": "denial_of_service", "incident_name": "GitHub Actions Crypto Mining", "year": 2021, "summary": "Attackers used public repos to run unauthorized mining jobs, exhausting CI resources."},
    {"stride": "denial_of_service", "incident_name": "npm Registry Incident", "year": 2022, "summary": "Malicious behavior in a core dependency caused build failures and pipeline outages globally."},
    {"stride": "denial_of_service", "incident_name": "PyPI Flooding Attack", "year": 2022, "summary": "Malicious users spammed the registry, leading to temporary shutdowns."},
    {"stride": "elevation_of_privilege", "incident_name": "GitHub Actions RCE", "year": 2021, "summary": "Improper use of privileged workflows allowed untrusted PRs to execute code."},
    {"stride": "elevation_of_privilege", "incident_name": "Travis CI Misconfig", "year": 2021, "summary": "Leaked environment variables from builds allowed unauthorized privilege escalation."},
    {"stride": "elevation_of_privilege", "incident_name": "Azure DevOps RBAC Misconfig", "year": 2022, "summary": "Inadequate repo/project-level RBAC led to unauthorized access and potential privilege elevation."}
  ],
  "heuristics": [
    {"id": "secret-aws-access-key-id", "version": 1, "kind": "secret_regex", "pattern": "AKIA[A-Z0-9]{16}", "suggests_threat": {"threat_id": "T4", "stage": "source"}, "confidence": "high", "description": "AWS access key id committed to workflow or environment"},
    {"id": "secret-github-token", "version": 1, "kind": "secret_regex", "pattern": "gh[pousr]_[A-Za-z0-9]{36,}", "suggests_threat": {"threat_id": "T4", "stage": "source"}, "confidence": "high", "description": "GitHub personal access token in workflow or environment"},
    {"id": "secret-private-key-block", "version": 1, "kind": "secret_regex", "pattern": "-----BEGIN [A-Z ]*PRIVATE KEY-----", "suggests_threat": {"threat_id": "T4", "stage": "source"}, "confidence": "high", "description": "PEM private key material embedded in workflow"},
    {"id": "unpinned-action-ref", "version": 1, "kind": "unpinned_action", "pattern": "@[0-9a-f]{40}$", "suggests_threat": {"threat_id": "T9", "stage": "build"}, "confidence": "medium", "description": "Dependency reference without a pinned commit digest"},
    {"id": "unpinned-container-image", "version": 1, "kind": "unpinned_image", "pattern": "@sha256:[0-9a-f]{64}", "suggests_threat": {"threat_id": "T9", "stage": "build"}, "confidence": "medium", "description": "Container image reference without a sha256 digest"},
    {"id": "direct-public-fetch", "version": 1, "kind": "direct_fetch", "pattern": "(curl|wget)[^\n|;&]*https?://", "suggests_threat": {"threat_id": "T2", "stage": "build"}, "confidence": "medium", "description": "Step fetches directly from a public URL instead of an internal proxy"},
    {"id": "auto-deploy-on-push", "version": 1, "kind": "auto_deploy", "pattern": "(deploy|release|publish|prod)", "suggests_threat": {"threat_id": "T3", "stage": "build"}, "confidence": "low", "description": "Push-triggered workflow with a deploy-labeled job"}
  ]
})json";
}

// The embedded, already-validated catalog. Idempotent; failing validation of
// the embedded data is a defect, reported by throwing.
inline const Catalog& builtin_catalog() {
    static const Catalog catalog = [] {
        json doc = json::parse(builtin_catalog_text());
        LoadResult<Catalog> result = load_catalog(doc);
        if (!result.ok()) {
            std::string detail;
            for (const auto& d : result.errors()) detail += "\n  " + d.str();
            throw std::logic_error("builtin catalog failed validation:" + detail);
        }
        return *result.value;
    }();
    return catalog;
}

}  // namespace pta
