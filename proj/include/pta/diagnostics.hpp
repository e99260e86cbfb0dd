#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace pta {

enum class Severity { Info, Warning, Error };

inline const char* to_string(Severity s) {
    switch (s) {
        case Severity::Info: return "info";
        case Severity::Warning: return "warning";
        case Severity::Error: return "error";
    }
    return "error";
}

// One validation message, anchored to a JSON-pointer-style path into the
// offending document ("/entries/3/controls/2").
struct Diagnostic {
    Severity severity = Severity::Error;
    std::string path;
    std::string message;

    bool operator==(const Diagnostic&) const = default;

    std::string str() const {
        std::ostringstream os;
        os << to_string(severity) << ": " << path << ": " << message;
        return os.str();
    }
};

// Result of a parse/load: a value (when no error-severity diagnostics were
// produced) plus every diagnostic in document order.
template <typename T>
struct LoadResult {
    std::optional<T> value;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return value.has_value(); }

    bool has_errors() const {
        return std::any_of(diagnostics.begin(), diagnostics.end(),
                           [](const Diagnostic& d) { return d.severity == Severity::Error; });
    }

    std::vector<Diagnostic> errors() const {
        std::vector<Diagnostic> out;
        for (const auto& d : diagnostics)
            if (d.severity == Severity::Error) out.push_back(d);
        return out;
    }
};

// Collects diagnostics during document traversal.
class DiagnosticSink {
public:
    void error(std::string path, std::string message) {
        items_.push_back({Severity::Error, std::move(path), std::move(message)});
    }
    void warning(std::string path, std::string message) {
        items_.push_back({Severity::Warning, std::move(path), std::move(message)});
    }
    void info(std::string path, std::string message) {
        items_.push_back({Severity::Info, std::move(path), std::move(message)});
    }

    bool has_errors() const {
        return std::any_of(items_.begin(), items_.end(),
                           [](const Diagnostic& d) { return d.severity == Severity::Error; });
    }

    const std::vector<Diagnostic>& items() const { return items_; }
    std::vector<Diagnostic> take() { return std::move(items_); }

private:
    std::vector<Diagnostic> items_;
};

// Edit distance used for "did you mean" suggestions on closed enums.
inline std::size_t edit_distance(const std::string& a, const std::string& b) {
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

// Closest candidate within a small distance budget, or empty.
inline std::string suggest(const std::string& given, const std::vector<std::string>& candidates) {
    std::string best;
    std::size_t best_d = given.size() / 2 + 2;
    for (const auto& c : candidates) {
        std::size_t d = edit_distance(given, c);
        if (d < best_d) {
            best_d = d;
            best = c;
        }
    }
    return best;
}

}  // namespace pta
