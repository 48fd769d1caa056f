#pragma once

#include "freight/scenario.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace freight {

/// Plain-text "key = value" settings with per-key origin tracking.
///
/// '#' starts a comment line; blank lines are ignored; each key may appear
/// once per file. Later layers (file over defaults, flags over file)
/// replace earlier values.
class KeyValueConfig {
public:
    struct Entry {
        std::string value;
        std::string origin; // "default", "file:<path>", "flag"
    };

    /// Throws StructuralError for malformed lines, unknown or duplicate keys.
    static KeyValueConfig parse(std::string_view text, const std::string& origin);

    /// Throws StructuralError for unknown keys.
    void set(const std::string& key, std::string value, std::string origin);
    void merge(const KeyValueConfig& higher_priority);

    bool contains(const std::string& key) const { return entries_.count(key) != 0; }
    std::optional<std::string> get(const std::string& key) const;

    /// Throw InputError (missing key) or ParseError (malformed value).
    std::string text(const std::string& key) const;
    double number(const std::string& key) const;
    int integer(const std::string& key) const;

    const std::map<std::string, Entry>& entries() const { return entries_; }

    static bool is_known_key(std::string_view key);

private:
    std::map<std::string, Entry> entries_;
};

/// Settings that reproduce the published growth matrix: simple growth from
/// 10.698 million tons over 16 years, GDP 37,847 growing 4% a year discounted
/// at the rate implied by a GDP PV of 530,161, and both effect engines
/// calibrated against the published effect column.
const KeyValueConfig& canonical_defaults();

/// "a:b:step" (inclusive, step > 0) or a comma-separated list of rates.
std::vector<double> parse_growth_grid(std::string_view text);

struct ResolvedScenario {
    ScenarioConfig config;
    std::string discount_source; // "implied", "explicit", "capm"
    std::vector<std::pair<std::string, std::string>> derived; // values computed during resolution
};

/// Builds a ScenarioConfig from merged settings. The discount rate comes from
/// discount_rate = <number> | implied | capm.
ResolvedScenario resolve_scenario(const KeyValueConfig& cfg);

/// Number of the discount rate alone (shared by calibrate).
double resolve_discount(const KeyValueConfig& cfg, std::string* source = nullptr);

StructuralSetup structural_setup(const KeyValueConfig& cfg, double discount);

} // namespace freight
