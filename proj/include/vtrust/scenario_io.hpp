#pragma once

// JSON scenario documents. See docs/scenario-format.md for the schema.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "vtrust/delegation.hpp"

namespace vtrust {

inline constexpr std::string_view kScenarioFormatVersion = "vtrust-scenario/1";

class ScenarioError : public std::runtime_error {
public:
    enum class Kind { io, parse, schema, semantic };

    /// `where` is "line L, column C" for parse errors and a JSON pointer otherwise.
    ScenarioError(Kind kind, std::string where, const std::string& message);

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] const std::string& where() const { return where_; }

private:
    Kind kind_;
    std::string where_;
};

[[nodiscard]] std::string_view to_string(ScenarioError::Kind kind);

[[nodiscard]] Scenario parse_scenario(std::string_view text);
[[nodiscard]] Scenario load_scenario(const std::filesystem::path& path);

/// Canonical form: sorted names, sorted agents, 2-space indentation, trailing newline.
[[nodiscard]] std::string serialize_scenario(const Scenario& scenario);

}  // namespace vtrust
