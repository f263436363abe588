#pragma once

#include <optional>
#include <string>
#include <vector>

namespace toepcomm {

struct NamedExample {
    std::string name;  // registry key or parametric form
    std::string dsl;   // DSL text, or a description for parametric entries
    std::string note;
};

// The named-example registry: identity, halfshift, cardioid, power:n,
// blaschke:re,im;re,im;..., zsquare-plus-z4.
const std::vector<NamedExample>& example_registry();

// Resolve a registry name (including parametric power:n and
// blaschke:...) to DSL text; nullopt for unknown names.
std::optional<std::string> example_dsl(const std::string& name);

// Concrete instantiation of the registry used by the determinism suite.
std::vector<std::string> example_suite_names();

}  // namespace toepcomm
