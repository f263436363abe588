#include "toepcomm/registry.hpp"

#include <cstdlib>

namespace toepcomm {

const std::vector<NamedExample>& example_registry() {
    static const std::vector<NamedExample> registry = {
        {"identity", "z", "the shift; minimal commutant via Fejer means"},
        {"halfshift", "z+0.5", "univalent translate with a Jordan image"},
        {"cardioid", "(z+0.5)^2", "inner loop doubly covered, outer region single covered"},
        {"power:n", "z^n", "pure power; double commutant property for every n"},
        {"blaschke:re,im;re,im;...", "blaschke[...]", "finite Blaschke product with the given zeros"},
        {"zsquare-plus-z4", "z^2+z^4", "factors through z^2 with a non-univalent outer part"},
    };
    return registry;
}

namespace {

bool parse_int(const std::string& text, int& out) {
    if (text.empty()) return false;
    char* end = nullptr;
    const long v = std::strtol(text.c_str(), &end, 10);
    if (end == nullptr || *end != '\0' || v < 1 || v > 1000000) return false;
    out = static_cast<int>(v);
    return true;
}

// "re,im;re,im;..." -> blaschke[...] DSL
std::optional<std::string> blaschke_dsl(const std::string& spec) {
    std::string dsl = "blaschke[";
    std::size_t pos = 0;
    bool first = true;
    while (pos <= spec.size()) {
        const std::size_t semi = spec.find(';', pos);
        const std::string pair = spec.substr(pos, semi == std::string::npos ? std::string::npos
                                                                            : semi - pos);
        const std::size_t comma = pair.find(',');
        if (pair.empty() || comma == std::string::npos) return std::nullopt;
        const std::string re = pair.substr(0, comma);
        const std::string im = pair.substr(comma + 1);
        if (re.empty() || im.empty()) return std::nullopt;
        if (!first) dsl += ',';
        first = false;
        if (im == "0" || im == "-0" || im == "0.0") {
            dsl += re;
        } else if (im[0] == '-') {
            dsl += re + "-" + im.substr(1) + "i";
        } else {
            dsl += re + "+" + im + "i";
        }
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    dsl += ']';
    return dsl;
}

}  // namespace

std::optional<std::string> example_dsl(const std::string& name) {
    if (name == "identity") return "z";
    if (name == "halfshift") return "z+0.5";
    if (name == "cardioid") return "(z+0.5)^2";
    if (name == "zsquare-plus-z4") return "z^2+z^4";
    if (name.rfind("power:", 0) == 0) {
        int n = 0;
        if (!parse_int(name.substr(6), n)) return std::nullopt;
        return "z^" + std::to_string(n);
    }
    if (name.rfind("blaschke:", 0) == 0) return blaschke_dsl(name.substr(9));
    return std::nullopt;
}

std::vector<std::string> example_suite_names() {
    return {"identity",  "halfshift", "cardioid",           "power:2", "power:3",
            "power:4",   "power:6",   "blaschke:0.5,0;-0.5,0", "zsquare-plus-z4"};
}

}  // namespace toepcomm
