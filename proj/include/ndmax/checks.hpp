#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "ndmax/zoo.hpp"

namespace ndmax::checks {

enum class Verdict { pass, fail, evidence };
std::string verdict_name(Verdict v);

struct CheckOptions {
    std::uint64_t seed = 1;
    std::map<std::string, std::string> overrides;
    zoo::Caps caps;
};

struct LemmaCheck {
    std::string id;
    std::string summary;
    nlohmann::json parameters;
    Verdict verdict = Verdict::pass;
    std::vector<std::string> failures;
    nlohmann::json artifacts;

    nlohmann::json to_json() const;
};

struct Registration {
    std::string id;
    std::string summary;
    bool evidence = false;  // probes an infinite-space claim at finite depth
};
const std::vector<Registration>& registry();
bool registered(const std::string& id);

// Runs one registered check. Unknown ids raise std::out_of_range; a
// construction exceeding its caps raises BuildError.
LemmaCheck verify(const std::string& id, const CheckOptions& opt = {});

// JSON number rounded to 12 significant digits; infinities become strings.
nlohmann::json num(double x);

}  // namespace ndmax::checks
