#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gl2/charcycle.hpp"
#include "gl2/diagram.hpp"

namespace gl2 {

using Json = nlohmann::json; // object keys are kept sorted

struct Check {
    std::string name;
    bool pass = true;
    std::string witness;
};

// One report per invocation: command, echoed inputs, structured results,
// and named checks. Serialization is deterministic: sorted keys, integers
// only, no floating point anywhere.
struct Report {
    std::string command;
    Json params = Json::object();
    Json results = Json::object();
    std::vector<Check> checks;

    void add_check(const std::string& name, bool pass, const std::string& witness = "");
    bool all_pass() const;
    // 0 when every check passes, 2 when a mathematical check failed.
    int exit_code() const;
    std::string serialize() const;
};

Json to_json(const SerreWeight& w);
Json to_json(const ToralCharacter& chi);
Json to_json(const CycleVector& z);
Json to_json(const SubrepProfile& prof);

} // namespace gl2
