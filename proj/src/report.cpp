#include "gl2/report.hpp"

namespace gl2 {

void Report::add_check(const std::string& name, bool pass, const std::string& witness) {
    checks.push_back(Check{name, pass, witness});
}

bool Report::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

int Report::exit_code() const {
    return all_pass() ? 0 : 2;
}

std::string Report::serialize() const {
    Json j;
    Json checks_json = Json::array();
    for (const auto& c : checks) {
        Json cj;
        cj["name"] = c.name;
        cj["status"] = c.pass ? "pass" : "fail";
        cj["witness"] = c.witness;
        checks_json.push_back(cj);
    }
    j["checks"] = checks_json;
    j["command"] = command;
    j["params"] = params;
    j["results"] = results;
    return j.dump(2) + "\n";
}

Json to_json(const SerreWeight& w) {
    Json j;
    j["digits"] = w.digits;
    j["twist"] = w.twist;
    return j;
}

Json to_json(const ToralCharacter& chi) {
    Json j;
    j["a_exp"] = chi.a_exp;
    j["d_exp"] = chi.d_exp;
    return j;
}

Json to_json(const CycleVector& z) {
    Json j = Json::object();
    for (u64 mask = 0; mask < (u64(1) << z.f()); ++mask) {
        MinimalPrime q{z.f(), mask};
        j[to_string(q)] = z.coeff(q);
    }
    return j;
}

Json to_json(const SubrepProfile& prof) {
    Json j;
    j["kind"] = prof.kind == ProfileKind::reducible ? "reducible" : "irreducible";
    j["ambient"] = prof.ambient();
    j["field"] = prof.field();
    j["dims"] = prof.dims();
    Json spaces = Json::array();
    for (const auto& s : prof.spaces)
        spaces.push_back(s.basis());
    j["spaces"] = spaces;
    return j;
}

} // namespace gl2
