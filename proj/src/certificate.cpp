#include <erogers/certificate.hpp>

namespace erogers {

const char * to_string(Verdict v)
{
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

void Certificate::check(const std::string & name, Verdict v, nlohmann::json witness)
{
    nlohmann::json entry = {{"verdict", to_string(v)}};
    if (! witness.is_null())
        entry["witness"] = std::move(witness);
    checks_[name] = std::move(entry);
}

Verdict Certificate::verdict(const std::string & name) const
{
    auto it = checks_.find(name);
    if (it == checks_.end())
        return Verdict::Unknown;
    auto s = (*it)["verdict"].get<std::string>();
    return s == "pass" ? Verdict::Pass : s == "fail" ? Verdict::Fail : Verdict::Unknown;
}

bool Certificate::all_pass() const
{
    for (auto & [name, entry] : checks_.items())
        if (entry["verdict"] != "pass")
            return false;
    return true;
}

nlohmann::json Certificate::to_json() const
{
    nlohmann::json j;
    j["construction"] = construction_;
    j["parameters"] = params_;
    j["checks"] = checks_;
    j["measures"] = measures_;
    j["seeds"] = seeds_;
    if (! notes_.empty())
        j["notes"] = notes_;
    if (! children_.empty())
        j["parts"] = children_;
    return j;
}

} // namespace erogers
