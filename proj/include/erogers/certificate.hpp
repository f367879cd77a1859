#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

namespace erogers {

enum class Verdict { Pass, Fail, Unknown };

const char * to_string(Verdict v);

// Structured record of a construction run: parameters, checked predicates
// (with witnesses on failure), measured quantities and seeds. Serialises to
// JSON with sorted keys so that equal runs give byte-identical documents.
class Certificate {
public:
    explicit Certificate(std::string construction) : construction_(std::move(construction)) {}

    const std::string & construction() const { return construction_; }

    void param(const std::string & name, nlohmann::json value) { params_[name] = std::move(value); }
    void check(const std::string & name, Verdict v, nlohmann::json witness = nullptr);
    void check(const std::string & name, bool passed, nlohmann::json witness = nullptr)
    {
        check(name, passed ? Verdict::Pass : Verdict::Fail, std::move(witness));
    }
    void measure(const std::string & name, nlohmann::json value) { measures_[name] = std::move(value); }
    void seed(const std::string & label, std::uint64_t seed) { seeds_[label] = seed; }
    void note(const std::string & name, nlohmann::json value) { notes_[name] = std::move(value); }

    // Nests another certificate under a prefix.
    void attach(const std::string & name, const Certificate & child) { children_[name] = child.to_json(); }

    Verdict verdict(const std::string & name) const;
    bool has_check(const std::string & name) const { return checks_.contains(name); }
    bool all_pass() const;

    const nlohmann::json & params() const { return params_; }
    const nlohmann::json & measures() const { return measures_; }
    const nlohmann::json & checks() const { return checks_; }

    nlohmann::json to_json() const;
    std::string dump() const { return to_json().dump(2) + "\n"; }

private:
    std::string construction_;
    nlohmann::json params_ = nlohmann::json::object();
    nlohmann::json checks_ = nlohmann::json::object();
    nlohmann::json measures_ = nlohmann::json::object();
    nlohmann::json notes_ = nlohmann::json::object();
    nlohmann::json children_ = nlohmann::json::object();
    std::map<std::string, std::uint64_t> seeds_;
};

} // namespace erogers
