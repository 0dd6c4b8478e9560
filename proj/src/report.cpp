#include "imprim/report.hpp"

#include <fstream>
#include <sstream>

namespace imprim {

json itype_set_to_json(const ITypeSet& s) {
    json j;
    j["n"] = s.n;
    j["itype"] = json::array();
    j["witnesses"] = json::object();
    for (const auto& [pair, w] : s.entries) {
        j["itype"].push_back({pair.k, pair.m});
        json wit;
        wit["clusters"] = json::array();
        for (const auto& c : w.clustering.clusters)
            wit["clusters"].push_back(c.parts());
        wit["k_i"] = w.k_i;
        j["witnesses"][std::to_string(pair.k) + "," + std::to_string(pair.m)] =
            std::move(wit);
    }
    return j;
}

ITypeSet itype_set_from_json(const json& j) {
    ITypeSet s;
    s.n = j.at("n").get<std::uint64_t>();
    for (const auto& e : j.at("itype")) {
        ITypePair pair{e.at(0).get<std::uint64_t>(), e.at(1).get<std::uint64_t>()};
        const std::string key =
            std::to_string(pair.k) + "," + std::to_string(pair.m);
        const auto& wit = j.at("witnesses").at(key);
        ITypeWitness w;
        for (const auto& c : wit.at("clusters"))
            w.clustering.clusters.push_back(
                Partition(c.get<std::vector<std::uint64_t>>()));
        w.k_i = wit.at("k_i").get<std::vector<std::uint64_t>>();
        s.entries.emplace(pair, std::move(w));
    }
    return s;
}

namespace {

std::string trimmed(std::string line) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = line.find_last_not_of(" \t\r\n");
    return line.substr(first, last - first + 1);
}

} // namespace

PermutationGroup read_group(std::istream& in) {
    std::string raw;
    std::size_t lineno = 0;
    int degree = -1;
    std::vector<Perm> gens;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = trimmed(raw);
        if (line.empty()) continue;
        if (degree < 0) {
            std::istringstream ss(line);
            std::string keyword;
            long long n = 0;
            if (!(ss >> keyword >> n) || keyword != "degree" || n < 1 ||
                n > 1000000 || (ss >> keyword))
                throw parse_error("group file must start with 'degree N'", lineno);
            degree = static_cast<int>(n);
            continue;
        }
        try {
            gens.push_back(Perm::parse(line, degree));
        } catch (const parse_error& e) {
            throw parse_error(std::string("bad generator: ") + e.what(), lineno);
        }
    }
    if (degree < 0)
        throw parse_error("group file must start with 'degree N'", lineno);
    return PermutationGroup(degree, std::move(gens));
}

PermutationGroup read_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open group file '" + path + "'");
    return read_group(in);
}

void write_group(std::ostream& out, const PermutationGroup& g) {
    out << "degree " << g.degree() << "\n";
    for (const auto& s : g.generators()) out << s.str() << "\n";
}

namespace {

std::string json_type_name(const json& v) {
    if (v.is_object()) return "object";
    if (v.is_array()) return "array";
    if (v.is_string()) return "string";
    if (v.is_boolean()) return "boolean";
    if (v.is_null()) return "null";
    if (v.is_number_integer() || v.is_number_unsigned()) return "integer";
    return "number";
}

bool type_matches(const json& v, const std::string& want) {
    const std::string got = json_type_name(v);
    if (want == got) return true;
    return want == "number" && got == "integer";
}

bool fail(std::string* error, const std::string& path, const std::string& msg) {
    if (error) *error = path + ": " + msg;
    return false;
}

bool validate_at(const json& value, const json& schema, const std::string& path,
                 std::string* error) {
    if (schema.contains("type")) {
        const auto& t = schema.at("type");
        bool ok = false;
        if (t.is_array()) {
            for (const auto& alt : t)
                ok = ok || type_matches(value, alt.get<std::string>());
        } else {
            ok = type_matches(value, t.get<std::string>());
        }
        if (!ok)
            return fail(error, path,
                        "expected type " + t.dump() + ", got " + json_type_name(value));
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& alt : schema.at("enum")) ok = ok || alt == value;
        if (!ok) return fail(error, path, "value not in enum " + schema.at("enum").dump());
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema.at("required"))
                if (!value.contains(key.get<std::string>()))
                    return fail(error, path,
                                "missing required key '" + key.get<std::string>() + "'");
        const json* props = schema.contains("properties") ? &schema.at("properties") : nullptr;
        for (const auto& [key, sub] : value.items()) {
            const std::string sub_path = path + "/" + key;
            if (props && props->contains(key)) {
                if (!validate_at(sub, props->at(key), sub_path, error)) return false;
            } else if (schema.contains("additionalProperties")) {
                const auto& extra = schema.at("additionalProperties");
                if (extra.is_boolean()) {
                    if (!extra.get<bool>())
                        return fail(error, sub_path, "additional property not allowed");
                } else if (!validate_at(sub, extra, sub_path, error)) {
                    return false;
                }
            }
        }
    }
    if (value.is_array() && schema.contains("items")) {
        const auto& items = schema.at("items");
        for (std::size_t i = 0; i < value.size(); ++i)
            if (!validate_at(value[i], items, path + "/" + std::to_string(i), error))
                return false;
    }
    return true;
}

} // namespace

bool validate_against_schema(const json& value, const json& schema,
                             std::string* error) {
    return validate_at(value, schema, "", error);
}

} // namespace imprim
