#include "wigner/config.hpp"

#include "wigner/error.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace wigner {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& key, const std::string& what) {
    fail(ErrorKind::config, key + ": " + what);
}

void allow_only(const json& object, const std::string& where, std::initializer_list<const char*> keys) {
    const std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& [key, value] : object.items())
        if (!allowed.contains(key)) bad(where.empty() ? key : where + "." + key, "unknown key");
}

std::uint64_t as_unsigned(const json& v, const std::string& key) {
    if (!v.is_number_integer()) bad(key, "expected a nonnegative integer");
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    const auto s = v.get<std::int64_t>();
    if (s < 0) bad(key, "expected a nonnegative integer");
    return static_cast<std::uint64_t>(s);
}

const json& array_at(const json& doc, const std::string& key) {
    const auto& v = doc.at(key);
    if (!v.is_array()) bad(key, "expected an array");
    return v;
}

std::vector<unsigned> unsigned_list(const json& v, const std::string& key, unsigned minimum) {
    if (!v.is_array()) bad(key, "expected an array");
    std::vector<unsigned> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto u = as_unsigned(v[i], key + "[" + std::to_string(i) + "]");
        if (u < minimum || u > 1'000'000) bad(key + "[" + std::to_string(i) + "]", "out of range");
        out.push_back(static_cast<unsigned>(u));
    }
    return out;
}

FunctionSpec parse_function(const json& f, const std::string& key) {
    if (!f.is_object()) bad(key, "expected an object");
    allow_only(f, key, {"name", "polynomial", "analytic", "order", "orders"});
    if (!f.contains("name") || !f["name"].is_string()) bad(key + ".name", "required string");
    FunctionSpec spec{f["name"].get<std::string>(), TestFunction::polynomial({0.0}), {}};
    const bool poly = f.contains("polynomial"), ana = f.contains("analytic");
    if (poly == ana) bad(key, "exactly one of 'polynomial' or 'analytic' is required");
    if (poly) {
        const auto& c = f["polynomial"];
        if (!c.is_array() || c.empty()) bad(key + ".polynomial", "expected a nonempty coefficient array");
        std::vector<double> coeffs;
        for (const auto& x : c) {
            if (!x.is_number()) bad(key + ".polynomial", "coefficients must be numbers");
            coeffs.push_back(x.get<double>());
        }
        if (f.contains("order")) bad(key + ".order", "only valid for analytic functions");
        spec.g = TestFunction::polynomial(std::move(coeffs));
    } else {
        if (!f["analytic"].is_string()) bad(key + ".analytic", "expected a function name");
        unsigned order = 0;
        if (f.contains("order")) order = static_cast<unsigned>(as_unsigned(f["order"], key + ".order"));
        try {
            spec.g = TestFunction::analytic(f["analytic"].get<std::string>(), order);
        } catch (const Error& e) {
            bad(key + ".analytic", e.what());
        }
    }
    if (f.contains("orders")) spec.orders = unsigned_list(f["orders"], key + ".orders", 0);
    return spec;
}

std::filesystem::path resolve_output(const std::string& given, const std::filesystem::path& base) {
    const std::filesystem::path p(given);
    if (const char* dir = std::getenv(kOutputDirVariable.data()); dir != nullptr && *dir != '\0')
        return std::filesystem::path(dir) / p.filename();
    return p.is_absolute() ? p : base / p;
}

} // namespace

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << std::hex;
    out.width(16);
    out.fill('0');
    out << h;
    return out.str();
}

RunConfig parse_config(std::string_view text, const std::filesystem::path& base) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        bad("config", std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) bad("config", "top level must be an object");
    allow_only(doc, "", {"ensemble", "dimensions", "replicas", "seed", "functions", "powers",
                         "edge_times", "edge_count", "checks", "output", "workers"});
    for (const char* key : {"ensemble", "dimensions", "replicas", "seed"})
        if (!doc.contains(key)) bad(key, "required key missing");

    RunConfig out;
    auto& c = out.experiment;
    if (!doc["ensemble"].is_string()) bad("ensemble", "expected a string");
    c.ensemble = doc["ensemble"].get<std::string>();
    try {
        (void)EntryDistribution::from_name(c.ensemble);
    } catch (const Error& e) {
        bad("ensemble", e.what());
    }
    for (const auto& v : unsigned_list(array_at(doc, "dimensions"), "dimensions", 1)) c.dimensions.push_back(v);
    if (c.dimensions.empty()) bad("dimensions", "at least one dimension required");
    c.replicas = as_unsigned(doc["replicas"], "replicas");
    c.seed = as_unsigned(doc["seed"], "seed");
    if (doc.contains("functions")) {
        const auto& fs = array_at(doc, "functions");
        for (std::size_t i = 0; i < fs.size(); ++i)
            c.functions.push_back(parse_function(fs[i], "functions[" + std::to_string(i) + "]"));
    }
    if (doc.contains("powers")) c.powers = unsigned_list(doc["powers"], "powers", 1);
    if (doc.contains("edge_times")) {
        const auto& ts = array_at(doc, "edge_times");
        for (std::size_t i = 0; i < ts.size(); ++i) {
            const std::string key = "edge_times[" + std::to_string(i) + "]";
            if (!ts[i].is_number()) bad(key, "expected a number");
            const double t = ts[i].get<double>();
            if (!(t > 0.0) || !std::isfinite(t)) bad(key, "edge times must be positive");
            c.edge_times.push_back(t);
        }
    }
    if (doc.contains("edge_count")) c.edge_count = as_unsigned(doc["edge_count"], "edge_count");
    if (doc.contains("checks")) {
        const auto& cs = array_at(doc, "checks");
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (!cs[i].is_string()) bad("checks[" + std::to_string(i) + "]", "expected a check name");
            c.checks.push_back(cs[i].get<std::string>());
        }
    }
    if (doc.contains("workers")) c.workers = static_cast<int>(as_unsigned(doc["workers"], "workers"));

    std::string records = "records.jsonl", summary = "summary.csv";
    if (doc.contains("output")) {
        const auto& o = doc["output"];
        if (!o.is_object()) bad("output", "expected an object");
        allow_only(o, "output", {"records", "summary"});
        if (o.contains("records")) {
            if (!o["records"].is_string()) bad("output.records", "expected a path");
            records = o["records"].get<std::string>();
        }
        if (o.contains("summary")) {
            if (!o["summary"].is_string()) bad("output.summary", "expected a path");
            summary = o["summary"].get<std::string>();
        }
    }
    out.records_path = resolve_output(records, base);
    out.summary_path = resolve_output(summary, base);

    c.validate();
    doc.erase("workers");
    out.canonical = doc.dump();
    out.digest = fnv1a_hex(out.canonical);
    return out;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) bad("config", "cannot read '" + path.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str(), path.has_parent_path() ? path.parent_path() : ".");
}

} // namespace wigner
