#include "finring/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace finring {

using nlohmann::json;

FiniteRing load_ring_json(std::istream& in, ValidationMode mode) {
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        raise("ParseError", std::string("bad ring JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("size") || !j.contains("add") || !j.contains("mul"))
        raise("ParseError", "ring JSON needs size, add, mul");
    std::size_t size = j.at("size").get<std::size_t>();
    if (size == 0 || size > 65535) raise("ParseError", "ring size out of range");

    auto read_table = [&](const char* key) {
        const json& t = j.at(key);
        if (!t.is_array() || t.size() != size)
            raise("ParseError", std::string(key) + " must be a size x size array");
        std::vector<Elem> out;
        out.reserve(size * size);
        for (const auto& row : t) {
            if (!row.is_array() || row.size() != size)
                raise("ParseError", std::string(key) + " must be a size x size array");
            for (const auto& v : row) {
                long long x = v.get<long long>();
                if (x < 0 || static_cast<std::size_t>(x) >= size)
                    raise("ParseError", std::string(key) + " entry out of range");
                out.push_back(static_cast<Elem>(x));
            }
        }
        return out;
    };
    std::vector<Elem> add = read_table("add");
    std::vector<Elem> mul = read_table("mul");

    std::optional<Elem> one;
    if (j.contains("one") && !j.at("one").is_null()) {
        long long o = j.at("one").get<long long>();
        if (o < 0 || static_cast<std::size_t>(o) >= size) raise("ParseError", "one out of range");
        one = static_cast<Elem>(o);
    }
    std::vector<std::string> labels;
    if (j.contains("labels") && !j.at("labels").is_null()) {
        labels = j.at("labels").get<std::vector<std::string>>();
        if (labels.size() != size) raise("ParseError", "labels length must equal size");
    }
    return validate_tables(size, std::move(add), std::move(mul), one, std::move(labels), mode);
}

FiniteRing load_ring_file(const std::string& path, ValidationMode mode) {
    std::ifstream in(path);
    if (!in) raise("IoError", "cannot open " + path);
    return load_ring_json(in, mode);
}

std::string ring_to_json(const FiniteRing& r) {
    json j;
    j["size"] = r.size();
    if (r.unital()) j["one"] = *r.one();
    else j["one"] = nullptr;
    auto table = [&](const std::vector<Elem>& t) {
        json rows = json::array();
        for (std::size_t i = 0; i < r.size(); ++i) {
            json row = json::array();
            for (std::size_t k = 0; k < r.size(); ++k) row.push_back(t[i * r.size() + k]);
            rows.push_back(std::move(row));
        }
        return rows;
    };
    j["add"] = table(r.add_table());
    j["mul"] = table(r.mul_table());
    j["labels"] = r.labels();
    return j.dump(2);
}

void save_ring_file(const FiniteRing& r, const std::string& path) {
    std::ofstream out(path);
    if (!out) raise("IoError", "cannot write " + path);
    out << ring_to_json(r) << "\n";
}

}  // namespace finring
