#include "qframe/io.hpp"

#include <cmath>
#include <fstream>

#include "qframe/errors.hpp"

namespace qframe {

using nlohmann::json;

namespace {

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

std::size_t read_dim(const json& j, const std::string& context) {
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_unsigned()) {
        throw ParseError(context + ": expected an object with an unsigned \"dim\"");
    }
    const std::size_t dim = j["dim"].get<std::size_t>();
    if (dim == 0) throw ValidationError(context + ": dim must be positive");
    return dim;
}

} // namespace

json quaternion_to_json(const Quaternion& q) {
    return json::array({q.w, q.x, q.y, q.z});
}

Quaternion quaternion_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) {
        throw ParseError("quaternion must be a [w, x, y, z] array");
    }
    for (const auto& c : j) {
        if (!c.is_number()) throw ParseError("quaternion component must be a number");
    }
    const Quaternion q(j[0].get<double>(), j[1].get<double>(), j[2].get<double>(),
                       j[3].get<double>());
    if (!is_finite(q)) throw ValidationError("quaternion component is not finite");
    return q;
}

json qvector_to_json(const QVector& v) {
    json arr = json::array();
    for (std::size_t i = 0; i < v.size(); ++i) arr.push_back(quaternion_to_json(v[i]));
    return arr;
}

json coefficients_to_json(const CoefficientVector& c) {
    json arr = json::array();
    for (std::size_t i = 0; i < c.size(); ++i) arr.push_back(quaternion_to_json(c[i]));
    return arr;
}

json frame_to_json(std::size_t dim, const std::vector<QVector>& vectors) {
    json vecs = json::array();
    for (const auto& v : vectors) vecs.push_back(qvector_to_json(v));
    return json{{"dim", dim}, {"vectors", std::move(vecs)}};
}

namespace {

QVector vector_from_json(const json& j, std::size_t dim, const std::string& context) {
    if (!j.is_array()) throw ParseError(context + ": vector must be an array");
    std::vector<Quaternion> entries;
    entries.reserve(j.size());
    for (const auto& e : j) entries.push_back(quaternion_from_json(e));
    if (entries.size() != dim) {
        throw ValidationError(context + ": vector has " + std::to_string(entries.size()) +
                              " entries, expected " + std::to_string(dim));
    }
    return QVector(std::move(entries));
}

} // namespace

Frame frame_from_json(const json& j) {
    const std::size_t dim = read_dim(j, "frame");
    if (!j.contains("vectors") || !j["vectors"].is_array() || j["vectors"].empty()) {
        throw ParseError("frame: expected a non-empty \"vectors\" array");
    }
    std::vector<QVector> vectors;
    vectors.reserve(j["vectors"].size());
    for (const auto& v : j["vectors"]) {
        vectors.push_back(vector_from_json(v, dim, "frame"));
    }
    try {
        return Frame(dim, std::move(vectors));
    } catch (const ValidationError&) {
        throw;
    } catch (const Error& e) {
        throw ValidationError(std::string("frame: ") + e.what());
    }
}

QVector signal_from_json(const json& j) {
    const std::size_t dim = read_dim(j, "signal");
    if (!j.contains("entries")) throw ParseError("signal: expected an \"entries\" array");
    return vector_from_json(j["entries"], dim, "signal");
}

Frame load_frame(const std::string& path) { return frame_from_json(parse_file(path)); }

QVector load_signal(const std::string& path) { return signal_from_json(parse_file(path)); }

void save_frame(const std::string& path, std::size_t dim,
                const std::vector<QVector>& vectors) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << frame_to_json(dim, vectors).dump(2) << "\n";
}

void save_signal(const std::string& path, const QVector& signal) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    const json j{{"dim", signal.size()}, {"entries", qvector_to_json(signal)}};
    out << j.dump(2) << "\n";
}

} // namespace qframe
