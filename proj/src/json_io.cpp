#include "qgrass/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qgrass/errors.hpp"

namespace qgrass {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json subspace_to_rows(const Subspace& s) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < s.dim(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < s.ambient().n; ++j) row.push_back(s.entry(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Subspace subspace_from_rows(const Ambient& amb, const json& rows) {
    if (!rows.is_array()) throw IoError("subspace must be an array of rows");
    std::vector<std::vector<int>> mat;
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<long>(row.size()) != amb.n)
            throw IoError("each row must list exactly n entries");
        std::vector<int> r;
        for (const auto& cell : row) {
            if (!cell.is_number_integer()) throw IoError("entries must be integers");
            int v = cell.get<int>();
            if (v < 0 || v >= amb.q) throw IoError("entries must lie in 0..q-1");
            r.push_back(v);
        }
        mat.push_back(std::move(r));
    }
    Subspace s = canonicalize(amb, mat); // throws EntryOutOfRange on bad cells
    if (s.dim() != static_cast<int>(mat.size()))
        throw IoError("rank-deficient basis: " + std::to_string(mat.size()) +
                      " rows span a " + std::to_string(s.dim()) + "-dimensional space");
    return s;
}

ordered_json family_to_json(const Family& fam) {
    ordered_json j;
    j["q"] = fam.ambient().q;
    j["n"] = fam.ambient().n;
    j["k"] = fam.k();
    ordered_json subs = ordered_json::array();
    for (long i = 0; i < fam.size(); ++i) subs.push_back(subspace_to_rows(fam[i]));
    j["subspaces"] = std::move(subs);
    return j;
}

Family family_from_json(const json& j) {
    if (!j.is_object()) throw IoError("family file must hold a JSON object");
    for (const char* key : {"q", "n", "k", "subspaces"})
        if (!j.contains(key)) throw IoError(std::string("family file missing \"") + key + "\"");
    if (!j["q"].is_number_integer() || !j["n"].is_number_integer() ||
        !j["k"].is_number_integer())
        throw IoError("q, n, k must be integers");
    Ambient amb(j["q"].get<int>(), j["n"].get<int>());
    long k = j["k"].get<long>();
    if (k < 0 || k > amb.n) throw IoError("k out of range for the ambient space");
    if (!j["subspaces"].is_array()) throw IoError("\"subspaces\" must be an array");
    std::vector<Subspace> members;
    long idx = 0;
    for (const auto& rows : j["subspaces"]) {
        Subspace s = [&] {
            try {
                return subspace_from_rows(amb, rows);
            } catch (const IoError& e) {
                throw IoError("subspace " + std::to_string(idx) + ": " + e.what());
            }
        }();
        if (s.dim() != k)
            throw IoError("subspace " + std::to_string(idx) + " has dimension " +
                          std::to_string(s.dim()) + ", family claims k=" + std::to_string(k));
        members.push_back(std::move(s));
        ++idx;
    }
    return Family(amb, k, members);
}

void save_family(const std::string& path, const Family& fam) {
    write_text_file(path, family_to_json(fam).dump(2) + "\n");
}

Family load_family(const std::string& path) {
    json j;
    try {
        j = json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        throw IoError(path + ": " + e.what());
    }
    try {
        return family_from_json(j);
    } catch (const IoError& e) {
        throw IoError(path + ": " + e.what());
    }
}

namespace {

long index_of(const Family& fam, const Subspace& s) {
    const auto& v = fam.members();
    auto it = std::lower_bound(v.begin(), v.end(), s, canonical_less);
    if (it == v.end() || !(*it == s)) return -1;
    return static_cast<long>(it - v.begin());
}

} // namespace

ordered_json trace_to_json(const SequenceTrace& tr, const Family& f, const Family& g) {
    ordered_json j;
    j["m"] = tr.m;
    ordered_json fi = ordered_json::array(), gi = ordered_json::array();
    for (const auto& s : tr.f_seq) fi.push_back(index_of(f, s));
    for (const auto& s : tr.g_seq) gi.push_back(index_of(g, s));
    j["f_indices"] = std::move(fi);
    j["g_indices"] = std::move(gi);
    j["survivors"] = tr.survivors;
    if (tr.cover_witness) j["cover_witness_index"] = index_of(f, *tr.cover_witness);
    else j["cover_witness_index"] = nullptr;
    return j;
}

ordered_json point_to_json(const ParamPoint& p) {
    ordered_json j;
    j["n"] = p.n;
    j["k"] = p.k;
    j["t"] = p.t;
    j["s"] = p.s;
    j["q"] = p.q;
    if (p.x) j["x"] = *p.x;
    if (p.l) j["l"] = *p.l;
    return j;
}

ParamPoint point_from_json(const json& j) {
    if (!j.is_object()) throw IoError("parameter point must be a JSON object");
    ParamPoint p;
    auto grab = [&](const char* key, long& slot) {
        if (!j.contains(key)) return;
        if (!j[key].is_number_integer()) throw IoError(std::string(key) + " must be an integer");
        slot = j[key].get<long>();
    };
    grab("n", p.n);
    grab("k", p.k);
    grab("t", p.t);
    grab("s", p.s);
    if (j.contains("q")) {
        if (!j["q"].is_number_integer()) throw IoError("q must be an integer");
        p.q = j["q"].get<int>();
    }
    long tmp = 0;
    if (j.contains("x")) { grab("x", tmp); p.x = tmp; }
    if (j.contains("l")) { grab("l", tmp); p.l = tmp; }
    return p;
}

std::vector<ParamPoint> points_from_json(const json& j) {
    if (!j.is_array()) throw IoError("grid file must hold a JSON array of points");
    std::vector<ParamPoint> out;
    for (const auto& e : j) out.push_back(point_from_json(e));
    return out;
}

std::vector<ParamPoint> load_points(const std::string& path) {
    json j;
    try {
        j = json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        throw IoError(path + ": " + e.what());
    }
    try {
        return points_from_json(j);
    } catch (const IoError& e) {
        throw IoError(path + ": " + e.what());
    }
}

ordered_json verdict_to_json(const LemmaVerdict& v) {
    ordered_json j;
    j["lemma_id"] = v.lemma_id;
    j["n"] = v.point.n;
    j["k"] = v.point.k;
    j["t"] = v.point.t;
    j["s"] = v.point.s;
    j["q"] = v.point.q;
    if (v.point.x) j["x"] = *v.point.x;
    if (v.point.l) j["l"] = *v.point.l;
    j["hypothesis_met"] = v.hypothesis_met;
    j["claim_holds"] = v.claim_holds;
    if (v.hypothesis_met) {
        j["lhs"] = to_decimal(v.lhs);
        j["rhs"] = to_decimal(v.rhs);
    }
    return j;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    if (in.bad()) throw IoError("read failed: " + path);
    return os.str();
}

void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << body;
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

} // namespace qgrass
