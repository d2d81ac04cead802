#include "cobga/io.hpp"

#include <fstream>
#include <sstream>

#include "cobga/rng.hpp"

namespace cobga {

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write file: " + path);
    out << content;
    if (!out) throw DataError("write failed: " + path);
}

std::string content_digest(const std::string& bytes) {
    u64 h = fnv1a64(bytes);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json matrix_to_json(const BitMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.dim(); ++r) rows.push_back(m.row_string(r));
    return json{{"n", m.dim()}, {"rows", rows}};
}

BitMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
        throw DataError("matrix json: expected object with \"n\" and \"rows\"");
    int n = j.at("n").get<int>();
    const json& rows = j.at("rows");
    if (n < 0 || !rows.is_array() || static_cast<int>(rows.size()) != n)
        throw DataError("matrix json: row count does not match n");
    BitMatrix m(n);
    for (int r = 0; r < n; ++r) {
        const auto& s = rows[static_cast<size_t>(r)].get_ref<const std::string&>();
        if (static_cast<int>(s.size()) != n) throw DataError("matrix json: bad row length");
        for (int c = 0; c < n; ++c) {
            if (s[static_cast<size_t>(c)] == '1')
                m.set(r, c, true);
            else if (s[static_cast<size_t>(c)] != '0')
                throw DataError("matrix json: rows must be '0'/'1' strings");
        }
    }
    return m;
}

std::string op_token(const ElementaryOp& op) {
    std::ostringstream ss;
    ss << (op.kind == OpKind::Swap ? 'S' : 'A') << ':' << (op.i + 1) << ':' << (op.j + 1);
    return ss.str();
}

ElementaryOp op_from_token(const std::string& token, int n) {
    char kind_ch = 0;
    int i1 = 0, j1 = 0;
    char sep1 = 0, sep2 = 0;
    std::istringstream ss(token);
    if (!(ss >> kind_ch >> sep1 >> i1 >> sep2 >> j1) || sep1 != ':' || sep2 != ':' || !ss.eof())
        throw DataError("word token malformed: " + token);
    OpKind kind;
    if (kind_ch == 'S')
        kind = OpKind::Swap;
    else if (kind_ch == 'A')
        kind = OpKind::Add;
    else
        throw DataError("word token must start with S or A: " + token);
    if (i1 < 1 || j1 < 1 || i1 > n || j1 > n || i1 == j1)
        throw DataError("word token indices out of range: " + token);
    return ElementaryOp{kind, i1 - 1, j1 - 1};
}

std::string word_tokens(const BasisWord& w) {
    std::string out;
    for (size_t k = 0; k < w.ops.size(); ++k) {
        if (k > 0) out += ' ';
        out += op_token(w.ops[k]);
    }
    return out;
}

BasisWord word_from_tokens(int n, const std::string& tokens) {
    BasisWord w{n, {}};
    std::istringstream ss(tokens);
    std::string token;
    while (ss >> token) w.ops.push_back(op_from_token(token, n));
    return w;
}

std::string word_to_text(const BasisWord& w) {
    std::string out = "n=" + std::to_string(w.n) + "\n";
    std::string tokens = word_tokens(w);
    if (!tokens.empty()) out += tokens + "\n";
    return out;
}

BasisWord word_from_text(const std::string& text) {
    std::istringstream ss(text);
    std::string header;
    if (!std::getline(ss, header)) throw DataError("word file: missing header line");
    if (header.rfind("n=", 0) != 0) throw DataError("word file: header must be n=<dim>");
    int n = 0;
    try {
        n = std::stoi(header.substr(2));
    } catch (const std::exception&) {
        throw DataError("word file: bad dimension in header");
    }
    if (n < 1) throw DataError("word file: dimension must be >= 1");
    std::string rest((std::istreambuf_iterator<char>(ss)), std::istreambuf_iterator<char>());
    return word_from_tokens(n, rest);
}

int InstanceFile::length() const {
    return std::visit([](const auto& inst) { return inst.n; }, payload);
}

std::string InstanceFile::kind() const {
    return std::holds_alternative<VariantOnemaxInstance>(payload) ? "variant-onemax" : "nk";
}

std::unique_ptr<FitnessProblem> InstanceFile::make_problem() const {
    if (const auto* vo = std::get_if<VariantOnemaxInstance>(&payload))
        return std::make_unique<VariantOnemaxProblem>(*vo);
    return std::make_unique<NkProblem>(std::get<NkInstance>(payload));
}

json InstanceFile::to_json() const {
    if (const auto* vo = std::get_if<VariantOnemaxInstance>(&payload)) {
        json rows = json::array();
        for (int r = 0; r < vo->t.dim(); ++r) rows.push_back(vo->t.row_string(r));
        return json{{"kind", "variant-onemax"},
                    {"n", vo->n},
                    {"word", word_tokens(vo->origin_word)},
                    {"rows", rows}};
    }
    const auto& nk = std::get<NkInstance>(payload);
    return json{{"kind", "nk"},
                {"N", nk.n},
                {"K", nk.k},
                {"neighbors", nk.neighbors},
                {"tables", nk.tables}};
}

InstanceFile InstanceFile::from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw DataError("instance json: missing \"kind\"");
    std::string kind = j.at("kind").get<std::string>();
    try {
        if (kind == "variant-onemax") {
            VariantOnemaxInstance inst;
            inst.n = j.at("n").get<int>();
            inst.origin_word = word_from_tokens(inst.n, j.at("word").get<std::string>());
            inst.t = matrix_from_json(json{{"n", inst.n}, {"rows", j.at("rows")}});
            if (word_to_matrix(inst.origin_word) != inst.t)
                throw DataError("instance json: word and rows disagree");
            return InstanceFile{std::move(inst)};
        }
        if (kind == "nk") {
            NkInstance inst;
            inst.n = j.at("N").get<int>();
            inst.k = j.at("K").get<int>();
            inst.neighbors = j.at("neighbors").get<std::vector<std::vector<int>>>();
            inst.tables = j.at("tables").get<std::vector<std::vector<double>>>();
            if (static_cast<int>(inst.neighbors.size()) != inst.n ||
                static_cast<int>(inst.tables.size()) != inst.n)
                throw DataError("instance json: per-gene arrays must have N entries");
            size_t table_size = static_cast<size_t>(1) << (inst.k + 1);
            for (int g = 0; g < inst.n; ++g) {
                if (static_cast<int>(inst.neighbors[static_cast<size_t>(g)].size()) != inst.k)
                    throw DataError("instance json: neighbor set size must equal K");
                if (inst.tables[static_cast<size_t>(g)].size() != table_size)
                    throw DataError("instance json: table must have 2^(K+1) entries");
            }
            return InstanceFile{std::move(inst)};
        }
    } catch (const json::exception& e) {
        throw DataError(std::string("instance json: ") + e.what());
    }
    throw DataError("instance json: unknown kind " + kind);
}

InstanceFile load_instance(const std::string& path) {
    json j;
    try {
        j = json::parse(read_text_file(path));
    } catch (const json::exception& e) {
        throw DataError("instance file " + path + ": " + e.what());
    }
    return InstanceFile::from_json(j);
}

json run_record_to_json(const RunRecord& rec, bool include_trace) {
    json j{{"best_fitness", rec.best_fitness},
           {"best_genotype", rec.best_genotype.to_string()},
           {"generations_executed", rec.generations_executed},
           {"seed", rec.seed}};
    if (include_trace) j["best_per_generation"] = rec.best_per_generation;
    return j;
}

}  // namespace cobga
