#include <codelab/error.hpp>
#include <codelab/pke.hpp>
#include <codelab/reductions.hpp>

#include <map>

namespace codelab {

using nlohmann::json;

bool is_matching(const TdmInstance& inst, const Matching& w)
{
    size_t t = inst.ground.size();
    if (w.size() != t) return false;
    std::vector<std::array<bool, 3>> used(t, {false, false, false});
    std::vector<bool> picked(inst.triples.size(), false);
    for (size_t i : w) {
        if (i >= inst.triples.size() || picked[i]) return false;
        picked[i] = true;
        for (int c = 0; c < 3; ++c) {
            size_t x = inst.triples[i][c];
            if (used[x][c]) return false;
            used[x][c] = true;
        }
    }
    return true;
}

std::optional<Matching> brute_force_3dm(const TdmInstance& inst, uint64_t budget)
{
    size_t t = inst.ground.size(), u = inst.triples.size();
    if (t > u) return std::nullopt;
    if (binomial(u, t) > budget) fail(Errc::too_large, "too many triple subsets");
    std::vector<std::array<bool, 3>> used(t, {false, false, false});
    Matching cur;
    // depth-first over increasing indices, pruning on coordinate clashes
    auto dfs = [&](auto&& self, size_t from) -> bool {
        if (cur.size() == t) return true;
        for (size_t i = from; i + (t - cur.size()) <= u; ++i) {
            auto& tr = inst.triples[i];
            if (used[tr[0]][0] || used[tr[1]][1] || used[tr[2]][2]) continue;
            for (int c = 0; c < 3; ++c) used[tr[c]][c] = true;
            cur.push_back(i);
            if (self(self, i + 1)) return true;
            cur.pop_back();
            for (int c = 0; c < 3; ++c) used[tr[c]][c] = false;
        }
        return false;
    };
    if (dfs(dfs, 0)) return cur;
    return std::nullopt;
}

TdmInstance random_tdm(size_t t, size_t u, bool plant, Rng& rng)
{
    TdmInstance inst;
    for (size_t i = 0; i < t; ++i) inst.ground.push_back(t <= 26 ? std::string(1, char('A' + i)) : "b" + std::to_string(i + 1));
    if (t == 0) return inst;
    if (plant && u >= t) {
        auto p1 = rng.shuffle(t), p2 = rng.shuffle(t);
        for (size_t i = 0; i < t; ++i) inst.triples.push_back({i, p1[i], p2[i]});
    }
    while (inst.triples.size() < u) inst.triples.push_back({rng.below(t), rng.below(t), rng.below(t)});
    auto order = rng.shuffle(u);
    std::vector<std::array<size_t, 3>> mixed(u);
    for (size_t i = 0; i < u; ++i) mixed[order[i]] = inst.triples[i];
    inst.triples = mixed;
    return inst;
}

json to_json(const TdmInstance& inst)
{
    json u = json::array();
    for (auto& tr : inst.triples) u.push_back({inst.ground[tr[0]], inst.ground[tr[1]], inst.ground[tr[2]]});
    return {{"T", inst.ground}, {"U", u}};
}

TdmInstance tdm_from_json(const json& j)
{
    try {
        TdmInstance inst;
        inst.ground = j.at("T").get<std::vector<std::string>>();
        std::map<std::string, size_t> index;
        for (size_t i = 0; i < inst.ground.size(); ++i)
            if (!index.emplace(inst.ground[i], i).second) fail(Errc::parse_error, "repeated element " + inst.ground[i]);
        for (auto& tr : j.at("U")) {
            auto names = tr.get<std::vector<std::string>>();
            if (names.size() != 3) fail(Errc::parse_error, "triples need three entries");
            std::array<size_t, 3> idx;
            for (int c = 0; c < 3; ++c) {
                auto it = index.find(names[c]);
                if (it == index.end()) fail(Errc::parse_error, "unknown element " + names[c]);
                idx[c] = it->second;
            }
            inst.triples.push_back(idx);
        }
        return inst;
    } catch (const json::exception& e) {
        fail(Errc::parse_error, e.what());
    }
}

SdpInstance tdm_to_sdp(const TdmInstance& inst, FieldPtr f)
{
    size_t t = inst.ground.size(), u = inst.triples.size();
    SdpInstance out{Matrix(f, 3 * t, u), Vec(3 * t, 1), t};
    for (size_t i = 0; i < u; ++i)
        for (size_t c = 0; c < 3; ++c) out.h.at(c * t + inst.triples[i][c], i) = 1;
    return out;
}

Vec matching_to_vector(const TdmInstance& inst, const Matching& w)
{
    Vec e(inst.triples.size(), 0);
    for (size_t i : w) e.at(i) = 1;
    return e;
}

Matching sdp_solution_to_matching(const TdmInstance& inst, const Vec& e)
{
    size_t t = inst.ground.size();
    if (e.size() != inst.triples.size()) fail(Errc::not_a_valid_solution, "vector length differs from |U|");
    auto sdp = tdm_to_sdp(inst, Field::make(2));
    for (auto x : e)
        if (x > 1) fail(Errc::not_a_valid_solution, "a solution of the reduced instance is binary");
    if (weight(e) != t || sdp.h.right_mul(e) != sdp.s) fail(Errc::not_a_valid_solution, "e H^T differs from all ones");
    Matching w = support(e);
    if (!is_matching(inst, w)) fail(Errc::not_a_valid_solution, "support is not a matching");
    return w;
}

GwcpInstance tdm_to_gwcp(const TdmInstance& inst, FieldPtr f)
{
    size_t t = inst.ground.size(), u = inst.triples.size();
    size_t rows = 3 * t * u + 3 * t, cols = rows + u;
    Elt minus = f->neg(1);
    auto bar = tdm_to_sdp(inst, f).h; // 3t x u
    // H^T has row blocks (c_bar | c_0 | c_1 ... c_3t) and column blocks (3t | u ... u)
    Matrix ht(f, cols, rows);
    for (size_t i = 0; i < u; ++i) {
        for (size_t j = 0; j < 3 * t; ++j) ht.at(i, j) = bar(j, i);
        for (size_t b = 0; b < 3 * t; ++b) ht.at(i, 3 * t + b * u + i) = 1;
    }
    for (size_t j = 0; j < 3 * t; ++j) ht.at(u + j, j) = minus;
    for (size_t b = 0; b < 3 * t; ++b)
        for (size_t i = 0; i < u; ++i) ht.at(u + 3 * t + b * u + i, 3 * t + b * u + i) = minus;
    return {ht.transpose(), 3 * t * t + 4 * t};
}

std::optional<Vec> gwcp_bruteforce(const GwcpInstance& g, uint64_t budget)
{
    if (g.h.cols() == g.h.rows()) return g.w ? std::nullopt : std::optional<Vec>(Vec(g.h.cols(), 0));
    auto code = LinearCode::from_parity_check(g.h);
    std::optional<Vec> found;
    for_each_codeword(code, budget, [&](const Vec&, const Vec& cw) {
        if (!found && weight(cw) == g.w) found = cw;
    });
    return found;
}

Matching gwcp_solution_to_matching(const TdmInstance& inst, const GwcpInstance& g, const Vec& c)
{
    size_t t = inst.ground.size(), u = inst.triples.size();
    if (c.size() != g.h.cols()) fail(Errc::not_a_valid_solution, "codeword has wrong length");
    if (weight(g.h.right_mul(c)) != 0) fail(Errc::not_a_valid_solution, "not a codeword");
    if (weight(c) != g.w) fail(Errc::not_a_valid_solution, "codeword weight differs from 3t^2 + 4t");
    Vec head(c.begin(), c.begin() + u);
    Matching w = support(head);
    if (w.size() != t || !is_matching(inst, w)) fail(Errc::not_a_valid_solution, "head is not a matching");
    return w;
}

}
