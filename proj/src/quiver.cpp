#include "gitwin/quiver.hpp"

#include <algorithm>

namespace gitwin {

long long rational_rank(QMat m) {
    long long rank = 0;
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t piv = row;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[row], m[piv]);
        for (size_t i = row + 1; i < rows; ++i) {
            if (m[i][col].is_zero()) continue;
            Rat c = m[i][col] / m[row][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= c * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

void DecoratedQuiver::validate() const {
    for (const auto& [s, t] : arrows) {
        if (s < 0 || t < 0 || s >= (long long)vertices.size() || t >= (long long)vertices.size())
            throw hypothesis_error("quiver", "arrow endpoint out of range");
        if (s >= t)
            throw hypothesis_error("quiver",
                                   "arrows must point forward in the topological vertex order");
    }
    for (const auto& v : vertices)
        if (v.v_dim <= 0 || v.framing < 0)
            throw hypothesis_error("quiver", "vertex dimensions must be positive, framings >= 0");
}

long long vertex_multiplicity(const DecoratedQuiver& q, long long i) {
    long long n = q.vertices[i].framing;
    for (const auto& [s, t] : q.arrows)
        if (t == i) n += q.vertices[s].v_dim;
    return n;
}

ProductCollection compose_collections(const std::vector<std::vector<IrrepLabel>>& per_vertex) {
    ProductCollection out;
    std::vector<long long> tuple(per_vertex.size(), 0);
    for (const auto& c : per_vertex)
        if (c.empty()) return out;
    for (;;) {
        out.entries.push_back(tuple);
        // Reverse-lex increment: the first index varies fastest.
        size_t k = 0;
        while (k < tuple.size()) {
            if (++tuple[k] < (long long)per_vertex[k].size()) break;
            tuple[k] = 0;
            ++k;
        }
        if (k == tuple.size()) break;
    }
    return out;
}

LexGitParameter lex_git_parameter(const DecoratedQuiver& q, const std::vector<QWeight>& ells) {
    if (ells.size() != q.vertices.size())
        throw hypothesis_error("quiver", "one GIT parameter per vertex required");
    return LexGitParameter{ells};
}

QuiverStabilityVerdict quiver_point_semistable(const DecoratedQuiver& q, const QuiverPoint& p) {
    q.validate();
    if (p.arrow_maps.size() != q.arrows.size() || p.framing_maps.size() != q.vertices.size())
        throw hypothesis_error("quiver", "point data shape does not match the quiver");
    QuiverStabilityVerdict verdict;
    verdict.semistable = true;
    for (size_t i = 0; i < q.vertices.size(); ++i) {
        long long vi = q.vertices[i].v_dim;
        // Columns: framing block, then one block per incoming arrow.
        QMat combined(vi);
        const QMat& fm = p.framing_maps[i];
        if ((long long)fm.size() != vi && q.vertices[i].framing > 0)
            throw hypothesis_error("quiver", "framing matrix has wrong row count");
        for (long long r = 0; r < vi; ++r) {
            if (q.vertices[i].framing > 0) {
                if ((long long)fm[r].size() != q.vertices[i].framing)
                    throw hypothesis_error("quiver", "framing matrix has wrong column count");
                combined[r] = fm[r];
            }
        }
        for (size_t a = 0; a < q.arrows.size(); ++a) {
            if (q.arrows[a].second != (long long)i) continue;
            const QMat& am = p.arrow_maps[a];
            long long vs = q.vertices[q.arrows[a].first].v_dim;
            if ((long long)am.size() != vi)
                throw hypothesis_error("quiver", "arrow matrix has wrong row count");
            for (long long r = 0; r < vi; ++r) {
                if ((long long)am[r].size() != vs)
                    throw hypothesis_error("quiver", "arrow matrix has wrong column count");
                combined[r].insert(combined[r].end(), am[r].begin(), am[r].end());
            }
        }
        bool ok = !combined[0].empty() && rational_rank(combined) == vi;
        verdict.per_vertex.push_back(ok);
        verdict.semistable = verdict.semistable && ok;
    }
    return verdict;
}

} // namespace gitwin
