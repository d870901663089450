#pragma once

#include "gitwin/group.hpp"

#include <vector>

namespace gitwin {

using QMat = std::vector<std::vector<Rat>>; // row-major rational matrix

long long rational_rank(QMat m);

/// Vertex of a decorated quiver: GL_{v_dim} acting on its standard
/// representation, with a framing multiplicity. Per-vertex collections are
/// computed by the window machinery when v_dim == 2; otherwise the caller
/// supplies trusted lists to compose_collections directly.
struct QuiverVertex {
    long long v_dim = 2;
    long long framing = 0;
};

struct DecoratedQuiver {
    std::vector<QuiverVertex> vertices;
    std::vector<std::pair<long long, long long>> arrows; // 0-based (source, target)

    void validate() const; // acyclicity via the topological vertex order
};

/// n_i = w_i + sum over arrows into i of dim V_source.
long long vertex_multiplicity(const DecoratedQuiver& q, long long i);

/// Product collection in reverse-lexicographic order on the index tuples
/// (the last index is the most significant).
struct ProductCollection {
    std::vector<std::vector<long long>> entries;
};

ProductCollection compose_collections(const std::vector<std::vector<IrrepLabel>>& per_vertex);

/// Symbolic GIT parameter (ell_1, ..., ell_N) with lexicographic pairing:
/// the sign against a tuple of cocharacters is the first nonzero entry of
/// (<lambda_1, ell_1>, ..., <lambda_N, ell_N>).
struct LexGitParameter {
    std::vector<QWeight> ells;
    int pairing_sign(const std::vector<Cochar>& lambdas) const {
        if (lambdas.size() != ells.size())
            throw hypothesis_error("quiver", "one cocharacter per vertex required");
        for (size_t i = 0; i < ells.size(); ++i) {
            int s = pairing(lambdas[i], ells[i]).sign();
            if (s != 0) return s;
        }
        return 0;
    }
};

LexGitParameter lex_git_parameter(const DecoratedQuiver& q, const std::vector<QWeight>& ells);

/// Explicit linear-map data: one matrix per arrow (v_target x v_source) and
/// one framing matrix per vertex (v_i x w_i).
struct QuiverPoint {
    std::vector<QMat> arrow_maps;
    std::vector<QMat> framing_maps;
};

struct QuiverStabilityVerdict {
    std::vector<bool> per_vertex;
    bool semistable = false;
};

/// Per-vertex surjectivity of the combined map into V_i (rank = v_i), and
/// the conjunction.
QuiverStabilityVerdict quiver_point_semistable(const DecoratedQuiver& q, const QuiverPoint& p);

} // namespace gitwin
