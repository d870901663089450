#pragma once

#include "gitwin/group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gitwin {

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class EllMode { Anticanonical, Explicit, AnticanonicalEps };

/// Flat keyed job description: one "key = value" per line, lists in
/// brackets, rationals as "p/q", '#' comments.
struct JobConfig {
    std::optional<GroupKind> group;
    std::vector<Weight> weights;
    std::vector<Gl2Summand> gl2_summands;
    std::optional<Cochar> lambda0;
    EllMode ell_mode = EllMode::Anticanonical;
    QWeight ell_explicit;
    QWeight ell_direction;
    std::optional<QWeight> theta;
    long long degree_budget = 16;
    long long degree_cap = 32;
    Rat seed_box = Rat(2);
    long long t_grid = 12;
    std::vector<std::pair<long long, long long>> quiver_vertices; // (v_dim, framing)
    std::vector<std::pair<long long, long long>> quiver_arrows;   // 1-based (source, target)

    static JobConfig parse(const std::string& text);
    static JobConfig parse_file(const std::string& path);

    RepSpec build_rep() const;
};

} // namespace gitwin
