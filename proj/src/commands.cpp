#include "gitwin/commands.hpp"

#include "gitwin/collection.hpp"
#include "gitwin/quiver.hpp"
#include "gitwin/reduction.hpp"
#include "gitwin/stability.hpp"
#include "gitwin/toric.hpp"

#include <sstream>

namespace gitwin {

namespace {

struct Resolved {
    RepSpec rep;
    Cochar lambda0;
    Polarization ell;
    QWeight region_ell; // rational character the window geometry is built on
    QWeight theta;
    bool theta_auto = false;
};

std::string weight_list_str(const std::vector<Weight>& ws) {
    std::string s = "[";
    for (size_t i = 0; i < ws.size(); ++i) {
        if (i) s += ",";
        s += ws[i].str();
    }
    return s + "]";
}

Cochar resolve_lambda0(const RepSpec& rep, const JobConfig& cfg) {
    if (cfg.lambda0) {
        const Cochar& l = *cfg.lambda0;
        if (rep.group.weyl_nontrivial() && l.a != l.b)
            throw hypothesis_error("H:main_setup", "lambda0 override must be central (a = b)");
        for (const auto& b : rep.weights)
            if (pairing(l, b).sign() >= 0)
                throw hypothesis_error("H:main_setup",
                                       "lambda0 override does not pair strictly negatively "
                                       "with weight " +
                                           b.str());
        return l;
    }
    auto found = check_main_setup(rep);
    if (!found)
        throw hypothesis_error("H:main_setup",
                               "no central cocharacter pairs strictly negatively with every "
                               "weight");
    return *found;
}

Resolved resolve(const JobConfig& cfg) {
    Resolved r{cfg.build_rep(), Cochar{}, Polarization{}, QWeight{}, QWeight{}, false};
    r.lambda0 = resolve_lambda0(r.rep, cfg);
    QWeight omega(anticanonical(r.rep));
    switch (cfg.ell_mode) {
        case EllMode::Anticanonical:
            r.ell = Polarization::exact(omega);
            r.region_ell = omega;
            break;
        case EllMode::Explicit:
            r.ell = Polarization::exact(cfg.ell_explicit);
            r.region_ell = cfg.ell_explicit;
            break;
        case EllMode::AnticanonicalEps:
            r.ell = Polarization::perturbed(omega, cfg.ell_direction);
            r.region_ell = omega; // the window geometry is the omega* one
            break;
    }
    if (cfg.theta) {
        r.theta = *cfg.theta;
    } else {
        r.theta_auto = true;
        if (cfg.ell_mode == EllMode::AnticanonicalEps)
            r.theta = find_nef_theta(r.rep, cfg.ell_direction, r.lambda0);
        else
            r.theta = find_generic_theta(r.rep, r.region_ell, r.lambda0);
    }
    return r;
}

struct ReportDoc {
    std::ostringstream out;

    ReportDoc(const std::string& command) {
        out << "gitwin report v1\ncommand = " << command << "\n";
    }
    void kv(const std::string& key, const std::string& value) {
        out << key << " = " << value << "\n";
    }
    void line(const std::string& s) { out << s << "\n"; }
    std::string str() const { return out.str(); }
};

void emit_common(ReportDoc& doc, const Resolved& r) {
    doc.kv("group", r.rep.group.name());
    doc.kv("weights", weight_list_str(r.rep.weights));
    doc.kv("omega_star", anticanonical(r.rep).str());
    doc.kv("lambda0", r.lambda0.str());
    doc.kv("ell", r.ell.str());
    doc.kv("theta", r.theta.str() + (r.theta_auto ? " (auto)" : ""));
}

void emit_destab_table(ReportDoc& doc, const WindowRegion& region) {
    doc.kv("lambda_prime", region.lambda_prime.str());
    doc.kv("zeta(lambda0)", region.d0.zeta.str());
    doc.kv("eta(lambda0)", region.d0.eta.str());
    doc.kv("zeta(+lambda')", region.dplus.zeta.str());
    doc.kv("eta(+lambda')", region.dplus.eta.str());
    doc.kv("zeta(-lambda')", region.dminus.zeta.str());
    doc.kv("eta(-lambda')", region.dminus.eta.str());
}

CommandResult refuse(ReportDoc& doc, const hypothesis_error& e) {
    doc.kv("refusal", std::string(e.tag) + ": " + e.what());
    return CommandResult{2, doc.str(), {}};
}

CommandResult usage_failure(const std::string& command, const std::exception& e) {
    ReportDoc doc(command);
    doc.kv("error", e.what());
    return CommandResult{1, doc.str(), {}};
}

} // namespace

CommandResult cmd_analyze(const JobConfig& cfg) {
    ReportDoc doc("analyze");
    try {
        Resolved r = resolve(cfg);
        emit_common(doc, r);
        WindowRegion region = make_region(r.rep, r.theta, r.region_ell, r.lambda0);
        emit_destab_table(doc, region);

        StabilityVerdict sv = finite_stabilizer_test(r.rep, r.ell, r.lambda0);
        doc.kv("finite_stabilizers", sv.finite_stabilizers ? "true" : "false");
        doc.kv("weights_span", sv.spans ? "true" : "false");
        if (sv.offending_weight) doc.kv("offending_weight", sv.offending_weight->str());

        GenericityReport g = check_generic(region);
        doc.kv("theta_generic", g.is_generic ? "true" : "false");
        if (!g.is_generic) {
            doc.kv("genericity_witness", g.witness->str());
            doc.kv("genericity_hyperplane", g.witness_hyperplane);
        }

        if (r.rep.group.kind == GroupKind::GL2 && !r.rep.gl2_summands.empty()) {
            Gl2FanoReport fano = gl2_fano_criterion(r.rep);
            doc.kv("gl2_criterion", fano.ok ? "true" : "false");
            for (size_t i = 0; i < fano.per_summand.size(); ++i) {
                const auto& s = fano.per_summand[i];
                doc.kv("gl2_summand_" + std::to_string(i),
                       "(n=" + std::to_string(s.summand.n) + ",m=" + std::to_string(s.summand.m) +
                           ") central=" + (s.central_ok ? "ok" : "violated (condition 1)") +
                           " parity=" + (s.odd_ok ? "ok" : "violated (condition 2)"));
            }
            if (!fano.ok) {
                doc.kv("refusal",
                       "gl2 criterion: a summand violates the finite-stabilizer conditions");
                return {2, doc.str(), {}};
            }
        }

        auto cone = destabilizing_cone_reps(r.rep, r.ell);
        std::string cs = "[";
        for (size_t i = 0; i < cone.size(); ++i) {
            if (i) cs += ",";
            cs += cone[i].str();
        }
        doc.kv("destabilizing_cone", cs + "]");
        return {0, doc.str(), {}};
    } catch (const hypothesis_error& e) {
        return refuse(doc, e);
    } catch (const config_error& e) {
        return usage_failure("analyze", e);
    }
}

CommandResult cmd_collection(const JobConfig& cfg, bool emit_csv) {
    ReportDoc doc("collection");
    try {
        Resolved r = resolve(cfg);
        emit_common(doc, r);
        WindowRegion region = make_region(r.rep, r.theta, r.region_ell, r.lambda0);
        emit_destab_table(doc, region);

        std::vector<CollectionEntry> entries;
        if (r.ell.is_perturbed()) {
            long long idx = 0;
            for (const auto& lab : enumerate_nef_window(r.rep, region))
                entries.push_back({lab, wt_lambda0(r.lambda0, lab), idx++});
            doc.kv("window", "nef cylinder (boundary lattice-free)");
        } else {
            GenericityReport g = check_generic(region);
            doc.kv("theta_generic", g.is_generic ? "true" : "false");
            if (!g.is_generic)
                throw hypothesis_error("theta generic",
                                       "theta is not lambda0-generic; witness " +
                                           g.witness->str() + " on " + g.witness_hyperplane);
            entries = build_collection(r.rep, region);
            doc.kv("window", "barrel");
        }
        doc.kv("count", std::to_string(entries.size()));
        for (const auto& e : entries)
            doc.line("entry " + std::to_string(e.order_index) + ": " + e.label.str() +
                     " wt_lambda0=" + e.lambda0_weight.str());

        CommandResult res{0, "", {}};
        if (emit_csv)
            res.artifacts["window_points.csv"] =
                classification_csv(classify_lattice(r.rep, region));
        res.report = doc.str();
        return res;
    } catch (const hypothesis_error& e) {
        return refuse(doc, e);
    } catch (const config_error& e) {
        return usage_failure("collection", e);
    }
}

CommandResult cmd_verify(const JobConfig& cfg) {
    ReportDoc doc("verify");
    try {
        Resolved r = resolve(cfg);
        emit_common(doc, r);
        WindowRegion region = make_region(r.rep, r.theta, r.region_ell, r.lambda0);
        if (r.ell.is_perturbed())
            throw hypothesis_error("polarization",
                                   "verify runs on exact polarizations; use the Fano window");
        GenericityReport g = check_generic(region);
        if (!g.is_generic)
            throw hypothesis_error("theta generic", "theta is not lambda0-generic");
        auto collection = build_collection(r.rep, region);
        doc.kv("count", std::to_string(collection.size()));
        auto report =
            verify_strong_exceptional(r.rep, collection, region, cfg.degree_budget, cfg.degree_cap);
        doc.kv("pairs_checked", std::to_string(report.pairs_checked));
        doc.kv("vanishing_failures", std::to_string(report.failures.size()));
        doc.kv("diagonal_failures", std::to_string(report.diag_failures));
        doc.kv("backward_failures", std::to_string(report.backward_failures));
        doc.kv("partial", report.partial ? "true" : "false");
        for (const auto& f : report.failures)
            doc.line("failing_pair " + std::to_string(f.from) + " -> " + std::to_string(f.to) +
                     " at weight " + f.first_failure->chi.str());
        doc.kv("strong_exceptional", report.ok ? "true" : "false");
        return {report.ok ? 0 : 2, doc.str(), {}};
    } catch (const hypothesis_error& e) {
        return refuse(doc, e);
    } catch (const config_error& e) {
        return usage_failure("verify", e);
    }
}

CommandResult cmd_reduce(const JobConfig& cfg) {
    ReportDoc doc("reduce");
    try {
        Resolved r = resolve(cfg);
        emit_common(doc, r);
        WindowRegion region = make_region(r.rep, r.theta, r.region_ell, r.lambda0);
        emit_destab_table(doc, region);
        auto seeds = default_seeds(r.rep, region, cfg.seed_box);
        doc.kv("seed_box", cfg.seed_box.str());
        doc.kv("seed_count", std::to_string(seeds.size()));

        ReductionCertificate cert;
        if (r.ell.is_perturbed()) {
            doc.kv("engine", "nef-fano");
            cert = reduce_nef_fano(r.rep, region, *r.ell.direction, seeds);
        } else {
            QWeight omega(anticanonical(r.rep));
            bool anticanonical_ray = proportional(r.region_ell, omega) &&
                                     pairing(r.lambda0, r.region_ell).sign() ==
                                         pairing(r.lambda0, omega).sign();
            if (!anticanonical_ray)
                throw hypothesis_error("polarization",
                                       "the reduction engines run at the anticanonical "
                                       "polarization; got ell = " +
                                           r.region_ell.str());
            StabilityVerdict sv = finite_stabilizer_test(r.rep, r.ell, r.lambda0);
            if (!sv.finite_stabilizers)
                throw hypothesis_error(sv.spans ? "proportional weight" : "weights span",
                                       "the Fano engine needs finite stabilizers at ell" +
                                           (sv.offending_weight
                                                ? "; offending weight " +
                                                      sv.offending_weight->str()
                                                : std::string()));
            doc.kv("engine", "fano");
            cert = reduce_fano(r.rep, region, seeds);
        }
        doc.kv("nodes", std::to_string(cert.nodes.size()));
        doc.kv("leaves", std::to_string(cert.leaf_count()));
        doc.kv("proof_mismatches", "0");
        CommandResult res{0, doc.str(), {}};
        res.artifacts["certificate.txt"] = cert.serialize();
        return res;
    } catch (const proof_mismatch_error& e) {
        doc.kv("proof_mismatch", e.what());
        return {2, doc.str(), {}};
    } catch (const hypothesis_error& e) {
        return refuse(doc, e);
    } catch (const config_error& e) {
        return usage_failure("reduce", e);
    }
}

CommandResult cmd_compose(const JobConfig& cfg) {
    ReportDoc doc("compose");
    try {
        if (cfg.quiver_vertices.empty())
            throw config_error("compose needs quiver_vertices");
        DecoratedQuiver q;
        for (const auto& [v, w] : cfg.quiver_vertices) q.vertices.push_back({v, w});
        for (const auto& [s, t] : cfg.quiver_arrows)
            q.arrows.emplace_back(s - 1, t - 1); // config is 1-based
        q.validate();

        std::vector<std::vector<IrrepLabel>> per_vertex;
        std::vector<QWeight> ells;
        for (size_t i = 0; i < q.vertices.size(); ++i) {
            if (q.vertices[i].v_dim != 2)
                throw hypothesis_error("quiver vertex",
                                       "automatic vertex collections need GL2 standard vertices");
            long long n_i = vertex_multiplicity(q, (long long)i);
            doc.kv("vertex_" + std::to_string(i + 1) + "_n", std::to_string(n_i));
            if (n_i == 0)
                throw hypothesis_error("H:main_setup",
                                       "vertex " + std::to_string(i + 1) +
                                           " has an empty representation");
            RepSpec vrep = RepSpec::gl2_standard_power(n_i);
            Cochar l0 = *check_main_setup(vrep);
            QWeight omega(anticanonical(vrep));
            ells.push_back(omega);
            StabilityVerdict sv =
                finite_stabilizer_test(vrep, Polarization::exact(omega), l0);
            doc.kv("vertex_" + std::to_string(i + 1) + "_finite_stabilizers",
                   sv.finite_stabilizers ? "true" : "false");
            if (!sv.finite_stabilizers)
                throw hypothesis_error("proportional weight",
                                       "vertex " + std::to_string(i + 1) +
                                           " has infinite stabilizers at its anticanonical");
            QWeight theta = find_generic_theta(vrep, omega, l0);
            WindowRegion region = make_region(vrep, theta, omega, l0);
            per_vertex.push_back(enumerate_window_irreps(vrep, region));
            doc.kv("vertex_" + std::to_string(i + 1) + "_collection_size",
                   std::to_string(per_vertex.back().size()));
        }
        lex_git_parameter(q, ells); // shape validation of the symbolic parameter
        ProductCollection prod = compose_collections(per_vertex);
        doc.kv("product_size", std::to_string(prod.entries.size()));
        for (size_t k = 0; k < prod.entries.size(); ++k) {
            std::string s = "entry " + std::to_string(k) + ":";
            for (size_t i = 0; i < prod.entries[k].size(); ++i)
                s += " " + per_vertex[i][prod.entries[k][i]].str();
            doc.line(s);
        }
        return {0, doc.str(), {}};
    } catch (const hypothesis_error& e) {
        return refuse(doc, e);
    } catch (const config_error& e) {
        return usage_failure("compose", e);
    }
}

CommandResult cmd_toric(const JobConfig& cfg) {
    ReportDoc doc("toric");
    try {
        Resolved r = resolve(cfg);
        emit_common(doc, r);
        if (r.rep.group.kind != GroupKind::Torus2)
            throw hypothesis_error("group", "the toric comparison is the rank-2 torus case");
        WindowRegion region = make_region(r.rep, r.theta, r.region_ell, r.lambda0);
        emit_destab_table(doc, region);

        GaleDual gale = gale_dual(r.rep);
        doc.kv("a_free_rank", std::to_string(gale.a_free_rank));
        std::string tor = "[";
        for (size_t i = 0; i < gale.torsion.size(); ++i) {
            if (i) tor += ",";
            tor += std::to_string(gale.torsion[i]);
        }
        doc.kv("torsion", tor + "]");
        for (size_t i = 0; i < gale.ray_generators.size(); ++i) {
            std::string v = "[";
            for (size_t k = 0; k < gale.ray_generators[i].size(); ++k) {
                if (k) v += ",";
                v += std::to_string(gale.ray_generators[i][k]);
            }
            doc.kv("v_" + std::to_string(i + 1), v + "]");
        }

        BorisovHuaData bh = borisov_hua_data(r.rep, r.lambda0, region.lambda_prime);
        Rat suma, sumr, sump;
        for (const auto& x : bh.a) suma += x;
        for (const auto& x : bh.r) sumr += x;
        for (long long i : bh.i_plus) sump += bh.a[i];
        bool inv_a = suma.is_zero();
        bool inv_r = sumr == Rat(1);
        bool inv_eta = sump == bh.eta_prime;
        doc.kv("sum_a", suma.str());
        doc.kv("sum_r", sumr.str());
        doc.kv("sum_a_over_Iplus", sump.str());
        doc.kv("eta(lambda')", bh.eta_prime.str());

        // sum a_i v_i = 0 and sum <lambda0,beta_i> v_i = 0 in A, integrally.
        Cochar l0p = primitive(r.lambda0);
        std::vector<long long> acc_a(gale.ray_generators.empty()
                                         ? 0
                                         : gale.ray_generators[0].size(),
                                     0);
        std::vector<long long> acc_r = acc_a;
        for (size_t i = 0; i < gale.ray_generators.size(); ++i) {
            long long ai = bh.a[i].num(); // integral: lambda' is primitive integral
            long long ri = pairing(l0p, r.rep.weights[i]).num();
            for (size_t k = 0; k < acc_a.size(); ++k) {
                acc_a[k] += ai * gale.ray_generators[i][k];
                acc_r[k] += ri * gale.ray_generators[i][k];
            }
        }
        bool inv_av = gale.is_zero_class(acc_a);
        bool inv_rv = gale.is_zero_class(acc_r);
        doc.kv("sum_a_v_zero", inv_av ? "true" : "false");
        doc.kv("sum_r_v_zero", inv_rv ? "true" : "false");

        // Region comparison on the lattice scan box.
        long long alo, ahi, blo, bhi;
        scan_box(region, Rat(1), alo, ahi, blo, bhi);
        bool agree = true;
        long long points = 0;
        for (long long a = alo; a <= ahi && agree; ++a)
            for (long long b = blo; b <= bhi && agree; ++b) {
                QWeight chi{Rat(a), Rat(b)};
                ++points;
                if (in_cylinder(region, chi) !=
                    borisov_hua_member(r.rep, bh, r.theta, chi))
                    agree = false;
            }
        doc.kv("scan_points", std::to_string(points));
        doc.kv("region_equality", agree ? "true" : "false");

        bool ok = inv_a && inv_r && inv_eta && inv_av && inv_rv && agree;
        doc.kv("invariants_ok", ok ? "true" : "false");
        return {ok ? 0 : 2, doc.str(), {}};
    } catch (const hypothesis_error& e) {
        return refuse(doc, e);
    } catch (const config_error& e) {
        return usage_failure("toric", e);
    }
}

CommandResult run_command(const std::string& name, const JobConfig& cfg, bool emit_csv) {
    if (name == "analyze") return cmd_analyze(cfg);
    if (name == "collection") return cmd_collection(cfg, emit_csv);
    if (name == "verify") return cmd_verify(cfg);
    if (name == "reduce") return cmd_reduce(cfg);
    if (name == "compose") return cmd_compose(cfg);
    if (name == "toric") return cmd_toric(cfg);
    CommandResult res;
    res.exit_code = 1;
    res.report = "gitwin report v1\ncommand = " + name + "\nerror = unknown command\n";
    return res;
}

} // namespace gitwin
