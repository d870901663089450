#include "gitwin/toric.hpp"

namespace gitwin {

bool GaleDual::is_zero_class(const std::vector<long long>& coords) const {
    for (size_t k = 0; k < torsion.size(); ++k)
        if (coords[k] % torsion[k] != 0) return false;
    for (size_t k = torsion.size(); k < coords.size(); ++k)
        if (coords[k] != 0) return false;
    return true;
}

GaleDual gale_dual(const RepSpec& rep) {
    if (rep.group.kind != GroupKind::Torus2)
        throw hypothesis_error("group", "Gale duality is the rank-2 torus case");
    const size_t n = rep.weights.size();
    if (!rep.weights_span())
        throw hypothesis_error("weights span", "weights of X do not span M_R");

    // phi*: N -> Z^n, rows (beta_i,a, beta_i,b).
    IMat phistar(n, std::vector<long long>(2));
    for (size_t i = 0; i < n; ++i) {
        phistar[i][0] = rep.weights[i].a;
        phistar[i][1] = rep.weights[i].b;
    }
    SmithForm f = smith_normal_form(phistar);
    long long d1 = f.d[0][0], d2 = f.d[1][1];
    if (d1 == 0 || d2 == 0)
        throw hypothesis_error("weights span", "weight matrix has rank below 2");

    GaleDual g;
    g.phi = rep.weights;
    g.a_free_rank = (long long)n - 2;
    std::vector<size_t> torsion_rows;
    for (size_t k = 0; k < 2; ++k)
        if (f.d[k][k] > 1) {
            g.torsion.push_back(f.d[k][k]);
            torsion_rows.push_back(k);
        }
    // v_i = class of e_i: coordinates are rows of u*e_i, torsion rows reduced
    // and the trailing n-2 rows free.
    for (size_t i = 0; i < n; ++i) {
        std::vector<long long> coords;
        for (size_t k : torsion_rows) {
            long long d = f.d[k][k];
            long long c = f.u[k][i] % d;
            if (c < 0) c += d;
            coords.push_back(c);
        }
        for (size_t k = 2; k < n; ++k) coords.push_back(f.u[k][i]);
        g.ray_generators.push_back(coords);
    }

    // Kernel of phi: Z^n -> M, via Smith of the 2 x n weight matrix.
    IMat phi(2, std::vector<long long>(n));
    for (size_t i = 0; i < n; ++i) {
        phi[0][i] = rep.weights[i].a;
        phi[1][i] = rep.weights[i].b;
    }
    SmithForm fk = smith_normal_form(phi);
    for (size_t j = 2; j < n; ++j) {
        std::vector<long long> col(n);
        for (size_t i = 0; i < n; ++i) col[i] = fk.v[i][j];
        g.kernel_basis.push_back(col);
    }
    return g;
}

BorisovHuaData borisov_hua_data(const RepSpec& rep, const Cochar& lambda0,
                                const Cochar& lambda_prime) {
    BorisovHuaData data;
    DestabData d0 = destab_data(rep, lambda0);
    DestabData dp = destab_data(rep, lambda_prime);
    data.eta0 = d0.eta;
    data.eta_prime = dp.eta;
    if (data.eta0.sign() <= 0)
        throw hypothesis_error("H:main_setup", "eta0 must be positive");
    for (size_t i = 0; i < rep.weights.size(); ++i) {
        Rat ai = -pairing(lambda_prime, rep.weights[i]);
        if (ai.is_zero())
            throw hypothesis_error("proportional weight",
                                   "weight " + rep.weights[i].str() +
                                       " pairs zero with lambda'; the comparison is undefined");
        data.a.push_back(ai);
        data.r.push_back(-pairing(lambda0, rep.weights[i]) / data.eta0);
        if (ai.sign() > 0) data.i_plus.push_back((long long)i);
    }
    return data;
}

bool borisov_hua_member(const RepSpec& rep, const BorisovHuaData& data, const QWeight& theta,
                        const QWeight& chi) {
    // Rational preimage y of chi - theta under phi, supported on the first
    // two independent weights.
    const auto& ws = rep.weights;
    size_t p = 0, q = 0;
    bool found = false;
    for (size_t i = 0; i < ws.size() && !found; ++i)
        for (size_t j = i + 1; j < ws.size() && !found; ++j)
            if (ws[i].a * ws[j].b - ws[i].b * ws[j].a != 0) {
                p = i;
                q = j;
                found = true;
            }
    if (!found) throw hypothesis_error("weights span", "weights of X do not span M_R");
    QWeight x = chi - theta;
    Rat det = Rat(ws[p].a * ws[q].b - ws[p].b * ws[q].a);
    Rat yp = (x.a * Rat(ws[q].b) - x.b * Rat(ws[q].a)) / det;
    Rat yq = (Rat(ws[p].a) * x.b - Rat(ws[p].b) * x.a) / det;

    Rat fval = yp * data.r[p] + yq * data.r[q];
    Rat psival = yp * data.a[p] + yq * data.a[q];
    Rat half_sum;
    for (long long i : data.i_plus) half_sum += data.a[i];
    half_sum = half_sum / Rat(2);
    return fval.abs() <= Rat(1, 2) && psival.abs() <= half_sum;
}

} // namespace gitwin
