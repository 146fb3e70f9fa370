// Runs the ten acceptance criteria at full size and prints one line each.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "../oracles.hpp"
#include "crystal/enumerate.hpp"
#include "crystal/lgv.hpp"
#include "crystal/matrix_model.hpp"
#include "crystal/products.hpp"
#include "crystal/spectral.hpp"

using namespace crystal;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

Outcome fail(const std::string& why) { return {false, why}; }

Outcome macmahon_agreement() {
    const int D = 12;
    const auto z = enumerate_z(c3_spec(), D);
    if (!(z == macmahon(D))) return fail("enumeration differs from the product");
    const auto counts = oracle::plane_partition_counts(D);
    for (int k = 0; k <= D; ++k)
        if (z.coefficient(std::vector<int>{k}) != counts[static_cast<std::size_t>(k)])
            return fail("plane partition count differs at degree " + std::to_string(k));
    const long head[] = {1, 1, 3, 6, 13, 24};
    for (int k = 0; k < 6; ++k)
        if (z.coefficient(std::vector<int>{k}) != head[k]) return fail("leading coefficient " + std::to_string(k));
    return {true, "D=12, coefficients 1 1 3 6 13 24 ..."};
}

Outcome conifold_chambers() {
    for (int n = 0; n <= 2; ++n)
        if (!(enumerate_z(conifold_theta(n), 10) == conifold_product(n, 10)))
            return fail("chamber n=" + std::to_string(n));
    return {true, "n=0,1,2 at D=10"};
}

Outcome c3_matrix_model() {
    const auto r = stabilized_toeplitz(c3_symbol(8), 8);
    if (!(r.value == macmahon(8))) return fail("Toeplitz determinant differs from MacMahon");
    if (r.stabilized_at > 40) return fail("stabilized too late");
    return {true, "stabilized at N=" + std::to_string(r.stabilized_at)};
}

Outcome conifold_matrix_model() {
    std::string sizes;
    for (int n = 0; n <= 2; ++n) {
        const auto r = stabilized_toeplitz(conifold_symbol(n, 8), 8);
        if (!(prefactor_cn(n, 8) * r.value == enumerate_z(conifold_theta(n), 8)))
            return fail("chamber n=" + std::to_string(n));
        sizes += " N" + std::to_string(n) + "=" + std::to_string(r.stabilized_at);
    }
    const int D = 4;
    std::vector<oracle::laurent_factor> fac{{{0, 0}, 1, 1, false}};
    for (int k = 1; 2 * k <= D; ++k) {
        fac.push_back({{k, k}, 1, 1, false});
        fac.push_back({{k, k}, 1, -1, false});
    }
    for (int k = 0; 2 * k + 1 <= D; ++k) {
        fac.push_back({{k, k + 1}, 1, 1, true});
        fac.push_back({{k + 1, k}, 1, -1, true});
    }
    const auto ref = oracle::expand_symbol(fac, 2, D);
    const auto f = conifold_symbol(0, D);
    for (int m = -f.window() - 2; m <= f.window() + 2; ++m) {
        const auto it = ref.find(m);
        if (oracle::to_poly(symbol_coefficient(f, m)) != (it == ref.end() ? oracle::poly{} : it->second))
            return fail("symbol coefficient z^" + std::to_string(m));
    }
    if (f.support_radius() < 0) return fail("empty symbol");
    return {true, "n=0,1,2 at D=8," + sizes + "; symbol at D=4"};
}

Outcome prefactor_limits() {
    for (int D = 0; D <= 10; ++D)
        if (!prefactor_cn(0, D).is_one()) return fail("C_0 != 1 at D=" + std::to_string(D));
    const int D = 8;
    const auto m = to_conifold_variables(macmahon(D), D);
    for (int n = D; n <= D + 4; ++n) {
        const auto c = prefactor_cn(n, D);
        if (!(c == m)) return fail("C_n != M at n=" + std::to_string(n));
        if (!(collapse_variables(c) == collapse_variables(m))) return fail("collapse differs");
    }
    return {true, "C_0=1 for D<=10; C_n=M(q0 q1) for n=8..12 at D=8"};
}

Outcome lgv_theorem() {
    const auto g = six_weight_graph();
    const auto w = [](int i) { return TruncatedSeries::variable(6, 4, i - 1); };
    const auto expected = w(1) * w(4) * w(3) * w(5);
    if (!(lgv_det(g) == expected) || !(nonintersecting_bruteforce(g) == expected))
        return fail("six-weight example");
    int tested = 0;
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const auto r = random_layered_dag(seed);
        if (r.sources().size() > 3) return fail("too many terminals");
        if (!(lgv_det(r) == nonintersecting_bruteforce(r))) return fail("random graph seed " + std::to_string(seed));
        ++tested;
    }
    return {true, "example plus " + std::to_string(tested) + " random graphs"};
}

Outcome walker_convergence() {
    for (int N : {5, 6})
        if (!(lgv_det(walker_graph(c3_spec(), N, 5)) == macmahon(5))) return fail("C3 with N=" + std::to_string(N));
    for (int N : {4, 5})
        if (!(lgv_det(walker_graph(conifold_theta(0), N, 4)) == conifold_product(0, 4)))
            return fail("conifold with N=" + std::to_string(N));
    std::size_t configs = 0;
    for (const auto& spec : {c3_spec(), conifold_theta(0)})
        for (int N = 1; N <= 3; ++N)
            for (int D = 0; D <= 3; ++D) {
                const auto r = profile_bijection_check(spec, N, D);
                if (!r.ok) return fail(r.message);
                configs += r.configurations_checked;
            }
    return {true, "bijection on " + std::to_string(configs) + " configurations"};
}

Outcome transpose_symmetry() {
    if (!(enumerate_z(c3_spec(), 8) == enumerate_z_transposed(c3_spec(), 8))) return fail("C3");
    for (int n = 0; n <= 2; ++n)
        if (!(enumerate_z(conifold_theta(n), 8) == enumerate_z_transposed(conifold_theta(n), 8)))
            return fail("chamber n=" + std::to_string(n));
    return {true, "C3 and n=0,1,2 at D=8"};
}

Outcome spectral_identities() {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const auto p = random_params(seed);
        const auto r = s3_equivariance_check(p);
        if (!r.ok) return fail("S3 " + r.violation + " at " + to_string(p));
    }
    for (std::uint64_t seed = 1001; seed <= 1020; ++seed) {
        const auto p = random_params(seed);
        const auto r = spp_limit_check(p);
        if (!r.ok) return fail("SPP limit " + r.message + " at " + to_string(p));
    }
    for (int n = 1; n <= 2; ++n)
        if (!spp_identity_squared(n, 6)) return fail("SPP product n=" + std::to_string(n));
    return {true, "100 S3 triples, 20 limits, n=1,2 at D=6"};
}

Outcome wall_crossing() {
    for (int n = 0; n <= 1; ++n)
        if (!(conifold_product(n + 1, 10) * conifold_wall_factor(n + 1, 10) == conifold_product(n, 10)))
            return fail("n=" + std::to_string(n));
    return {true, "n=0,1 at D=10"};
}

} // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"macmahon agreement", macmahon_agreement},
        {"conifold chambers", conifold_chambers},
        {"c3 matrix model", c3_matrix_model},
        {"conifold matrix model", conifold_matrix_model},
        {"prefactor limits", prefactor_limits},
        {"lgv determinant", lgv_theorem},
        {"walker convergence", walker_convergence},
        {"transpose symmetry", transpose_symmetry},
        {"spectral identities", spectral_identities},
        {"wall crossing", wall_crossing},
    };
    int failures = 0, k = 0;
    for (const auto& [name, run] : criteria) {
        ++k;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.ok) ++failures;
        std::printf("criterion %2d %-22s %s  %s (%.2fs)\n", k, name, o.ok ? "PASS" : "FAIL", o.detail.c_str(), secs);
    }
    std::printf("%d of %d criteria passed\n", k - failures, k);
    return failures == 0 ? 0 : 1;
}
