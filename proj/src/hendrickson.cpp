#include "rigidity/hendrickson.hpp"

#include "rigidity/rng.hpp"

namespace rigidity {

const char* verdict_name(GlobalRigidityVerdict::Verdict v) {
    switch (v) {
        case GlobalRigidityVerdict::Verdict::FailsNecessary:
            return "fails_necessary";
        case GlobalRigidityVerdict::Verdict::PassesNecessary:
            return "passes_necessary";
        case GlobalRigidityVerdict::Verdict::TriviallyGloballyRigid:
            return "trivially_globally_rigid";
    }
    throw InputError("unknown verdict");
}

GlobalRigidityVerdict::Verdict verdict_from_name(const std::string& name) {
    if (name == "fails_necessary") return GlobalRigidityVerdict::Verdict::FailsNecessary;
    if (name == "passes_necessary") return GlobalRigidityVerdict::Verdict::PassesNecessary;
    if (name == "trivially_globally_rigid")
        return GlobalRigidityVerdict::Verdict::TriviallyGloballyRigid;
    throw InputError("unknown verdict: " + name);
}

GlobalRigidityVerdict check_necessary_conditions(const Graph& g, const Surface& s, int trials,
                                                 std::uint64_t seed) {
    if (trials <= 0) throw InputError("trials must be positive");
    const SurfaceMeta meta = surface_meta(s.kind);
    const int n = g.vertex_count();

    GlobalRigidityVerdict out;
    out.required_k = meta.k_conn;
    out.small_complete_exception = g.is_complete() && n < 4 + meta.gamma;
    if (out.small_complete_exception) {
        out.verdict = GlobalRigidityVerdict::Verdict::TriviallyGloballyRigid;
        out.connectivity_ok = true;
        out.redundancy_ok = true;
        out.notes.push_back(
            "complete graph below the theorems' vertex threshold: equivalence and congruence "
            "coincide, so the framework is globally rigid for trivial reasons");
        return out;
    }

    if (n >= 4) {
        out.connectivity_ok = is_k_connected(g, meta.k_conn);
    } else {
        out.connectivity_ok = true;
        out.notes.push_back(
            "fewer than four vertices: the connectivity condition does not apply and was "
            "skipped");
    }

    int rigid_and_redundant_votes = 0;
    for (int t = 0; t < trials; ++t) {
        const Framework fw(g, s, sample_config(s, n, derive_seed(seed, 0x48 + t)));
        if (classify(fw).is_rigid_generic &&
            is_redundantly_rigid(fw, trials, derive_seed(seed, 0x52 + t)))
            ++rigid_and_redundant_votes;
    }
    out.redundancy_ok = 2 * rigid_and_redundant_votes > trials;
    if (!out.redundancy_ok)
        out.notes.push_back(
            "redundant rigidity failed on sampled configurations; the sampling surrogate for "
            "genericity makes this verdict probabilistic");

    if (!out.connectivity_ok || !out.redundancy_ok) {
        out.verdict = GlobalRigidityVerdict::Verdict::FailsNecessary;
    } else {
        out.verdict = GlobalRigidityVerdict::Verdict::PassesNecessary;
        if (s.kind == SurfaceKind::Cylinder || s.kind == SurfaceKind::Cone) {
            out.conjecture_note =
                "necessary conditions hold; sufficiency on the cylinder and cone is "
                "conjectural (2-connected plus redundantly rigid is conjectured to "
                "characterize generic global rigidity there)";
        } else if (s.kind == SurfaceKind::Sphere) {
            out.notes.push_back(
                "on the sphere these necessary conditions are also sufficient for generic "
                "global rigidity (via the equivalence with the plane)");
        }
    }
    return out;
}

}  // namespace rigidity
