#include "wreathfuse/verify.hpp"

#include <sstream>

#include "testkit.hpp"

using namespace wrf;

int main() {
    RUN("system suite passes on small configurations", {
        for (const char* spec : {"C2", "C3"}) {
            FusionConfig cfg = make_fusion_config(build_group(spec), 2);
            VerificationReport r = verify_idempotent_system(cfg, Construction::Both);
            CHECK_MSG(r.all_pass(), spec);
            CHECK_EQ(r.suite, std::string("system"));
            CHECK(r.checks.size() >= 6);
        }
        // trivial group at rank 3: the classical symmetric-group system
        FusionConfig triv = make_fusion_config(build_group("trivial"), 3);
        CHECK(verify_idempotent_system(triv, Construction::Both).all_pass());
    });

    RUN("relations suite passes and is deterministic", {
        VerificationReport r1 = verify_relations(build_group("C2"), 3, 5, 7);
        CHECK(r1.all_pass());
        CHECK_EQ(r1.seed, std::uint64_t(7));
        VerificationReport r2 = verify_relations(build_group("C2"), 3, 5, 7);
        std::ostringstream a, b;
        render_report_structured(r1, a);
        render_report_structured(r2, b);
        CHECK_EQ(a.str(), b.str());
        std::ostringstream h;
        render_report_human(r1, h);
        CHECK(h.str().find("PASS yang-baxter") != std::string::npos);
        CHECK(h.str().find("result PASS") != std::string::npos);
    });

    RUN("size cap refusal", {
        FusionConfig cfg = make_fusion_config(build_group("S3"), 6);
        bool caught = false;
        try {
            verify_idempotent_system(cfg, Construction::Fusion);
        } catch (const CapExceededError& e) {
            caught = true;
            CHECK(e.estimate > kVerifySizeCap);
        }
        CHECK(caught);
    });

    RUN("negative control: perturbed idempotents fail with a replayable counterexample", {
        FusionConfig cfg = make_fusion_config(build_group("C2"), 2);
        auto ts = standard_tableaux_of_size(2, 2);
        AlgebraElement e = fusion_idempotent(cfg, ts[0]);
        Cyclotomic delta(Rational(Int(1), Int(7)));
        for (std::uint64_t code = 0; code < cfg.algebra->order(); ++code) {
            AlgebraElement bad = e.with_term_added(code, delta);
            CheckResult r = check_idempotent(bad, "perturbed");
            CHECK_MSG(!r.pass, "code " << code);
            CHECK(!r.counterexample.empty());
            // replay: the serialized element still fails the check
            auto nl = r.counterexample.find("element n=");
            CHECK(nl != std::string::npos);
            AlgebraElement replayed =
                AlgebraElement::deserialize(cfg.algebra, r.counterexample.substr(nl));
            CHECK(!(replayed * replayed == replayed));
        }
    });

    RUN("corrupted system detected end to end", {
        FusionConfig cfg = make_fusion_config(build_group("C2"), 1);
        auto ts = standard_tableaux_of_size(2, 1);
        AlgebraElement good = fusion_idempotent(cfg, ts[0]);
        AlgebraElement bad = good.with_term_added(0, Cyclotomic(Rational(Int(1), Int(3))));
        CheckResult r = check_idempotent(bad, "corrupted");
        CHECK(!r.pass);
        CHECK(r.counterexample.find("idempotency-counterexample") == 0);
    });

    return testkit::summary("test_verify");
}
