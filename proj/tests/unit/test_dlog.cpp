#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rslab/dlog.hpp"
#include "rslab/error.hpp"
#include "rslab/rng.hpp"

using namespace rslab;

namespace {

std::vector<Residue> iota(std::size_t n) {
    std::vector<Residue> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

ExtElem random_nonzero(const ExtField& K, Rng& rng) {
    return K.from_index(1 + rng.below(K.element_count() - 1));
}

ExtElem random_primitive(const ExtField& K, Rng& rng) {
    for (;;) {
        ExtElem e = random_nonzero(K, rng);
        if (is_primitive(e)) return e;
    }
}

DlogConfig config(const ExtField& K, std::size_t g, ExtElem b, ExtElem t, std::uint64_t seed,
                  Decoder d = Decoder::BruteForce) {
    return DlogConfig{.field = K, .S = iota(K.q()), .g = g, .variant = Variant::ListDecode, .decoder = d,
                      .base = std::move(b), .target = std::move(t), .seed = seed};
}

}  // namespace

TEST_CASE("baby-step giant-step") {
    PrimeField F7(7);
    CHECK(bsgs_dlog(F7, 3, 6) == 3u);
    CHECK(bsgs_dlog(F7, 3, 1) == 0u);
    CHECK(bsgs_dlog(F7, 2, 3) == std::nullopt);  // <2> = {1, 2, 4}
    CHECK(bsgs_dlog(F7, 2, 4) == 2u);

    ExtField F4 = ExtField::make(2, "1,1,1");
    for (std::uint64_t idx = 1; idx < 4; ++idx) CHECK(bsgs_dlog(F4.alpha(), F4.from_index(idx)).has_value());

    for (auto [q, hp] : std::vector<std::pair<std::uint64_t, const char*>>{{5, "2,0,1"}, {7, "3,1,1"}, {3, "1,2,0,1"}}) {
        ExtField K = ExtField::make(q, hp);
        for (std::uint64_t bi = 1; bi < K.element_count(); ++bi)
            for (std::uint64_t ti = 1; ti < K.element_count(); ++ti) {
                ExtElem b = K.from_index(bi), t = K.from_index(ti);
                const std::int64_t walk = oracle::dlog_by_walk(b, t);
                auto got = bsgs_dlog(b, t);
                if (walk < 0)
                    CHECK_FALSE(got.has_value());
                else
                    CHECK(got == BigInt(static_cast<long>(walk)));
            }
    }
    ExtField big = ExtField::make(100003, "1,0,1");
    CHECK_THROWS_AS(bsgs_dlog(big.alpha(), big.one(), 1000), Error);
}

TEST_CASE("configuration rules") {
    ExtField K = ExtField::make(7, "3,1,1");
    ExtElem b = first_primitive(K);
    CHECK_NOTHROW(validate(config(K, 4, b, K.alpha(), 1)));
    ExtElem square = b * b;
    CHECK_THROWS_AS(validate(config(K, 4, square, K.alpha(), 1)), Error);
    CHECK_THROWS_AS(validate(config(K, 4, b, K.zero(), 1)), Error);
    CHECK_THROWS_AS(validate(config(K, 2, b, K.alpha(), 1)), Error);
    // radius 3 exceeds the unique radius 2 of [7,2]
    CHECK_THROWS_AS(validate(config(K, 4, b, K.alpha(), 1, Decoder::BW)), Error);
    CHECK_NOTHROW(validate(config(K, 5, b, K.alpha(), 1, Decoder::BW)));
    CHECK_NOTHROW(validate(config(K, 4, b, K.alpha(), 1, Decoder::Sudan)));
    auto bdd = config(K, 4, b, K.alpha(), 1);
    bdd.variant = Variant::BoundedDistance;
    CHECK_THROWS_AS(validate(bdd), Error);
    CHECK(parse_variant("bdd") == Variant::BoundedDistance);
    CHECK(parse_decoder("sudan") == Decoder::Sudan);
    CHECK_THROWS_AS(parse_decoder("guess"), Error);
}

TEST_CASE("pipeline agrees with baby-step giant-step") {
    ExtField K = ExtField::make(7, "3,1,1");
    Rng rng(49);
    std::size_t dependence = 0;
    for (int t = 0; t < 20; ++t) {
        ExtElem b = random_primitive(K, rng);
        ExtElem target = random_nonzero(K, rng);
        auto rep = dlog_via_rs(config(K, 4, b, target, 1000 + t));
        CHECK(rep.verified);
        CHECK(b.pow(rep.extraction.exponent) == target);
        CHECK(bsgs_dlog(b, target) == rep.extraction.exponent);
        // even g with even N: the all-ones vector is a kernel vector mod 2
        CHECK_FALSE(rep.table_unique);
        dependence += rep.extraction.path == "dependence";
        for (const Relation& r : rep.collection.system.rows) CHECK(b.pow(r.i) == psi_map(K, r.A));
    }
    CHECK(dependence == 20);
}

TEST_CASE("odd g reaches a full log table") {
    ExtField K = ExtField::make(7, "3,1,1");
    Rng rng(7);
    for (Decoder d : {Decoder::BruteForce, Decoder::BW, Decoder::Sudan}) {
        ExtElem b = random_primitive(K, rng);
        ExtElem target = random_nonzero(K, rng);
        DlogConfig cfg = config(K, 5, b, target, 77, d);
        auto st = collect_relations(cfg);
        CHECK(st.determined);
        CHECK(st.stop_reason == "determined");
        auto table = solve_log_system(cfg, st.system);
        REQUIRE(table);
        CHECK(table->verified);
        for (const auto& [a, L] : table->logs) CHECK(b.pow(L) == K.linear(a));
        auto ex = extract_target_log(cfg, *table);
        CHECK(ex.path == "table");
        CHECK(bsgs_dlog(b, target) == ex.exponent);
    }
    ExtElem b = first_primitive(K);
    auto one = dlog_via_rs(config(K, 5, b, K.one(), 3));
    CHECK(one.extraction.exponent == 0);
    auto self = dlog_via_rs(config(K, 5, b, b, 3));
    CHECK(self.extraction.exponent == 1);
}

TEST_CASE("solver never returns a wrong table") {
    ExtField K = ExtField::make(7, "3,1,1");
    ExtElem b = first_primitive(K);
    DlogConfig cfg = config(K, 5, b, K.alpha(), 5);
    cfg.max_trials = 3;
    auto st = collect_relations(cfg);
    CHECK(st.stop_reason == "max_trials");
    CHECK_FALSE(solve_log_system(cfg, st.system).has_value());
    CHECK_THROWS_AS(extract_target_log(cfg, LogTable{}), Error);
}

TEST_CASE("replay determinism and thread independence") {
    ExtField K = ExtField::make(7, "3,1,1");
    ExtElem b = first_primitive(K);
    DlogConfig cfg = config(K, 4, b, K.from_index(30), 42);
    auto a = dlog_via_rs(cfg);
    auto again = dlog_via_rs(cfg);
    cfg.threads = 3;
    auto threaded = dlog_via_rs(cfg);
    for (const auto* r : {&again, &threaded}) {
        CHECK(r->collection.trial_exponents == a.collection.trial_exponents);
        CHECK(r->collection.system.rows == a.collection.system.rows);
        CHECK(r->extraction.exponent == a.extraction.exponent);
        CHECK(r->extraction.trials == a.extraction.trials);
    }
}

TEST_CASE("two-phase collection equals one-phase") {
    ExtField K = ExtField::make(7, "3,1,1");
    ExtElem b = first_primitive(K);
    DlogConfig cfg = config(K, 4, b, K.from_index(17), 9);
    auto whole = dlog_via_rs(cfg);

    DlogConfig early = cfg;
    early.max_trials = 4;
    auto part = collect_relations(early);
    CHECK(part.trials_done == 4);
    const std::string saved = save_relations(early, part);
    auto loaded = load_relations(cfg, saved);
    CHECK(loaded.system.rows == part.system.rows);
    auto resumed = dlog_via_rs(cfg, loaded);
    CHECK(resumed.collection.trials_done == whole.collection.trials_done);
    CHECK(resumed.collection.trial_exponents == whole.collection.trial_exponents);
    CHECK(resumed.collection.system.rows == whole.collection.system.rows);
    CHECK(resumed.extraction.exponent == whole.extraction.exponent);
    CHECK(save_relations(cfg, resumed.collection) == save_relations(cfg, whole.collection));

    DlogConfig other = cfg;
    other.seed = 10;
    CHECK_THROWS_AS(load_relations(other, saved), Error);
    std::string broken = saved;
    broken.replace(broken.find("\"hits\""), 6, "\"hitz\"");
    try {
        (void)load_relations(cfg, broken);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("hits") != std::string::npos);
    }
}

TEST_CASE("relation hit rate matches the census prediction") {
    ExtField K = ExtField::make(7, "3,1,1");
    ExtElem b = first_primitive(K);
    for (std::size_t g : {3u, 4u, 5u}) {
        DlogConfig cfg = config(K, g, b, K.one(), 1);
        CountTable census = psi_census(K, cfg.S, g);
        const double N = 48;
        const double p = static_cast<double>(census.counts.size()) / N;
        Rng rng(g);
        const int trials = 3000;
        int hits = 0;
        for (int t = 0; t < trials; ++t) hits += !relations_for_exponent(cfg, rng.below(BigInt(48))).empty();
        const double sigma = std::sqrt(trials * p * (1 - p));
        CHECK(std::fabs(hits - trials * p) <= 5 * sigma + 1e-9);
    }
}

TEST_CASE("bounded-distance variant either verifies or reports failure") {
    ExtField K = ExtField::make(13, "2,0,1");
    Rng rng(13);
    ExtElem b = random_primitive(K, rng);
    DlogConfig cfg{.field = K, .S = iota(13), .g = 12, .variant = Variant::BoundedDistance,
                   .decoder = Decoder::BruteForce, .base = b, .target = random_nonzero(K, rng), .seed = 5,
                   .max_trials = 400};
    try {
        auto rep = dlog_via_rs(cfg);
        CHECK(rep.verified);
        CHECK(bsgs_dlog(b, cfg.target) == rep.extraction.exponent);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Computation);
    }
}
