#include <catch2/catch_amalgamated.hpp>

#include "asph4/io.hpp"
#include "asph4/synthesis.hpp"
#include "support/random_gen.hpp"

using namespace asph4;
using namespace asph4::blocks;
using asph4::io::parse;
using asph4::io::ParseError;
using asph4::io::serialize;
using asph4::sl2z::Sl2Matrix;

namespace {

bool same_assembly(const AssemblyGraph& a, const AssemblyGraph& b) {
    if (a.instances().size() != b.instances().size()) return false;
    for (std::size_t i = 0; i < a.instances().size(); ++i) {
        if (!(a.instances()[i].first == b.instances()[i].first)) return false;
        if (a.instances()[i].second != b.instances()[i].second) return false;
    }
    if (a.gluings().size() != b.gluings().size()) return false;
    for (std::size_t i = 0; i < a.gluings().size(); ++i) {
        if (!(a.gluings()[i].from == b.gluings()[i].from)) return false;
        if (!(a.gluings()[i].to == b.gluings()[i].to)) return false;
    }
    return true;
}

AssemblyGraph random_assembly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> shape(0, 4);
    switch (shape(rng)) {
        case 0: {
            std::uniform_int_distribution<long long> n(0, 9);
            return synthesis::synthesize_chi(13 + 2 * n(rng));
        }
        case 1: {
            std::uniform_int_distribution<long long> sm(0, 3);
            return synthesis::synthesize_chi_sigma(sm(rng), sm(rng));
        }
        case 2: {
            const Sl2Matrix m = testsupport::random_hyperbolic(rng);
            const auto result = synthesis::euler_bound(BoundaryLabel::torus(sl2z::classify(m)));
            return *result.witness;
        }
        case 3: {
            AssemblyGraph g;
            const auto c1 = g.add_instance(core());
            const auto c2 = g.add_instance(core(), -1);
            g.add_gluing({c1, 0}, {c2, 0});
            return g;
        }
        default: {
            AssemblyGraph g;
            const auto gb = g.add_instance(genus_three_bundle());
            const auto cob = g.add_instance(twist_cobordism(3));
            g.add_gluing({gb, 0}, {cob, 0});
            const auto p = g.add_instance(cap());
            g.add_gluing({cob, 1}, {p, 0});
            return g;
        }
    }
}

}  // namespace

TEST_CASE("round-trip identity on random legal assemblies") {
    auto rng = testsupport::make_rng(2024);
    for (int i = 0; i < 500; ++i) {
        const AssemblyGraph g = random_assembly(rng);
        const std::string text = serialize(g);
        const AssemblyGraph back = parse(text);
        CHECK(same_assembly(g, back));
        CHECK(serialize(back) == text);
    }
}

TEST_CASE("serialization is deterministic") {
    const auto g = synthesis::synthesize_chi(17);
    CHECK(serialize(g) == serialize(synthesis::synthesize_chi(17)));
}

TEST_CASE("reversed factory blocks canonicalize to the flipped orientation") {
    AssemblyGraph g;
    const auto c1 = g.add_instance(core());
    const auto c2 = g.add_instance(reversed(core()));
    g.add_gluing({c1, 0}, {c2, 0});
    const AssemblyGraph back = parse(serialize(g));
    CHECK(back.instances()[1].first == core());
    CHECK(back.instances()[1].second == -1);
    CHECK(serialize(back) == serialize(g));
    const auto rg = verify(g);
    const auto rb = verify(back);
    CHECK(rb.legal);
    CHECK(rb.chi_total == rg.chi_total);
    CHECK(*rb.sigma_total == *rg.sigma_total);
}

TEST_CASE("strict schema rejections") {
    const auto g = synthesis::synthesize_chi(13);
    const std::string text = serialize(g);

    SECTION("unknown top-level field") {
        auto doc = nlohmann::json::parse(text);
        doc["extra"] = 1;
        CHECK_THROWS_AS(parse(doc.dump()), ParseError);
    }
    SECTION("unknown block field") {
        auto doc = nlohmann::json::parse(text);
        doc["blocks"][0]["color"] = "red";
        CHECK_THROWS_AS(parse(doc.dump()), ParseError);
    }
    SECTION("unknown parameter field") {
        auto doc = nlohmann::json::parse(text);
        doc["blocks"][0]["parameters"]["spin"] = 2;
        CHECK_THROWS_AS(parse(doc.dump()), ParseError);
    }
    SECTION("bad version") {
        auto doc = nlohmann::json::parse(text);
        doc["version"] = "2";
        CHECK_THROWS_AS(parse(doc.dump()), ParseError);
    }
    SECTION("non-consecutive ids") {
        auto doc = nlohmann::json::parse(text);
        doc["blocks"][0]["id"] = 7;
        CHECK_THROWS_AS(parse(doc.dump()), ParseError);
    }
    SECTION("bad orientation") {
        auto doc = nlohmann::json::parse(text);
        doc["blocks"][0]["orientation"] = 2;
        CHECK_THROWS_AS(parse(doc.dump()), ParseError);
    }
    SECTION("unknown kind") {
        auto doc = nlohmann::json::parse(text);
        doc["blocks"][0]["kind"] = "mystery";
        CHECK_THROWS_AS(parse(doc.dump()), ParseError);
    }
    SECTION("bad matrix in parameters") {
        AssemblyGraph h;
        h.add_instance(connector(sl2z::twist_a()));
        auto doc = nlohmann::json::parse(serialize(h));
        doc["blocks"][0]["parameters"]["psi"] = {1, 0, 0, 2};
        CHECK_THROWS_AS(parse(doc.dump()), ParseError);
    }
    SECTION("slot reuse in gluings") {
        auto doc = nlohmann::json::parse(text);
        doc["gluings"].push_back(doc["gluings"][0]);
        CHECK_THROWS_AS(parse(doc.dump()), ParseError);
    }
    SECTION("not json at all") { CHECK_THROWS_AS(parse("not json"), ParseError); }
}

TEST_CASE("illegal gluings in a file surface as IllegalGluing") {
    AssemblyGraph g;
    g.add_instance(splitter());
    g.add_instance(splitter());
    auto doc = nlohmann::json::parse(serialize(g));
    doc["gluings"].push_back({{"from", {0, 1}}, {"to", {1, 1}}});
    CHECK_THROWS_AS(parse(doc.dump()), IllegalGluing);
}

TEST_CASE("dot export shape") {
    const auto g = synthesis::synthesize_chi(13);
    const std::string dot = io::to_dot(g);
    CHECK(dot.find("graph assembly {") == 0);
    CHECK(dot.find("b0 [label=\"core + chi=1\"]") != std::string::npos);
    CHECK(dot.find("--") != std::string::npos);
    CHECK(dot.find("Parabolic") != std::string::npos);
    // one labeled line per instance and per gluing
    std::size_t labels = 0, at = 0;
    while ((at = dot.find("[label=", at)) != std::string::npos) {
        ++at;
        ++labels;
    }
    CHECK(labels == g.instances().size() + g.gluings().size());
}
