#include <random>
#include <string>

#include "doctest.h"
#include "halg/comod.hpp"
#include "halg/error.hpp"
#include "halg/io.hpp"

using namespace halg;

namespace {

bool has_status(const Report& rep, const std::string& name, CheckStatus st) {
    for (const auto& c : rep.checks)
        if (c.name == name) return c.status == st;
    return false;
}

// Replace the unique line `old_line` of `text` with `new_line`.
std::string swap_line(const std::string& text, const std::string& old_line,
                      const std::string& new_line) {
    size_t pos = text.find(old_line + "\n");
    REQUIRE(pos != std::string::npos);
    std::string out = text;
    out.replace(pos, old_line.size(), new_line);
    return out;
}

Err kind_of(const std::string& text) {
    try {
        parse_description_text(text);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected a parse-time error");
    return Err::Parse;
}

}  // namespace

TEST_CASE("ring expressions round-trip through the descriptor grammar") {
    std::vector<RingPtr> rings = {
        ring_Z(),
        ring_Q(),
        ring_mod(3),
        ring_mod(12),
        ring_padic(3, 2),
        ring_series(ring_padic(3, 2), "u", 4),
        ring_series(ring_Q(), "x", 3),
        ring_product({ring_Z(), ring_Z()}),
        ring_product({ring_mod(2), ring_mod(9), ring_Z()}),
        ring_ext(ring_mod(3), "w",
                 {RingElement::one(ring_mod(3)), RingElement::zero(ring_mod(3))}),
        ring_series(ring_product({ring_mod(5), ring_mod(5)}), "t", 3),
    };
    for (const auto& R : rings) {
        auto back = parse_ring_expr(ring_str(R));
        CHECK(ring_str(back) == ring_str(R));
    }
    CHECK_THROWS_AS(parse_ring_expr("Fish"), Error);
    CHECK_THROWS_AS(parse_ring_expr("Zp(3)"), Error);
    CHECK_THROWS_AS(parse_ring_expr("series(u;4)"), Error);
    CHECK_THROWS_AS(parse_ring_expr("Z/1"), Error);
}

TEST_CASE("coefficient literals round-trip on random samples") {
    std::vector<RingPtr> rings = {
        ring_Z(),
        ring_Q(),
        ring_mod(7),
        ring_padic(3, 3),
        ring_series(ring_mod(3), "u", 5),
        ring_series(ring_padic(5, 2), "u", 4),
        ring_product({ring_Z(), ring_Z()}),
        ring_product({ring_mod(4), ring_Q()}),
        ring_ext(ring_mod(3), "w",
                 {RingElement::one(ring_mod(3)), RingElement::zero(ring_mod(3))}),
        ring_series(ring_product({ring_mod(5), ring_mod(5)}), "t", 3),
        ring_series(ring_series(ring_mod(2), "v", 3), "u", 3),
    };
    std::mt19937_64 rng(2026);
    for (const auto& R : rings) {
        for (int n = 0; n < 40; ++n) {
            RingElement e = sample_element(R, rng);
            RingElement back = parse_element(e.str(), R);
            CAPTURE(ring_str(R));
            CAPTURE(e.str());
            CHECK(back == e);
        }
        // zero prints as "0" except for products, which stay tuples
        if (R->kind != RingKind::Product) CHECK(parse_element("0", R).is_zero());
        CHECK(parse_element(RingElement::zero(R).str(), R).is_zero());
    }
    // nested polynomial coefficients keep their grouping
    auto S = ring_series(ring_series(ring_mod(2), "v", 3), "u", 3);
    RingElement vplus = parse_element("(1+v)+(v^2)*u^2", S);
    CHECK(vplus.str() == "(1+v)+(v^2)*u^2");
}

TEST_CASE("divided powers window 9 serialize and parse back identically") {
    DescriptionFile f;
    f.pres = divided_power_algebroid(ring_mod(3), 9);
    std::string text = serialize_description(f);
    DescriptionFile g = parse_description_text(text);
    CHECK(description_equal(f, g));
    CHECK(serialize_description(g) == text);
    CHECK(g.pres->check_axioms().all_pass());
    CHECK(!g.comodule.has_value());
}

TEST_CASE("pair groupoid on two points round-trips with tuple literals") {
    DescriptionFile f;
    f.pres = pair_groupoid_algebroid(2);
    std::string text = serialize_description(f);
    CHECK(text.find("ring = prod(Z;Z)") != std::string::npos);
    CHECK(text.find("(1,0)") != std::string::npos);
    DescriptionFile g = parse_description_text(text);
    CHECK(description_equal(f, g));
    CHECK(serialize_description(g) == text);
    CHECK(g.pres->check_axioms().all_pass());
    CHECK(!g.pres->etaR_is_etaL);
    CHECK(g.pres->etaR_gens.size() == 2);
}

TEST_CASE("tensor square of divided powers round-trips") {
    DescriptionFile f;
    f.pres = tensor_square_algebroid(divided_power_algebroid(ring_mod(3), 3), 3);
    std::string text = serialize_description(f);
    DescriptionFile g = parse_description_text(text);
    CHECK(description_equal(f, g));
    CHECK(serialize_description(g) == text);
}

TEST_CASE("selfdual shorthand derives the conj table") {
    auto P = divided_power_algebroid(ring_mod(3), 9);
    std::string text = serialize_presentation(P);
    // drop the whole [conj] section (it is the last presentation section)
    size_t pos = text.find("\n[conj]\n");
    REQUIRE(pos != std::string::npos);
    std::string without = text.substr(0, pos);
    DescriptionFile g = parse_description_text(without);
    REQUIRE(g.pres->conj.size() == static_cast<size_t>(P->window));
    for (int i = 0; i < P->window; ++i)
        CHECK(g.pres->conj[static_cast<size_t>(i)] == P->conj[static_cast<size_t>(i)]);
    CHECK(g.pres->check_axioms().all_pass());
}

TEST_CASE("comodule sections round-trip and validate") {
    auto P = divided_power_algebroid(ring_mod(3), 4);
    DescriptionFile f;
    f.pres = P;
    f.comodule = truncated_regular_comodule(P, 4);
    std::string text = serialize_description(f);
    DescriptionFile g = parse_description_text(text);
    CHECK(description_equal(f, g));
    CHECK(serialize_description(g) == text);
    CHECK(check_comodule(*g.comodule, P->window).all_pass());
}

TEST_CASE("the coproduct mutation file parses but fails validation") {
    auto P = divided_power_algebroid(ring_mod(3), 9);
    std::string text = serialize_presentation(P);
    std::string mutated =
        swap_line(text, "2 -> (2,0):1 (1,1):1 (0,2):1", "2 -> (0,2):1");
    DescriptionFile g = parse_description_text(mutated);  // parses fine
    auto rep = g.pres->check_axioms();
    CHECK(!rep.all_pass());
    CHECK(has_status(rep, "coassociativity", CheckStatus::Fail));
}

TEST_CASE("parse errors carry line numbers and the right kinds") {
    auto P = divided_power_algebroid(ring_mod(3), 9);
    std::string text = serialize_presentation(P);

    SUBCASE("index past the window") {
        std::string bad = swap_line(text, "0 -> (0,0):1", "0 -> (0,99):1");
        CHECK(kind_of(bad) == Err::WindowExceeded);
        try {
            parse_description_text(bad);
        } catch (const Error& e) {
            CHECK(std::string(e.what()).find("line") != std::string::npos);
            CHECK(std::string(e.what()).find("99") != std::string::npos);
        }
    }
    SUBCASE("unreadable coefficient") {
        CHECK(kind_of(swap_line(text, "0 -> (0,0):1", "0 -> (0,0):x")) == Err::Parse);
    }
    SUBCASE("missing format line") {
        CHECK(kind_of(text.substr(std::string("format = 1\n").size())) == Err::Parse);
    }
    SUBCASE("mult entries must be stored lower-triangular") {
        CHECK(kind_of(swap_line(text, "0 1 -> 1:1", "1 0 -> 1:1")) == Err::Parse);
    }
    SUBCASE("duplicate sections are rejected") {
        CHECK(kind_of(text + "\n[unit]\n0:1\n") == Err::Parse);
    }
    SUBCASE("incomplete delta table") {
        std::string bad = swap_line(text, "8 -> (8,0):1 (7,1):1 (6,2):1 (5,3):1 (4,4):1 "
                                          "(3,5):1 (2,6):1 (1,7):1 (0,8):1",
                                     "");
        CHECK(kind_of(bad) == Err::Parse);
    }
    SUBCASE("missing conj without the selfdual shorthand") {
        std::string nosd = swap_line(text, "selfdual = true", "");
        size_t pos = nosd.find("\n[conj]\n");
        REQUIRE(pos != std::string::npos);
        CHECK(kind_of(nosd.substr(0, pos)) == Err::Parse);
    }
}

TEST_CASE("comments and blank lines are ignored") {
    auto P = divided_power_algebroid(ring_mod(3), 3);
    std::string text = serialize_presentation(P);
    std::string commented = "# header comment\n" + text + "# trailing comment\n";
    size_t pos = commented.find("window = 3");
    REQUIRE(pos != std::string::npos);
    commented.insert(pos + std::string("window = 3").size(), "   # inline note");
    DescriptionFile g = parse_description_text(commented);
    CHECK(presentation_equal(*g.pres, *P));
}
