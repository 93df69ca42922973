#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "pinlef/document.hpp"
#include "pinlef/errors.hpp"
#include "pinlef/report.hpp"

using namespace pinlef;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(PINLEF_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::size_t error_line(std::string_view text) {
    try {
        parse_document(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    FAIL("document parsed but should not have");
    return 0;
}

std::string error_reason(std::string_view text) {
    try {
        parse_document(text);
    } catch (const ParseError& e) {
        return e.reason();
    }
    return "";
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("the RP4 file parses to the Mobius band instance") {
    const auto doc = parse_document(slurp("rp4.pinlef"));
    CHECK(doc.surface == SurfaceModel::non_orientable(1, 1));
    REQUIRE(doc.cycles.size() == 1);
    CHECK(doc.cycles[0] == HomologyClass::z4({2}));
    CHECK_FALSE(doc.threefold.has_value());
    REQUIRE(doc.generator_surfaces().size() == 1);
    CHECK(doc.generator_surfaces()[0] == EmbeddedSurfaceData{1, 1, 0, 1, 0});
    CHECK_FALSE(doc.dual_surface().has_value());
}

TEST_CASE("parse errors carry line numbers and reasons") {
    CHECK(error_line("") == 0);
    CHECK(error_reason("") == "missing surface block");
    CHECK(error_reason("# only a comment\n") == "missing surface block");

    const std::string head = "[surface]\nkind = non-orientable\ncrosscaps = 1\nboundary = 1\n";
    CHECK(error_line(head + "[cycles]\n1, 0\n") == 6);
    CHECK(contains(error_reason(head + "[cycles]\n1, 0\n"), "has 2 coefficients"));
    CHECK(error_line(head + "[cycles]\n4\n") == 6);
    CHECK(contains(error_reason(head + "[cycles]\n4\n"), "not a residue mod 4"));
    CHECK(error_line(head + "[cycles]\n1\n") == 6);
    CHECK(error_line(head + "colour = red\n") == 5);
    CHECK(error_line(head + "[extras]\n") == 5);
    CHECK(error_line(head + "boundary = 2\n") == 5);
    CHECK(error_line(head + "[surface]\n") == 5);
    CHECK(error_line("kind = orientable\n") == 1);
    CHECK(error_line("[surface]\nkind = weird\n") == 2);
    CHECK(error_line("[surface]\nkind = orientable\n") == 1);
    CHECK(error_line("[surface]\nkind = non-orientable\ncrosscaps = 0\n") == 1);
    CHECK(error_line("[surface]\nkind = orientable\ngenus = x\n") == 3);
    CHECK(error_line(head + "[embedded-surface]\neuler_char = 2\n") == 6);
    CHECK(error_line(head + "[embedded-surface]\neuler_char = 1\n") == 5);
    CHECK(error_line(head + "[cycles]\n2\n[threefold]\ngenus = 1\n") == 7);

    const std::string klein = "[surface]\nkind = non-orientable\ncrosscaps = 2\nboundary = 0\n";
    CHECK(error_line(klein + "[threefold]\ngenus = 1\nattaching = 1, 1\n") == 5);
    CHECK(error_line(klein + "[threefold]\ngenus = 1\nattaching = 1, 0\nbelt = 0, 0\n") == 7);
    CHECK(error_line(head + "[threefold]\ngenus = 1\nattaching = 0\nbelt = 0\n") == 1);
}

TEST_CASE("parse and serialize round trip") {
    for (const auto& entry : std::filesystem::directory_iterator(PINLEF_DATA_DIR)) {
        const auto doc = parse_document(slurp(entry.path().filename().string()));
        CHECK(parse_document(serialize_document(doc)) == doc);
        CHECK(serialize_document(parse_document(serialize_document(doc))) == serialize_document(doc));
    }

    std::mt19937 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const auto shapes = oracle::small_shapes(4);
        const auto sh = shapes[rng() % shapes.size()];
        const auto pool = oracle::two_sided_classes(sh);
        InputDocument doc{oracle::model_of(sh), {}, std::nullopt, {}};
        for (std::size_t i = 0, n = sh.rank() ? rng() % 4 : 0; i < n; ++i)
            doc.cycles.push_back(HomologyClass::z4(oracle::to_z4(pool[rng() % pool.size()])));
        for (std::size_t i = 0, n = rng() % 3; i < n; ++i) {
            const unsigned bits = rng() % 32;
            EmbeddedSurfaceBlock b;
            b.data = {std::uint8_t(bits & 1u), std::uint8_t((bits >> 1) & 1u), std::uint8_t((bits >> 2) & 1u),
                      std::uint8_t((bits >> 3) & 1u), std::uint8_t((bits >> 4) & 1u)};
            if (i == 0 && (rng() & 1u)) b.role = SurfaceRole::dual;
            doc.embedded_surfaces.push_back(b);
        }
        CHECK(parse_document(serialize_document(doc)) == doc);
    }

    const InputDocument disk{SurfaceModel::orientable(0, 1), {HomologyClass::z4({})}, std::nullopt, {}};
    CHECK_THROWS_AS(serialize_document(disk), InputError);
}

TEST_CASE("decide on the shipped examples") {
    const auto rp4 = run_text(Command::decide, slurp("rp4.pinlef"), KindSelection::both, OutputFormat::text);
    CHECK(contains(rp4.output, "Pin+: YES (2 structures); Pin-: NO (certificate: q⁻(c₁)=0≠2)"));
    CHECK(contains(rp4.output, "summary: Pin⁺ unobstructed, Pin⁻ obstructed"));
    CHECK(rp4.exit_code == 1);
    CHECK(run_text(Command::decide, slurp("rp4.pinlef"), KindSelection::plus, OutputFormat::text).exit_code == 0);

    const auto twisted = run_text(Command::decide, slurp("s2_twisted_rp2.pinlef"), KindSelection::minus, OutputFormat::text);
    CHECK(contains(twisted.output, "cycle relation: c₀ = c₁, {c₂, c₃}, k = 2"));

    const auto product = run_text(Command::decide, slurp("s2_times_rp2.pinlef"), KindSelection::plus, OutputFormat::machine);
    CHECK(contains(product.output, "exists = no"));
    CHECK(contains(product.output, "rank_system = 3"));
    CHECK(contains(product.output, "rank_augmented = 4"));

    const auto three = run_text(Command::decide, slurp("rp2_times_s1.pinlef"), KindSelection::both, OutputFormat::text);
    CHECK(contains(three.output, "Pin+: NO"));
    CHECK(contains(three.output, "Pin-: YES (4 structures)"));
    // Rows in a, then b order.
    CHECK(three.output.find("a₂ ") < three.output.find("b₁ "));

    const auto torus = run_text(Command::decide, slurp("torus_over_s2.pinlef"), KindSelection::both, OutputFormat::text);
    CHECK(torus.exit_code == 0);
    CHECK(contains(torus.output, "closed up over S²"));
}

TEST_CASE("enumerate, oracle and surface-info") {
    const auto plus = run_text(Command::enumerate, slurp("rp4.pinlef"), KindSelection::plus, OutputFormat::machine);
    CHECK(plus.exit_code == 0);
    CHECK(contains(plus.output, "structure = 0\nstructure = 1\n"));

    const std::string rp2 = "[surface]\nkind = non-orientable\ncrosscaps = 1\nboundary = 0\n";
    const auto none = run_text(Command::enumerate, rp2, KindSelection::plus, OutputFormat::text);
    CHECK(none.exit_code == 1);
    CHECK(contains(none.output, "(no structures)"));

    for (const char* name : {"rp4.pinlef", "s2_twisted_rp2.pinlef", "s2_times_rp2.pinlef", "rp2_times_s1.pinlef"}) {
        const auto r = run_text(Command::oracle, slurp(name), KindSelection::both, OutputFormat::text);
        CHECK(r.exit_code == 0);
        CHECK_FALSE(contains(r.output, "DISAGREE"));
    }

    const std::string big = "[surface]\nkind = orientable\ngenus = 11\nboundary = 0\n";
    const auto refused = run_text(Command::oracle, big, KindSelection::both, OutputFormat::text);
    CHECK(refused.exit_code == 2);
    CHECK(contains(refused.output, "oracle refused"));

    const auto info = run_text(Command::surface_info, "[surface]\nkind = non-orientable\ncrosscaps = 2\nboundary = 0\n",
                               KindSelection::both, OutputFormat::text);
    CHECK(contains(info.output, "Z/4 relations:\n  2 2\n"));
    CHECK(contains(info.output, "Pin+ structures on the surface: yes"));
}

TEST_CASE("input errors exit with 2 and reports are deterministic") {
    CHECK(run_text(Command::decide, "", KindSelection::both, OutputFormat::text).exit_code == 2);
    const std::string bad_three =
        "[surface]\nkind = non-orientable\ncrosscaps = 4\nboundary = 0\n[threefold]\ngenus = 2\n"
        "attaching = 1, 1, 0, 0\nattaching = 1, 0, 1, 0\nbelt = 0, 1, 1, 0\nbelt = 0, 0, 0, 0\n";
    const auto invalid = run_text(Command::decide, bad_three, KindSelection::minus, OutputFormat::text);
    CHECK(invalid.exit_code == 2);
    CHECK(contains(invalid.output, "INVALID INPUT"));

    for (const char* name : {"rp4.pinlef", "s2_times_rp2.pinlef", "rp2_times_s1.pinlef"}) {
        const auto a = run_text(Command::decide, slurp(name), KindSelection::both, OutputFormat::machine);
        const auto b = run_text(Command::decide, slurp(name), KindSelection::both, OutputFormat::machine);
        CHECK(a.output == b.output);
    }
}
