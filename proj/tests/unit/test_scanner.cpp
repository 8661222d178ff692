#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "../oracles.hpp"
#include "tamekernel/scanner.hpp"
#include "tamekernel/serialize.hpp"

using namespace tamekernel;

namespace {

std::vector<std::int64_t> values(const std::vector<Discriminant>& ds) {
    std::vector<std::int64_t> out;
    for (const auto& d : ds) out.push_back(d.value);
    return out;
}

// every fundamental D <= max whose tag matches, found by testing each integer
std::vector<std::int64_t> brute_family(const FamilySelector& f, std::int64_t max_D) {
    std::vector<std::int64_t> out;
    for (std::int64_t D = 5; D <= max_D; ++D) {
        if (!oracle::fundamental(D)) continue;
        FamilyTag t = classify(make_discriminant(D));
        if (t.kind == f.kind && (!f.n || *f.n == t.n)) out.push_back(D);
    }
    return out;
}

}  // namespace

TEST_SUITE("scanner") {

TEST_CASE("family selectors") {
    CHECK(parse_family("thm1-n4").kind == FamilyKind::Mod83Case2c);
    CHECK(parse_family("thm1-n4").n == 4);
    CHECK(parse_family("thm2-1").kind == FamilyKind::Mod5OddN);
    CHECK(parse_family("thm2-2").kind == FamilyKind::Mod83Case1);
    CHECK(parse_family("mod85-general").kind == FamilyKind::GeneralMod5);
    CHECK(parse_family("mod83-general").kind == FamilyKind::GeneralMod83);
    CHECK(parse_family("Mod83-Case2b").kind == FamilyKind::Mod83Case2b);
    CHECK_THROWS_AS(parse_family("thm1-n3"), DomainError);
    CHECK_THROWS_AS(parse_family("thm1-nx"), DomainError);
    CHECK_THROWS_AS(parse_family("bogus"), DomainError);
    CHECK_THROWS_AS(parse_family("None"), DomainError);
}

TEST_CASE("small enumerations") {
    CHECK(values(enumerate_family(parse_family("thm2-1"), 100)) == std::vector<std::int64_t>{5, 13, 29, 37, 53, 61});
    CHECK(enumerate_family(parse_family("thm2-1"), 4).empty());
    CHECK(enumerate_family(parse_family("thm1-n4"), 4).empty());
    CHECK_THROWS_AS(enumerate_family(parse_family("thm2-1"), 100000001), DomainError);
}

TEST_CASE("enumeration is complete") {
    const std::int64_t bound = 60000;
    for (const char* name : {"thm1", "thm1-n2", "thm1-n4", "thm2-1", "thm2-2", "mod85-general", "mod83-general",
                             "Mod5-EvenN", "Mod83-Case2a", "Mod83-Case2b"}) {
        INFO(name);
        FamilySelector f = parse_family(name);
        CHECK(values(enumerate_family(f, bound)) == brute_family(f, bound));
    }
    std::vector<std::int64_t> all;
    for (std::int64_t D = 5; D <= bound; ++D) {
        if (oracle::fundamental(D) && classify(make_discriminant(D)).kind != FamilyKind::None) all.push_back(D);
    }
    CHECK(values(enumerate_classified(bound)) == all);
}

TEST_CASE("table rows") {
    std::vector<TableRow> rows = build_table(parse_family("thm1-n4"), 4 * 26455);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].D_over_4 == 7215);
    CHECK(rows[0].primes == std::vector<std::int64_t>{3, 5, 13, 37});
    CHECK(rows[0].neg_L == Rational(240480));
    CHECK(rows[0].delta == 3);
    CHECK(rows[1].D_over_4 == 26455);
    CHECK(rows[1].primes == std::vector<std::int64_t>{11, 13, 5, 37});
    CHECK(rows[1].neg_L == Rational(1997920));
    CHECK(rows[1].delta == 3);
    CHECK(build_table(parse_family("thm1-n4"), 100).empty());

    std::ostringstream csv;
    write_csv(csv, rows);
    CHECK(csv.str() ==
          "D,D_over_4,p1,p2,p3,p4,neg_L,delta\n"
          "28860,7215,3,5,13,37,240480,3\n"
          "105820,26455,11,13,5,37,1997920,3\n");

    std::ostringstream empty;
    write_csv(empty, {});
    CHECK(empty.str() == "D,D_over_4,p1,p2,p3,p4,neg_L,delta\n");

    std::ostringstream jl;
    write_json_lines(jl, rows);
    std::istringstream lines(jl.str());
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        Json j = Json::parse(line);
        CHECK(j.dump() == line);
        CHECK(j["D"] == json_number(rows[static_cast<std::size_t>(count)].D));
        ++count;
    }
    CHECK(count == 2);
}

TEST_CASE("wide rows pad the prime columns") {
    std::vector<TableRow> rows = build_table(parse_family("thm2-1"), 2405);
    std::ostringstream csv;
    write_csv(csv, rows);
    CHECK(csv.str().rfind("D,D_over_4,p1,p2,p3,p4,neg_L,delta\n5,5,5,,,,2/5,\n", 0) == 0);
    CHECK(csv.str().find("2405,2405,5,13,37,,") != std::string::npos);
}

TEST_CASE("output does not depend on the worker count") {
    setenv("TAMEKERNEL_THREADS", "1", 1);
    std::ostringstream one;
    write_csv(one, build_table(parse_family("thm1"), 400000));
    setenv("TAMEKERNEL_THREADS", "4", 1);
    std::ostringstream four;
    write_csv(four, build_table(parse_family("thm1"), 400000));
    unsetenv("TAMEKERNEL_THREADS");
    CHECK(one.str() == four.str());
}

}
