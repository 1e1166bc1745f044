#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <regex>
#include <set>

#include "eulersum/combinatorics.hpp"
#include "eulersum/constants.hpp"
#include "eulersum/identities.hpp"

using namespace eulersum;
using namespace eulersum::identities;
namespace comb = eulersum::combinatorics;

namespace {
oracle::Oracle& orc() {
    static oracle::Oracle o;
    return o;
}
const oracle::EvalConfig kCfg{};

Params P(std::initializer_list<std::pair<const char*, long>> kv) {
    Params p;
    for (const auto& [k, v] : kv) p.emplace(k, Rational(v));
    return p;
}
}  // namespace

TEST_CASE("registry shape") {
    const auto& recs = registry();
    CHECK(recs.size() >= 45);
    std::set<std::string> ids;
    for (const auto& r : recs) {
        CHECK(ids.insert(r.id).second);  // unique
        CHECK(!r.default_grid.empty());
        CHECK(r.default_tol > 0);
    }
    for (std::size_t i = 1; i < recs.size(); ++i) CHECK(recs[i - 1].id < recs[i].id);

    const auto* r212 = find("eq-2.12");
    REQUIRE(r212 != nullptr);
    CHECK(r212->param_names == std::vector<std::string>{"k"});

    const auto* golden = find("golden-3.s122");
    REQUIRE(golden != nullptr);
    CHECK(golden->description.find("41/12") != std::string::npos);

    CHECK(find("eq-9.99") == nullptr);
    CHECK_THROWS_WITH((void)verify("eq-9.99", {}, kCfg, orc()), "unknown identity id: eq-9.99");
}

TEST_CASE("every numbered equation is covered by a record or a note") {
    std::set<std::string> covered;
    for (const auto& r : registry()) covered.insert(r.equation);
    for (const auto& [eq, note] : out_of_scope_notes()) {
        CHECK(!note.empty());
        covered.insert(eq);
    }
    std::vector<std::string> wanted = {"(1.1)", "(1.2)"};
    for (int i = 1; i <= 44; ++i) wanted.push_back("(2." + std::to_string(i) + ")");
    for (int i = 1; i <= 21; ++i) wanted.push_back("(3." + std::to_string(i) + ")");
    for (const auto& eq : wanted) {
        INFO("equation ", eq);
        CHECK(covered.count(eq) == 1);
    }
    // golden records carry the section-level sources
    CHECK(find("golden-1.sbar103") != nullptr);
    CHECK(find("golden-4.ex9") != nullptr);
}

TEST_CASE("verify spot examples from the registry") {
    const auto r230 = verify("eq-2.30", P({{"k", 1}}), kCfg, orc());
    CHECK(r230.pass);
    CHECK(std::abs(r230.lhs.value - 1.2020569) < 1e-6);
    CHECK(std::abs(r230.rhs.value - constants::zeta(3).value) < 1e-12);

    const auto r12 = verify("eq-1.2", P({{"k", 1}}), kCfg, orc());
    CHECK(r12.pass);
    CHECK(std::abs(r12.rhs.value - 3.0 * constants::zeta(3).value) < 1e-12);
    CHECK(std::abs(r12.rhs.value - 3.6061707) < 1e-6);

    Params p235;
    p235["l1"] = Rational(1);
    p235["l2"] = Rational(1);
    p235["m"] = Rational(2);
    p235["x"] = make_rational(1, 2);
    p235["y"] = make_rational(1, 2);
    p235["z"] = make_rational(1, 2);
    const auto r235 = verify("eq-2.35", p235, kCfg, orc());
    CHECK(r235.pass);
    CHECK(r235.residual < 1e-9);

    const auto g7 = verify("golden-4.ex7", {}, kCfg, orc());
    CHECK(g7.pass);

    // parameter override outside the default grid
    const auto r221 = verify("eq-2.21", P({{"p", 4}, {"k", 20}}), kCfg, orc());
    CHECK(r221.pass);
    CHECK(r221.residual < 1e-7);
}

TEST_CASE("domain violations carry the constraint name") {
    CHECK_THROWS_WITH((void)verify("eq-2.10", P({{"m", 1}, {"r", 3}, {"k", 2}}), kCfg, orc()),
                      "eq-2.10: requires r < k");
    CHECK_THROWS((void)verify("eq-2.21", P({{"p", 1}, {"k", 2}}), kCfg, orc()));
    Params bad;
    bad["l1"] = Rational(1);
    bad["l2"] = Rational(2);
    bad["m"] = Rational(2);
    bad["x"] = Rational(1);  // Li_1(1) diverges
    bad["y"] = make_rational(1, 2);
    bad["z"] = make_rational(1, 2);
    CHECK_THROWS((void)verify("eq-2.35", bad, kCfg, orc()));
}

TEST_CASE("eq-2.10 at r = 0 gives values identical to eq-2.1") {
    for (long k : {1, 2, 5}) {
        const auto a = verify("eq-2.1", P({{"m", 2}, {"k", k}}), kCfg, orc());
        const auto b = verify("eq-2.10", P({{"m", 2}, {"r", 0}, {"k", k}}), kCfg, orc());
        CHECK(std::abs(a.lhs.value - b.lhs.value) < 1e-15);
        CHECK(std::abs(a.rhs.value - b.rhs.value) < 1e-15);
    }
    for (long k : {1, 3}) {
        const auto a = verify("eq-2.2", P({{"m", 2}, {"k", k}}), kCfg, orc());
        const auto b = verify("eq-2.11", P({{"m", 2}, {"r", 0}, {"k", k}}), kCfg, orc());
        CHECK(std::abs(a.rhs.value - b.rhs.value) < 1e-15);
    }
}

TEST_CASE("eq-2.27 and eq-2.21 Bell-term bookkeeping is exact") {
    // sum_{n<=k-1} Y_{p-1}(n)/n = Y_p(k)/p - Y_{p-1}(k)/k (rational identity
    // behind the unified r = 0 / r >= 1 right-hand sides)
    for (int p : {2, 3, 4})
        for (long k : {1L, 2L, 5L, 9L}) {
            Rational lhs(0);
            for (long n = 1; n <= k - 1; ++n) lhs += comb::bell_Y(p - 1, n) / n;
            const Rational rhs = comb::bell_Y(p, k) / p - comb::bell_Y(p - 1, k) / k;
            CHECK(lhs + comb::bell_Y(p - 1, k) / k == comb::bell_Y(p, k) / p);
            CHECK(lhs == rhs);
        }
    // and eq-2.27 at r = 1 equals Y_p(k-1)/p exactly on the closed-form side
    const auto r = verify("eq-2.27", P({{"p", 3}, {"r", 1}, {"k", 4}}), kCfg, orc());
    CHECK(std::abs(r.rhs.value - to_double(comb::bell_Y(3, 3) / 3)) < 1e-15);
    CHECK(r.pass);
}

TEST_CASE("eq-2.35 swap symmetry") {
    Params a;
    a["l1"] = Rational(1);
    a["l2"] = Rational(2);
    a["m"] = Rational(2);
    a["x"] = make_rational(1, 2);
    a["y"] = make_rational(-1, 2);
    a["z"] = make_rational(1, 2);
    Params b = a;
    std::swap(b["l1"], b["l2"]);
    std::swap(b["x"], b["y"]);
    const auto ra = verify("eq-2.35", a, kCfg, orc());
    const auto rb = verify("eq-2.35", b, kCfg, orc());
    const double da = ra.lhs.value - ra.rhs.value;
    const double db = rb.lhs.value - rb.rhs.value;
    CHECK(std::abs(da - db) < 1e-12);
}

TEST_CASE("residual scaling decreases with N") {
    const long Ns[] = {10000, 100000, 1000000};
    const auto r1 = residual_scaling("eq-2.12", P({{"k", 3}}), Ns, orc());
    REQUIRE(r1.size() == 3);
    CHECK((r1[1] < r1[0] || r1[1] < 1e-12));
    CHECK((r1[2] < r1[1] || r1[2] < 1e-12));
    const auto r2 = residual_scaling("eq-2.21", P({{"p", 2}, {"k", 2}}), Ns, orc());
    CHECK((r2[1] < r2[0] || r2[1] < 1e-12));
    CHECK((r2[2] < r2[1] || r2[2] < 1e-12));
    CHECK_THROWS(residual_scaling("eq-2.12", P({{"k", 3}}), std::vector<long>{1000}, orc()));
}

TEST_CASE("misprinted closed forms are reported unconfirmed with diagnostics") {
    const auto ex1 = verify("golden-4.ex1", {}, kCfg, orc());
    CHECK(ex1.status == "unconfirmed");
    CHECK(!ex1.pass);
    // the stable residual is exactly (5/4) zeta(4) = the misprinted -41/16 vs -61/16 gap
    CHECK(std::abs(ex1.residual - 1.25 * constants::zeta(4).value) < 1e-9);
    CHECK(ex1.message.find("stable") != std::string::npos);

    const auto fixed = verify("golden-4.ex1-corrected", {}, kCfg, orc());
    CHECK(fixed.pass);
    CHECK(fixed.residual < 1e-9);

    const auto e33 = verify("eq-3.3", P({{"l", 1}}), kCfg, orc());
    CHECK(e33.status == "unconfirmed");
    const auto e33c = verify("eq-3.3-corrected", P({{"l", 1}}), kCfg, orc());
    CHECK(e33c.pass);

    const auto e321 = verify("eq-3.21", P({{"p", 2}, {"m", 1}}), kCfg, orc());
    CHECK(e321.status == "unconfirmed");
    const auto e321c = verify("eq-3.21-corrected", P({{"p", 2}, {"m", 1}}), kCfg, orc());
    CHECK(e321c.pass);
}

TEST_CASE("verify_all filtering and determinism") {
    const auto only2 = verify_all(kCfg, orc(), "eq-2.3?");
    CHECK(!only2.empty());
    for (const auto& r : only2) {
        CHECK(r.id.size() == 7);
        CHECK(r.id.substr(0, 6) == "eq-2.3");
    }
    const auto a = verify_all(kCfg, orc(), "eq-2.30");
    const auto b = verify_all(kCfg, orc(), "eq-2.30");
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].lhs.value == b[i].lhs.value);
        CHECK(a[i].rhs.value == b[i].rhs.value);
        CHECK(a[i].status == b[i].status);
    }
    // jobs > 1 returns the same ordered results
    const auto c = verify_all(kCfg, orc(), "eq-2.3*", 2);
    const auto d = verify_all(kCfg, orc(), "eq-2.3*", 1);
    REQUIRE(c.size() == d.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        CHECK(c[i].id == d[i].id);
        CHECK(c[i].lhs.value == d[i].lhs.value);
    }
}

TEST_CASE("filter matching") {
    CHECK(matches_filter("eq-2.12", "eq-2.*"));
    CHECK(matches_filter("eq-2.12", "*2.1?"));
    CHECK(!matches_filter("eq-3.12", "eq-2.*"));
    CHECK(matches_filter("anything", ""));
}
