#include <catch_amalgamated.hpp>

#include <isharp/isharp.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace isharp;

namespace {

const Dataset& ds() { return bundled_dataset(); }

std::string extra_t1(const char* key, const char* payload) {
    return std::string("{\"schema_version\":1,\"table\":\"T1\",\"key\":\"") + key + "\",\"payload\":" + payload +
           ",\"citation\":\"Table 1\"}\n";
}

std::vector<std::string> split_citation(const std::string& c) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= c.size()) {
        std::size_t end = c.find("; ", start);
        if (end == std::string::npos) end = c.size();
        out.push_back(c.substr(start, end - start));
        start = end + 2;
    }
    return out;
}

}  // namespace

TEST_CASE("the bundled dataset loads without violations") {
    CHECK_NOTHROW(check_integrity(ds()));
    CHECK(&default_dataset() != nullptr);
    CHECK(ds().table(tables::census).size() == 20);
}

TEST_CASE("records violating the r0 bounds are rejected") {
    std::string base = ds().save();
    CHECK_THROWS_AS(load_text(base + extra_t1("9_42", "{\"nu\":2,\"r0\":1}")), IntegrityError);
    CHECK_THROWS_WITH(load_text(base + extra_t1("9_42", "{\"nu\":1,\"r0\":2}")), Catch::Matchers::ContainsSubstring("mod 2"));
    CHECK_NOTHROW(load_text(base + extra_t1("9_42", "{\"nu\":1,\"r0\":3}")));
}

TEST_CASE("malformed lines report their line number") {
    std::string base = ds().save();
    std::size_t lines = ds().records().size();
    CHECK_THROWS_WITH(load_text(base + "{bad\n"), Catch::Matchers::StartsWith("line " + std::to_string(lines + 1) + ":"));
    CHECK_THROWS_AS(load_text("{\"table\":\"T1\"}\n"), std::exception);
}

TEST_CASE("lookups") {
    const Record& t1 = ds().lookup(tables::nu_r0, "8_5");
    CHECK(t1.payload.at("nu") == 3);
    CHECK(t1.payload.at("r0") == 11);

    const Record& t2 = ds().lookup(tables::census, "13");
    CHECK(t2.payload.at("name") == "m007(1,2)");
    CHECK(t2.payload.at("h1") == 21);
    CHECK(t2.payload.at("dim") == 21);

    const Record& t5 = ds().lookup(tables::spectral, "10_153");
    CHECK(t5.payload.at("det") == 1);
    CHECK(t5.payload.at("odd_khovanov_dim") == 9);
    CHECK(t5.payload.at("sigma2") == "surg(P(7,3,-3); 1/1)");
    CHECK(t5.payload.at("dim").at("exact") == 5);

    CHECK_THROWS_AS(ds().lookup(tables::nu_r0, "9_42"), DomainError);
    CHECK(ds().find(tables::nu_r0, "9_42") == nullptr);
}

TEST_CASE("save and parse round-trip") {
    std::string text = ds().save();
    Dataset again = Dataset::parse(text);
    CHECK(again == ds());
    CHECK(again.save() == text);
}

TEST_CASE("the data file matches the bundled data") {
    Dataset file = load(std::string(ISHARP_SOURCE_DIR) + "/data/isharp.jsonl");
    CHECK(file == ds());
    CHECK_THROWS_AS(load(std::string(ISHARP_SOURCE_DIR) + "/data/missing.jsonl"), DomainError);
}

TEST_CASE("every citation names a CITE entry") {
    for (const auto& r : ds().records()) {
        if (r.table == tables::citations) continue;
        for (const auto& c : split_citation(r.citation)) {
            INFO(r.table << " " << r.key << ": " << c);
            CHECK(ds().find(tables::citations, c) != nullptr);
        }
    }
}

TEST_CASE("every rule id has a name and a citation") {
    for (int i = 1; i <= 14; ++i) {
        std::string id = "R" + std::to_string(i);
        INFO(id);
        CHECK_FALSE(ds().rule_citation(id).empty());
    }
}

TEST_CASE("verification re-derives every table") {
    for (const auto& t : verifiable_tables()) {
        VerifyReport r = verify_table(t, ds());
        INFO(t);
        CHECK_FALSE(r.rows.empty());
        for (const auto& row : r.rows)
            if (!row.pass) FAIL_CHECK(row.table << " " << row.key << " " << row.field << ": expected " << row.expected << ", got " << row.got);
    }
}

TEST_CASE("verification rows named in the tables") {
    VerifyReport t4 = verify_table(tables::integer_surgeries, ds());
    bool found = false;
    for (const auto& row : t4.rows)
        if (row.key == "8_2" && row.field == "dim") {
            found = true;
            CHECK(row.got == "19");
            CHECK(row.pass);
        }
    CHECK(found);

    VerifyReport t8 = verify_table(tables::census_triads, ds());
    found = false;
    for (const auto& row : t8.rows)
        if (row.key == "7" && row.field == "result") {
            found = true;
            CHECK(row.got == "{10,12}");
            CHECK(row.pass);
        }
    CHECK(found);
}

TEST_CASE("a corrupted table value fails verification") {
    std::string text = ds().save();
    std::string from = "\"name\":\"m015(5,1)\",\"snappy_knot\":\"5_2(7,1)\",\"manifold\":\"surg(m(5_2); 7/1)\",\"h1\":7,\"dim\":9";
    std::size_t pos = text.find(from);
    REQUIRE(pos != std::string::npos);
    text.replace(pos, from.size(), "\"name\":\"m015(5,1)\",\"snappy_knot\":\"5_2(7,1)\",\"manifold\":\"surg(m(5_2); 7/1)\",\"h1\":7,\"dim\":11");
    Dataset bad = Dataset::parse(text);
    VerifyReport r = verify_table(tables::census_surgeries, bad);
    CHECK_FALSE(r.ok());
}

TEST_CASE("export writes tab-separated rows") {
    std::string tsv = export_tsv(tables::nu_r0, ds());
    std::istringstream in(tsv);
    std::string header, line;
    std::getline(in, header);
    CHECK(header.find('\t') != std::string::npos);
    std::size_t rows = 0;
    bool saw = false;
    while (std::getline(in, line)) {
        ++rows;
        if (line.rfind("8_5\t", 0) == 0) {
            saw = true;
            CHECK(line.find("\t3\t") != std::string::npos);
        }
    }
    CHECK(rows == ds().table(tables::nu_r0).size());
    CHECK(saw);
    CHECK_THROWS_AS(export_tsv("T99", ds()), DomainError);
}
