#include <doctest.h>

#include "bergehit/generators.hpp"
#include "bergehit/io.hpp"

using namespace bergehit;

TEST_CASE("certificate round trip") {
    BergePath p{{0, 2, 1}, {3, 4}};
    auto j = certificate_json(p);
    CHECK(j.dump() == R"({"vertices":[0,2,1],"edge_ids":[3,4],"cycle":false})");
    CHECK(path_from_json(j).vertices == p.vertices);
    CHECK(path_from_json(j).edge_ids == p.edge_ids);
    CHECK_THROWS(cycle_from_json(j));

    BergeCycle c{{0, 1, 2}, {0, 1, 2}};
    auto back = cycle_from_json(Json::parse(certificate_json(c).dump()));
    CHECK(back.vertices == c.vertices);
    CHECK(back.edge_ids == c.edge_ids);
    CHECK_THROWS(path_from_json(Json::parse(R"({"cycle":false})")));
}

TEST_CASE("outcome and step json") {
    auto out = decide_hamiltonian(complete(5, 3));
    auto j = outcome_json(out);
    CHECK(j["verdict"] == "yes");
    CHECK(j["provenance"] == "rotation");
    CHECK(j["certificate"]["cycle"] == true);

    AbsorptionStep st;
    st.step = 1;
    st.added = {4, 9};
    auto line = trace_json_lines({st, st});
    CHECK(std::count(line.begin(), line.end(), '\n') == 2);
    CHECK(step_json(st)["arity"] == 2);
}

TEST_CASE("threshold and property json") {
    auto rep = threshold_report(complete(30, 3), 0.3, 1);
    auto j = threshold_json(rep);
    CHECK(j["log_base"] == "e");
    CHECK(j["N"] == 4060);
    CHECK(j.contains("L3_ok"));

    auto props = properties_json(property_report(two_cliques(8, 3), 0.5));
    REQUIRE(props.size() == 7);
    CHECK(props[6]["property"] == "P7");
    CHECK(props[6]["status"] == "violated");
    CHECK(props[6]["U"].size() == 4);
}

TEST_CASE("trials csv") {
    TrialBatch b;
    TrialRecord a;
    a.trial = 0;
    a.seed = 7;
    a.tau2 = 12;
    a.tau_bh_status = TauStatus::found;
    a.tau_bh = 12;
    a.coincide = true;
    a.provenance = Provenance::rotation;
    a.millis = 1.5;
    TrialRecord c;
    c.trial = 1;
    c.seed = 6;
    c.tau2 = 10;
    c.tau_bh_status = TauStatus::inconclusive;
    b.records = {a, c};
    const std::string want =
        "# host x\n"
        "trial,seed,tau2,tauBH,coincide,provenance,millis\n"
        "0,7,12,12,1,rotation,\n"
        "1,6,10,inconclusive,,none,\n";
    CHECK(trials_csv(b, {"host x"}, false) == want);
    CHECK(trials_csv(b, {}, true).find("rotation,1.500") != std::string::npos);

    b.summary = summarize(b.records);
    auto s = summary_json(b.summary);
    CHECK(s["trials"] == 2);
    CHECK(s["coincidences"] == 1);
    CHECK(s["inconclusive"] == 1);
    CHECK(s["tau2"]["median"] == 11.0);
}
